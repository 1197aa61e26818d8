"""Command-line entry point: reproducible experiments with CSV outputs.

Every subcommand is a pure function of its effective configuration (config
file values overridden by explicit flags), writes deterministic bytes, and
echoes the effective configuration to a ``<out>.config`` sidecar for
provenance. Outputs are data files only; plotting is left to other tools.

Exit codes: 0 success, 2 invalid input, 3 solver non-convergence.
"""

from __future__ import annotations

import argparse
import configparser
import math
import os
import sys

import numpy as np

from .alpha import alpha_sweep
from .equilibrium import solve_symmetric_equilibrium
from .graphstats import count_isolated_triangles, network_stats, unilateral_stability
from .hetero import CostDistribution, hetero_threshold, solve_hetero_equilibrium
from .params import ModelParams
from .planner import solve_efficient
from .sampler import mix_seed, sample_equilibrium_network, write_edge_list

FORMAT_VERSION = "1"


class CliError(ValueError):
    """Invalid input: bad flag value, malformed config, or invalid parameters."""


class NonConvergence(RuntimeError):
    """A solver failed to converge within its iteration budget."""


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(f"# format_version={FORMAT_VERSION}\n")
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_sidecar(out: str, section: str, effective: dict) -> None:
    with open(f"{out}.config", "w", newline="\n") as fh:
        fh.write(f"[{section}]\n")
        fh.write(f"format_version = {FORMAT_VERSION}\n")
        for key in sorted(effective):
            if effective[key] is not None:
                fh.write(f"{key} = {_fmt(effective[key])}\n")


# per-subcommand option schema: name -> (converter, default); REQUIRED means
# the value must come from the config file or an explicit flag
_REQUIRED = object()


def _floats_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


_SCHEMAS: dict[str, dict] = {
    "solve": {
        "n": (int, _REQUIRED), "v1": (float, _REQUIRED), "v2": (float, _REQUIRED),
        "c": (float, _REQUIRED), "alpha": (float, 2.0),
    },
    "sweep": {
        "n": (int, _REQUIRED), "v1": (float, _REQUIRED), "c": (float, _REQUIRED),
        "alphas": (_floats_list, [2.0]),
        "v2_start": (float, 0.0), "v2_stop": (float, 1.0), "v2_step": (float, 0.005),
    },
    "simulate": {
        "n": (int, _REQUIRED), "v1": (float, _REQUIRED), "v2": (float, _REQUIRED),
        "c": (float, _REQUIRED), "alpha": (float, 2.0),
        "samples": (int, 100), "seed": (int, 0),
        "maintenance_cost": (float, None), "dump_edges": (str, None),
    },
    "stability": {
        "n": (int, _REQUIRED), "v1": (float, _REQUIRED), "v2": (float, _REQUIRED),
        "c": (float, _REQUIRED), "alpha": (float, 2.0),
        "samples": (int, 100), "seed": (int, 0),
        "maintenance_cost": (float, _REQUIRED),
    },
    "reproduce-fig2": {
        "n": (int, 8000), "v1": (float, 1.0), "c": (float, 0.5), "v2_step": (float, 0.005),
    },
    "reproduce-fig3": {
        "n": (int, 8000), "v1": (float, 1.0), "c": (float, 0.5),
        "alphas": (_floats_list, [1.6, 1.8, 2.0, 2.2]), "v2_step": (float, 0.005),
    },
    "hetero-solve": {
        "n": (int, _REQUIRED), "v1": (float, _REQUIRED), "v2": (float, _REQUIRED),
        "costs": (_floats_list, _REQUIRED), "probs": (_floats_list, _REQUIRED),
        "tol": (float, 1e-10), "max_iter": (int, 1000),
    },
}


def _effective_config(command: str, args: argparse.Namespace) -> dict:
    """Schema defaults, overlaid by the config file section, overlaid by flags."""
    schema = _SCHEMAS[command]
    effective = {}
    for key, (_, default) in schema.items():
        effective[key] = None if default is _REQUIRED else default
    if args.config is not None:
        parser = configparser.ConfigParser()
        try:
            read = parser.read(args.config)
        except configparser.Error as exc:
            raise CliError(f"malformed config file {args.config}: {exc}") from exc
        if not read:
            raise CliError(f"config file not found: {args.config}")
        if parser.has_section(command):
            for key, raw in parser.items(command):
                if key == "format_version":
                    continue
                if key == "out":
                    if args.out is None:
                        args.out = raw
                    continue
                if key not in schema:
                    raise CliError(f"unknown key {key!r} in config section [{command}]")
                try:
                    effective[key] = schema[key][0](raw)
                except ValueError as exc:
                    raise CliError(f"bad value for {key!r} in config: {raw!r}") from exc
    for key in schema:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            effective[key] = flag_value
    missing = [k for k, (_, d) in schema.items() if d is _REQUIRED and effective[k] is None]
    if missing:
        raise CliError(f"missing required parameter(s) for {command}: {', '.join(missing)}")
    if args.out is None:
        raise CliError("an output path is required (--out or config key 'out')")
    return effective


def _model_params(cfg: dict, v2=None) -> ModelParams:
    try:
        return ModelParams(
            n=cfg["n"], v1=cfg["v1"], v2=cfg["v2"] if v2 is None else v2,
            c=cfg["c"], alpha=cfg.get("alpha", 2.0),
        )
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_solve(cfg: dict, out: str) -> None:
    params = _model_params(cfg)
    eq = solve_symmetric_equilibrium(params)
    eff = solve_efficient(params)
    _write_csv(out, ["n", "v1", "v2", "c", "alpha", "p_eq", "degree_eq", "regime_eq",
                     "p_eff", "degree_eff", "regime_eff", "welfare_eq", "welfare_eff"],
               [[params.n, params.v1, params.v2, params.c, params.alpha,
                 eq.p_star, eq.expected_degree, eq.regime.regime,
                 eff.p_hat, eff.expected_degree, eff.regime.regime,
                 eq.welfare_per_agent, eff.welfare_per_agent]])


def _v2_grid(stop: float, step: float) -> list[float]:
    count = int(round(stop / step)) + 1
    return [round(k * step, 12) for k in range(count)]


def cmd_sweep(cfg: dict, out: str) -> None:
    base = ModelParams(n=cfg["n"], v1=cfg["v1"], v2=0.0, c=cfg["c"])
    grid = [v for v in _v2_grid(cfg["v2_stop"], cfg["v2_step"]) if v >= cfg["v2_start"]]
    grid = [v for v in grid if v < base.v1]  # the model needs v1 > v2
    rows = [[r.alpha, r.v2, r.p_star, r.expected_degree]
            for r in alpha_sweep(base, cfg["alphas"], grid)]
    _write_csv(out, ["alpha", "v2", "p_star", "expected_degree"], rows)


def cmd_reproduce_fig2(cfg: dict, out: str) -> None:
    rows = []
    for v2 in _v2_grid(1.0, cfg["v2_step"]):
        if v2 >= cfg["v1"]:
            break
        params = ModelParams(n=cfg["n"], v1=cfg["v1"], v2=v2, c=cfg["c"])
        eq = solve_symmetric_equilibrium(params)
        eff = solve_efficient(params)
        rows.append([v2, eq.expected_degree, eff.expected_degree])
    _write_csv(out, ["v2", "degree_eq", "degree_eff"], rows)


def cmd_reproduce_fig3(cfg: dict, out: str) -> None:
    base = ModelParams(n=cfg["n"], v1=cfg["v1"], v2=0.0, c=cfg["c"])
    grid = [v for v in _v2_grid(1.0, cfg["v2_step"]) if v < cfg["v1"]]
    rows = [[r.alpha, r.v2, r.expected_degree]
            for r in alpha_sweep(base, cfg["alphas"], grid)]
    _write_csv(out, ["alpha", "v2", "degree_eq"], rows)


def cmd_simulate(cfg: dict, out: str) -> None:
    params = _model_params(cfg)
    if cfg["samples"] < 1:
        raise CliError("samples must be at least 1")
    ctilde = cfg["maintenance_cost"]
    header = ["sample_index", "seed", "n_edges", "is_connected", "largest_component",
              "diameter", "isolated_triangles"]
    if ctilde is not None:
        header.append("stable")
    if cfg["dump_edges"] is not None:
        os.makedirs(cfg["dump_edges"], exist_ok=True)
    rows = []
    stats_list = []
    for k in range(cfg["samples"]):
        seed = mix_seed(cfg["seed"], k)
        net = sample_equilibrium_network(params, seed)
        stats = network_stats(net)
        row = [k, seed, net.num_edges, stats.is_connected, stats.largest_component_size,
               stats.diameter if math.isinf(stats.diameter) else int(stats.diameter),
               stats.isolated_triangle_count]
        if ctilde is not None:
            report = unilateral_stability(net, params.v1, params.v2, ctilde)
            row.append(report.is_unilaterally_stable)
        if cfg["dump_edges"] is not None:
            write_edge_list(net, os.path.join(cfg["dump_edges"], f"sample_{k:05d}.edges"))
        rows.append(row)
        stats_list.append(row)
    finite_diams = [r[5] for r in stats_list if not (isinstance(r[5], float) and math.isinf(r[5]))]
    summary = ["summary", "",
               float(np.mean([r[2] for r in stats_list])),
               float(np.mean([1.0 if r[3] else 0.0 for r in stats_list])),
               float(np.mean([r[4] for r in stats_list])),
               float(np.mean(finite_diams)) if finite_diams else "",
               float(np.mean([r[6] for r in stats_list]))]
    if ctilde is not None:
        summary.append(float(np.mean([1.0 if r[7] else 0.0 for r in stats_list])))
    rows.append(summary)
    _write_csv(out, header, rows)


def cmd_stability(cfg: dict, out: str) -> None:
    params = _model_params(cfg)
    if cfg["samples"] < 1:
        raise CliError("samples must be at least 1")
    rows = []
    stable_count = 0
    total_violations = 0
    for k in range(cfg["samples"]):
        seed = mix_seed(cfg["seed"], k)
        net = sample_equilibrium_network(params, seed)
        report = unilateral_stability(net, params.v1, params.v2, cfg["maintenance_cost"])
        stable_count += report.is_unilaterally_stable
        total_violations += len(report.violating_links)
        rows.append([k, seed, net.num_edges, count_isolated_triangles(net),
                     len(report.violating_links), report.is_unilaterally_stable])
    rows.append(["summary", "", "", "",
                 total_violations / cfg["samples"], stable_count / cfg["samples"]])
    _write_csv(out, ["sample_index", "seed", "n_edges", "isolated_triangles",
                     "violations", "stable"], rows)


def cmd_hetero_solve(cfg: dict, out: str) -> None:
    try:
        dist = CostDistribution(np.array(cfg["costs"]), np.array(cfg["probs"]))
        params = ModelParams(n=cfg["n"], v1=cfg["v1"], v2=cfg["v2"], c=float(dist.mean_cost))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    result = solve_hetero_equilibrium(dist, params, tol=cfg["tol"], max_iter=cfg["max_iter"])
    if not result.converged:
        raise NonConvergence(
            f"best-response iteration did not converge in {cfg['max_iter']} iterations "
            f"(largest residual {np.abs(result.residuals).max():.3e})"
        )
    tau = hetero_threshold(dist).tau
    rows = []
    for h in range(dist.m):
        rows.append([h, float(dist.costs[h]), float(dist.sociabilities[h]),
                     float(result.intensities[h]), float(result.residuals[h]),
                     float(result.expected_degrees[h]), tau,
                     result.converged, result.iterations])
    _write_csv(out, ["type_index", "cost", "sociability", "intensity", "residual",
                     "expected_degree", "tau", "converged", "iterations"], rows)


_HANDLERS = {
    "solve": cmd_solve,
    "sweep": cmd_sweep,
    "simulate": cmd_simulate,
    "stability": cmd_stability,
    "reproduce-fig2": cmd_reproduce_fig2,
    "reproduce-fig3": cmd_reproduce_fig3,
    "hetero-solve": cmd_hetero_solve,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mingle",
        description="Equilibrium solving and network simulation for the socializing game.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="INI config file with a [%s] section" % name)
        p.add_argument("--out", help="output CSV path")
        schema = _SCHEMAS[name]
        for key, (conv, default) in schema.items():
            flag = "--" + key.replace("_", "-")
            kwargs = {"default": None, "dest": key}
            if conv is int:
                kwargs["type"] = int
            elif conv is float:
                kwargs["type"] = float
            elif conv is _floats_list:
                kwargs["type"] = _floats_list
                kwargs["metavar"] = "X,Y,..."
            p.add_argument(flag, **kwargs)
        return p

    add("solve", "solve equilibrium and efficient intensities for one parameter point")
    add("sweep", "equilibrium degree over an alpha x v2 grid")
    add("simulate", "sample equilibrium networks and report their statistics")
    add("stability", "severing stability of sampled equilibrium networks")
    add("reproduce-fig2", "equilibrium vs efficient degree as v2 varies")
    add("reproduce-fig3", "equilibrium degree across cost-convexity exponents")
    add("hetero-solve", "symmetric equilibrium with heterogeneous private costs")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _effective_config(args.command, args)
        _HANDLERS[args.command](cfg, args.out)
        _write_sidecar(args.out, args.command, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
