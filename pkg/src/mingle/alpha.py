"""Equilibrium under general cost convexity: time costs scale as (quantity)^alpha.

Only the cost side changes; the benefit side of the first-order condition is
untouched, so the equation becomes

    c ((n-1) p)^(alpha - 1) = (v1 - v2) + v2 (1-p)^(n-2) (1+p)^(n-3) (1 + (n-1)p).

This is the stationarity condition of the agent's own-probability utility and
is validated against a finite-difference check in the tests. At alpha = 2 it
is exactly the baseline equilibrium condition. For alpha < 2 the equation can
hold at several probabilities; the solver returns the smallest one (the
low-intensity branch), which disappears at a v2 threshold that moves lower as
costs become less convex, producing the characteristic jump of the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .equilibrium import EquilibriumSolution, solve_symmetric_equilibrium
from .params import ModelParams


@dataclass(frozen=True)
class AlphaSweepRow:
    """One grid point of a cost-convexity sweep."""

    alpha: float
    v2: float
    p_star: float
    expected_degree: float


def solve_alpha_equilibrium(params: ModelParams, tol: float = 1e-12) -> EquilibriumSolution:
    """Symmetric equilibrium for the alpha-cost model (any alpha > 1).

    Delegates to the shared FOC solver, which performs guaranteed bisection
    for alpha = 2 and a dense-scan-plus-bisection for other exponents; the
    two agree identically at alpha = 2.
    """
    if params.alpha <= 1:
        raise ValueError(f"cost exponent alpha must exceed 1, got {params.alpha}")
    return solve_symmetric_equilibrium(params, tol)


def alpha_sweep(params: ModelParams, alpha_list: Sequence[float],
                v2_grid: Iterable[float]) -> list[AlphaSweepRow]:
    """Solve on the alpha x v2 grid, rows ordered alpha-major then v2."""
    rows = []
    v2_values = list(v2_grid)
    for alpha in alpha_list:
        for v2 in v2_values:
            solution = solve_alpha_equilibrium(replace(params, v2=v2, alpha=alpha))
            rows.append(AlphaSweepRow(
                alpha=alpha,
                v2=v2,
                p_star=solution.p_star,
                expected_degree=solution.expected_degree,
            ))
    return rows
