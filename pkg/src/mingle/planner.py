"""Utilitarian planner: the best uniform linking probability and the welfare gap.

The planner chooses one probability p for every pair to maximize per-agent
symmetric welfare, so its first-order condition differentiates the full
welfare function in p (including the indirect benefits an agent's links
create for others). The resulting marginal benefit dominates the equilibrium
one pointwise, which is why efficient socializing always exceeds equilibrium
socializing and why its phase transition happens at half the threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equilibrium import _solve_foc, solve_symmetric_equilibrium
from .model import symmetric_expected_utility
from .params import ModelParams, RegimeLabel, classify_against_threshold


def planner_marginal_overlap_factor(p: float, n: int) -> float:
    """(1-p)^(n-2) (1+p)^(n-3) (1 + (2n-3)p): planner analogue of the FOC factor."""
    if p >= 1.0:
        return 0.0
    return math.exp((n - 2) * math.log1p(-p) + (n - 3) * math.log1p(p)) * (1.0 + (2 * n - 3) * p)


def planner_foc_rhs(p: float, params: ModelParams) -> float:
    """Marginal-benefit side of the planner's first-order condition.

    [v1 - v2 + v2 (1-p)^(n-2) (1+p)^(n-3) (1 + (2n-3)p)] / ((n-1) p); the
    denominator generalizes to ((n-1)p)^(alpha-1) exactly as for foc_rhs.
    Dominates foc_rhs pointwise since 2n-3 >= n-1 for n >= 2.
    """
    if p <= 0.0:
        raise ValueError("planner_foc_rhs diverges at p <= 0")
    if p > 1.0:
        raise ValueError(f"probability must lie in (0, 1], got {p}")
    n, v1, v2 = params.n, params.v1, params.v2
    numerator = (v1 - v2) + v2 * planner_marginal_overlap_factor(p, n)
    return numerator / ((n - 1) * p) ** (params.alpha - 1.0)


@dataclass(frozen=True)
class PlannerSolution:
    """Socially efficient uniform linking probability and its welfare."""

    p_hat: float
    is_corner: bool
    expected_degree: float
    regime: RegimeLabel
    welfare_per_agent: float


def solve_efficient(params: ModelParams, tol: float = 1e-12) -> PlannerSolution:
    """Best uniform linking probability for per-agent symmetric welfare."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    p_hat, is_corner = _solve_foc(lambda p: planner_foc_rhs(p, params), params, tol)
    return PlannerSolution(
        p_hat=p_hat,
        is_corner=is_corner,
        expected_degree=(params.n - 1) * p_hat,
        regime=classify_efficiency_regime(params),
        welfare_per_agent=symmetric_expected_utility(p_hat, params),
    )


def classify_efficiency_regime(params: ModelParams, epsilon: float = 1e-9) -> RegimeLabel:
    """Low/high classification of the efficient solution: threshold tau = c / 2."""
    return classify_against_threshold(params.v2, params.c / 2.0, epsilon)


@dataclass(frozen=True)
class WelfareGap:
    """Efficient-to-equilibrium welfare comparison at a given population size.

    ``ratio`` is planner welfare over equilibrium welfare (None with a
    ``diagnostic`` when equilibrium welfare is not positive). The
    classification is "unbounded_regime" when v2 lies strictly between the
    efficiency and equilibrium thresholds, where the ratio grows without
    bound in n; elsewhere it is "bounded".
    """

    ratio: float | None
    classification: str
    equilibrium_welfare: float
    efficient_welfare: float
    diagnostic: str | None = None


def welfare_gap(params: ModelParams, tol: float = 1e-12) -> WelfareGap:
    """Compare equilibrium and efficient welfare at the given finite n."""
    eq = solve_symmetric_equilibrium(params, tol)
    eff = solve_efficient(params, tol)
    if params.c / 2.0 < params.v2 < params.c:
        classification = "unbounded_regime"
    else:
        classification = "bounded"
    if eq.welfare_per_agent <= 0.0:
        return WelfareGap(
            ratio=None,
            classification=classification,
            equilibrium_welfare=eq.welfare_per_agent,
            efficient_welfare=eff.welfare_per_agent,
            diagnostic="equilibrium welfare is not positive; ratio undefined",
        )
    return WelfareGap(
        ratio=eff.welfare_per_agent / eq.welfare_per_agent,
        classification=classification,
        equilibrium_welfare=eq.welfare_per_agent,
        efficient_welfare=eff.welfare_per_agent,
    )
