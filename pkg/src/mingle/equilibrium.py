"""Symmetric-equilibrium solver for the homogeneous socializing game.

The interior equilibrium linking probability solves c = foc_rhs(p), where the
right-hand side collects the marginal benefit of raising one's own linking
probability against everyone else holding the symmetric profile fixed. The
right-hand side explodes at p = 0 and (for the quadratic cost) decreases
strictly on (0, 1], so bisection on a bracketed sign change is exact and
guaranteed. When foc_rhs(1) still exceeds the cost coefficient the corner
p* = 1 is the equilibrium.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import symmetric_expected_utility
from .params import ModelParams, Regime, RegimeLabel, classify_against_threshold

_MAX_BISECT = 300


def marginal_overlap_factor(p: float, n: int) -> float:
    """(1-p)^(n-2) (1+p)^(n-3) (1 + (n-1)p), the indirect-benefit factor of the FOC.

    Evaluated in log space so it stays accurate for p ~ 1/sqrt(n) at n up to
    10^6 and beyond; returns 0 at p = 1 (n >= 3).
    """
    if p >= 1.0:
        return 0.0
    return math.exp((n - 2) * math.log1p(-p) + (n - 3) * math.log1p(p)) * (1.0 + (n - 1) * p)


def foc_rhs(p: float, params: ModelParams) -> float:
    """Marginal-benefit side of the equilibrium first-order condition.

    For the quadratic cost this is
    [(v1 - v2) + v2 (1-p)^(n-2) (1+p)^(n-3) (1 + (n-1)p)] / ((n-1) p),
    and for general cost exponents the denominator becomes ((n-1)p)^(alpha-1).
    Strictly decreasing in p on (0, 1] when alpha = 2.
    """
    if p <= 0.0:
        raise ValueError("foc_rhs diverges at p <= 0")
    if p > 1.0:
        raise ValueError(f"probability must lie in (0, 1], got {p}")
    n, v1, v2 = params.n, params.v1, params.v2
    numerator = (v1 - v2) + v2 * marginal_overlap_factor(p, n)
    return numerator / ((n - 1) * p) ** (params.alpha - 1.0)


def best_response_utility(q: float, p: float, params: ModelParams) -> float:
    """Payoff of one agent linking with probability q while all others use p.

    v1 (n-1) q + v2 (n-1)(1-q)(1 - (1 - q p)^(n-2)) - (c/alpha)((n-1) q)^alpha.
    The FOC above is the stationarity condition of this function at q = p.
    """
    if not (0.0 <= q <= 1.0 and 0.0 <= p <= 1.0):
        raise ValueError("probabilities must lie in [0, 1]")
    n = params.n
    if q * p >= 1.0:
        missed = 0.0
    else:
        missed = math.exp((n - 2) * math.log1p(-q * p))
    fof = (n - 1) * (1.0 - q) * (1.0 - missed)
    return (params.v1 * (n - 1) * q + params.v2 * fof
            - (params.c / params.alpha) * ((n - 1) * q) ** params.alpha)


@dataclass(frozen=True)
class EquilibriumSolution:
    """Solved symmetric equilibrium.

    p_star is the common linking probability, expected_degree = (n-1) p_star,
    and welfare_per_agent is the symmetric expected utility at p_star.
    """

    p_star: float
    is_corner: bool
    expected_degree: float
    regime: RegimeLabel
    welfare_per_agent: float


def _bisect_decreasing(f, c: float, lo: float, hi: float, tol: float) -> float:
    """Root of f(p) = c on [lo, hi] given f(lo) > c >= f(hi); relative tol on p.

    Keeps halving past the width target while the residual is still large
    (the condition can be steep where the root hugs 1), stopping only at
    floating-point exhaustion.
    """
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        value = f(mid)
        if value > c:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol * lo and abs(value - c) <= 1e-12 * abs(c):
            break
    return 0.5 * (lo + hi)


def _solve_foc(rhs, params: ModelParams, tol: float) -> tuple[float, bool]:
    """Return (p, is_corner) for c = rhs(p) with rhs exploding at 0+.

    For the quadratic cost the right-hand side is strictly decreasing, so a
    geometric shrink of the lower bracket suffices. For other exponents the
    equation can have several roots; the smallest positive one is selected by
    a dense geometric scan (it is the stationary point reached from below,
    i.e. the low-intensity branch, with the high branch taking over once the
    low one disappears).
    """
    n, c = params.n, params.c
    if rhs(1.0) >= c:
        return 1.0, True
    if params.alpha == 2.0:
        lo = min(0.5, params.v1 / (2.0 * c * (n - 1)))
        while rhs(lo) <= c:
            lo *= 0.5
            if lo < 1e-300:
                raise ArithmeticError("failed to bracket the equilibrium from below")
        return _bisect_decreasing(rhs, c, lo, 1.0, tol), False
    # p small enough that the direct-value term alone pushes the RHS above c
    start = ((params.v1 - params.v2) / (2.0 * c)) ** (1.0 / (params.alpha - 1.0)) / (n - 1)
    start = min(start, 0.5)
    while rhs(start) <= c:
        start *= 0.5
        if start < 1e-300:
            raise ArithmeticError("failed to bracket the equilibrium from below")
    grid = np.geomspace(start, 1.0, max(200, int(120 * math.log10(1.0 / start))))
    prev = grid[0]
    for g in grid[1:]:
        if rhs(float(g)) <= c:
            return _bisect_decreasing(rhs, c, float(prev), float(g), tol), False
        prev = g
    # scan found no crossing although rhs(1) < c: fall back to the last cell
    return _bisect_decreasing(rhs, c, float(prev), 1.0, tol), False


def solve_symmetric_equilibrium(params: ModelParams, tol: float = 1e-12) -> EquilibriumSolution:
    """Solve for the unique symmetric equilibrium with positive linking probabilities.

    If foc_rhs(1) >= c every agent investing fully is the equilibrium
    (corner); otherwise the interior root of foc_rhs(p) = c is found by
    bisection. ``tol`` is the relative half-width demanded of the final
    bracket, tight enough that the FOC residual is far below 1e-9 * c.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    p_star, is_corner = _solve_foc(lambda p: foc_rhs(p, params), params, tol)
    return EquilibriumSolution(
        p_star=p_star,
        is_corner=is_corner,
        expected_degree=(params.n - 1) * p_star,
        regime=classify_regime(params),
        welfare_per_agent=symmetric_expected_utility(p_star, params),
    )


def classify_regime(params: ModelParams, epsilon: float = 1e-9) -> RegimeLabel:
    """Low/high-intensity classification of the equilibrium: threshold tau = c."""
    return classify_against_threshold(params.v2, params.c, epsilon)


@dataclass(frozen=True)
class AsymptoticDegree:
    """Limit behavior of the expected degree: a constant or a sqrt(n) coefficient."""

    growth: str  # "constant" or "sqrt_n"
    value: float


def asymptotic_degree(params: ModelParams, epsilon: float = 1e-9) -> AsymptoticDegree:
    """Large-population expected degree under the quadratic cost.

    Low regime (v2 < c): the degree converges to v1 / (c - v2). High regime
    (v2 > c): the degree divided by sqrt(n) converges to sqrt(ln(v2 / c)).
    The threshold case is not characterized and raises.
    """
    if params.alpha != 2.0:
        raise ValueError("asymptotic degree formulas apply to the quadratic cost only")
    label = classify_regime(params, epsilon)
    if label.regime is Regime.CRITICAL:
        raise ValueError("no asymptotic characterization at v2 = c")
    if label.regime is Regime.LOW:
        return AsymptoticDegree(growth="constant", value=params.v1 / (params.c - params.v2))
    return AsymptoticDegree(growth="sqrt_n", value=math.sqrt(math.log(params.v2 / params.c)))


def _implicit_denominator(p: float, params: ModelParams) -> float:
    """Common denominator of the implicit-function derivatives of the FOC."""
    n, v2 = params.n, params.v2
    if p >= 1.0:
        poly_part = 0.0
    else:
        poly = 1.0 + p + (3 * n - 7) * p * p + (n - 1) * (2 * n - 5) * p ** 3
        poly_part = math.exp((n - 3) * math.log1p(-p) + (n - 4) * math.log1p(p)) * poly
    return (params.v1 - v2) + poly_part * v2


def _require_interior(solution: EquilibriumSolution, params: ModelParams) -> float:
    if params.alpha != 2.0:
        raise ValueError("comparative-statics derivatives apply to the quadratic cost only")
    if solution.is_corner:
        raise ValueError("comparative statics are defined for interior solutions only")
    return solution.p_star


def dp_dc(solution: EquilibriumSolution, params: ModelParams) -> float:
    """Sensitivity of the equilibrium probability to the cost coefficient (< 0)."""
    p = _require_interior(solution, params)
    return -(params.n - 1) * p * p / _implicit_denominator(p, params)


def dp_dv1(solution: EquilibriumSolution, params: ModelParams) -> float:
    """Sensitivity of the equilibrium probability to the value of friends (> 0)."""
    p = _require_interior(solution, params)
    return p / _implicit_denominator(p, params)


def dp_dv2(solution: EquilibriumSolution, params: ModelParams) -> float:
    """Sensitivity to the value of friends of friends.

    The sign equals the sign of marginal_overlap_factor(p*) - 1: positive for
    small p* (sparse networks, direct effect dominates) and negative beyond
    the threshold probability where free-riding on overlapping neighborhoods
    takes over.
    """
    p = _require_interior(solution, params)
    g = marginal_overlap_factor(p, params.n) - 1.0
    return p * g / _implicit_denominator(p, params)


def v2_sign_threshold(n: int, tol: float = 1e-14) -> float:
    """Probability at which the sign of dp_dv2 flips, for a given population size.

    Unique root in (0, 1) of g(p) = (1-p)^(n-2)(1+p)^(n-3)(1+(n-1)p) - 1,
    which rises from g(0) = 0 before falling to g(1) = -1. The left bracket
    is g's interior maximum (where 2(n-1)p^2 + 3p - 1 = 0).
    """
    if n < 4:
        raise ValueError("threshold probability needs n >= 4")

    def g(p: float) -> float:
        return marginal_overlap_factor(p, n) - 1.0

    p_peak = (-3.0 + math.sqrt(9.0 + 8.0 * (n - 1))) / (4.0 * (n - 1))
    if g(p_peak) <= 0.0:
        raise ArithmeticError("interior maximum failed to bracket the sign change")
    lo, hi = p_peak, 1.0
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol:
            break
    return 0.5 * (lo + hi)
