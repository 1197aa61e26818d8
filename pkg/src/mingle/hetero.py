"""Symmetric Bayesian equilibrium with privately known costs drawn from a finite set.

Each agent knows her own cost coefficient; opponents' costs are i.i.d. draws
from a commonly known finite distribution, and the linking kernel is the
product p(x, y) = x y. A symmetric equilibrium assigns one intensity per cost
type. The solver runs a damped best-response iteration: each type's best
response solves its first-order condition by bisection while the cross-type
moments are held at the current iterate. All expectations over opponent types
are exact finite sums, never sampled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .equilibrium import solve_symmetric_equilibrium
from .params import ModelParams, RegimeLabel, classify_against_threshold

_MAX_BISECT = 200


@dataclass(frozen=True)
class CostDistribution:
    """Finite-support distribution of the private cost coefficient."""

    costs: np.ndarray
    probs: np.ndarray

    def __post_init__(self):
        costs = np.asarray(self.costs, dtype=float)
        probs = np.asarray(self.probs, dtype=float)
        if costs.ndim != 1 or probs.ndim != 1 or len(costs) != len(probs):
            raise ValueError("costs and probs must be one-dimensional and the same length")
        if len(costs) < 1:
            raise ValueError("need at least one cost type")
        if np.any(costs <= 0) or not np.all(np.isfinite(costs)):
            raise ValueError("all costs must be positive and finite")
        if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
            raise ValueError("probs must be nonnegative and sum to 1 within 1e-12")
        costs, probs = costs.copy(), probs.copy()
        costs.flags.writeable = False
        probs.flags.writeable = False
        object.__setattr__(self, "costs", costs)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def degenerate(cls, cost: float) -> "CostDistribution":
        return cls(np.array([cost]), np.array([1.0]))

    @classmethod
    def from_sociabilities(cls, sociabilities, probs) -> "CostDistribution":
        s = np.asarray(sociabilities, dtype=float)
        if np.any(s <= 0):
            raise ValueError("sociabilities must be positive")
        return cls(1.0 / s, np.asarray(probs, dtype=float))

    @property
    def m(self) -> int:
        return len(self.costs)

    @property
    def sociabilities(self) -> np.ndarray:
        return 1.0 / self.costs

    @property
    def mean_cost(self) -> float:
        return float(self.probs @ self.costs)


@dataclass(frozen=True)
class SociabilityMoments:
    """First two moments of sociability S = 1/C and the regime threshold they imply."""

    e_s: float
    e_s2: float
    tau: float

    @property
    def variance(self) -> float:
        return self.e_s2 - self.e_s ** 2

    @property
    def std(self) -> float:
        return math.sqrt(max(self.variance, 0.0))


def hetero_threshold(dist: CostDistribution) -> SociabilityMoments:
    """Sociability moments and the regime threshold tau = E[S] / E[S^2]."""
    s = dist.sociabilities
    e_s = float(dist.probs @ s)
    e_s2 = float(dist.probs @ (s * s))
    return SociabilityMoments(e_s=e_s, e_s2=e_s2, tau=e_s / e_s2)


def classify_hetero_regime(dist: CostDistribution, v2: float, epsilon: float = 1e-9) -> RegimeLabel:
    """Low/high classification against the heterogeneous threshold."""
    return classify_against_threshold(v2, hetero_threshold(dist).tau, epsilon)


def _require_quadratic(params: ModelParams):
    if params.alpha != 2.0:
        raise ValueError("the heterogeneous analysis assumes the quadratic cost (alpha = 2)")


def _rhs_for_own(own: np.ndarray, x: np.ndarray, dist: CostDistribution,
                 params: ModelParams) -> np.ndarray:
    """FOC right-hand side for each type, evaluating own intensity against profile x.

    own[h] is the candidate intensity of a type-h agent; opponents play x_g
    with probability probs[g]. Vectorized over types.
    """
    n, v1, v2 = params.n, params.v1, params.v2
    q = dist.probs
    ex = float(q @ x)
    ex2 = float(q @ (x * x))
    t = own[:, None] * ex2 * x[None, :]
    decay = np.exp((n - 3) * np.log1p(-np.minimum(t, 1.0 - 1e-16)))
    inner = (q * x * decay * (1.0 + (n - 2) * ex2 - (n - 1) * t)).sum(axis=1)
    return ((v1 - v2) * ex + v2 * inner) / (own * (ex2 + (n - 2) * ex * ex))


def hetero_foc_rhs(h: int, x, dist: CostDistribution, params: ModelParams) -> float:
    """Marginal-benefit side of type h's first-order condition at profile x.

    c_h = [(v1-v2) E[X] + v2 E[X (1 - x_h E[X^2] X)^(n-3)
           (1 + (n-2) E[X^2] - (n-1) x_h X E[X^2])]]
          / [x_h (E[X^2] + (n-2) E[X]^2)],
    with X the opponents' equilibrium intensity (a finite-support random
    variable) and every expectation an exact probability-weighted sum.
    """
    _require_quadratic(params)
    x = np.asarray(x, dtype=float)
    if x.shape != dist.costs.shape:
        raise ValueError("intensity vector must have one entry per cost type")
    if np.any(x <= 0) or np.any(x > 1):
        raise ValueError("intensities must lie in (0, 1]")
    return float(_rhs_for_own(np.array([x[h]]), x, dist, params)[0])


@dataclass(frozen=True)
class HeteroEquilibrium:
    """Solved per-type intensities with convergence diagnostics.

    residuals are relative first-order-condition gaps (rhs / c_h - 1) at the
    returned intensities; expected_degrees[h] = (n-1) x_h E[X].
    """

    intensities: np.ndarray
    residuals: np.ndarray
    expected_degrees: np.ndarray
    converged: bool
    iterations: int


def _best_responses(x: np.ndarray, dist: CostDistribution, params: ModelParams) -> np.ndarray:
    """Per-type best response: bisection on the FOC holding opponents at x."""
    costs = dist.costs
    m = len(costs)
    br = np.ones(m)
    at_one = _rhs_for_own(np.ones(m), x, dist, params) >= costs
    interior = ~at_one
    if not np.any(interior):
        return br
    lo = np.where(interior, np.minimum(x, 0.5), 1.0)
    # shrink until the RHS exceeds the own cost for every interior type
    for _ in range(2000):
        need = interior & (_rhs_for_own(lo, x, dist, params) <= costs)
        if not np.any(need):
            break
        lo = np.where(need, np.maximum(lo * 0.5, 1e-300), lo)
    hi = np.ones(m)
    for _ in range(_MAX_BISECT):
        mid = 0.5 * (lo + hi)
        above = _rhs_for_own(mid, x, dist, params) > costs
        lo = np.where(above, mid, lo)
        hi = np.where(above, hi, mid)
    root = 0.5 * (lo + hi)
    br[interior] = root[interior]
    return br


def solve_hetero_equilibrium(dist: CostDistribution, params: ModelParams,
                             tol: float = 1e-10, max_iter: int = 1000,
                             damping: float = 0.5) -> HeteroEquilibrium:
    """Damped best-response iteration for the symmetric Bayesian equilibrium.

    Starts from the homogeneous solution at the probability-weighted mean
    cost (a deterministic, documented initialization, since uniqueness is
    only guaranteed asymptotically) and repeats
    x <- (1 - damping) x + damping BR(x) until the largest intensity change
    falls below ``tol``. A non-converged run is returned with its
    diagnostics rather than raised.
    """
    _require_quadratic(params)
    if not 0 < damping <= 1:
        raise ValueError("damping must lie in (0, 1]")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter >= 1")
    homog = ModelParams(n=params.n, v1=params.v1, v2=params.v2, c=dist.mean_cost)
    x = np.full(dist.m, math.sqrt(solve_symmetric_equilibrium(homog).p_star))
    converged = False
    iterations = max_iter
    for it in range(1, max_iter + 1):
        new = (1.0 - damping) * x + damping * _best_responses(x, dist, params)
        change = float(np.max(np.abs(new - x)))
        x = new
        if change < tol:
            converged = True
            iterations = it
            break
    residuals = _rhs_for_own(x, x, dist, params) / dist.costs - 1.0
    # a corner type sits at 1 with its FOC slack, which is not a failure
    at_corner = x >= 1.0
    residuals = np.where(at_corner & (residuals > 0), 0.0, residuals)
    degrees = (params.n - 1) * x * float(dist.probs @ x)
    return HeteroEquilibrium(
        intensities=x,
        residuals=residuals,
        expected_degrees=degrees,
        converged=converged,
        iterations=iterations,
    )


def low_regime_degree_limit(dist: CostDistribution, params: ModelParams) -> np.ndarray:
    """Large-n expected degree per cost type in the low-intensity regime.

    The sqrt(n)-scaled intensities converge to d_h = s_h K with
    K = sqrt(v1 / (E[S] - v2 E[S^2])), so the type-h expected degree
    (n-1) x_h E[X] converges to d_h E[d] = s_h E[S] v1 / (E[S] - v2 E[S^2]).
    Requires v2 below the heterogeneous threshold.
    """
    _require_quadratic(params)
    mom = hetero_threshold(dist)
    denom = mom.e_s - params.v2 * mom.e_s2
    if denom <= 0:
        raise ValueError("low-regime limit requires v2 < E[S]/E[S^2]")
    return dist.sociabilities * mom.e_s * params.v1 / denom


@dataclass(frozen=True)
class TauComparison:
    """Outcome of comparing the threshold across two cost distributions."""

    kind: str  # "mean_preserving_spread" or "variance_preserving_mean_shift"
    tau_base: float
    tau_variant: float
    tau_decreased: bool
    predicted_direction: str


def mps_tau_comparative(dist_base: CostDistribution, dist_variant: CostDistribution,
                        certify_tol: float = 1e-12) -> TauComparison:
    """Compare thresholds across a certified pair of sociability distributions.

    The pair must be either a mean-preserving spread (equal sociability
    means, strictly larger variance in the variant) or a variance-preserving
    mean shift (equal variances, different means). For spreads the predicted
    direction is always a decrease; for mean shifts the rewritten threshold
    tau = E[S] / (E[S]^2 + Var[S]) predicts an increase from a higher mean
    exactly when the mean is below the standard deviation.
    """
    mb = hetero_threshold(dist_base)
    mv = hetero_threshold(dist_variant)
    mean_equal = abs(mb.e_s - mv.e_s) <= certify_tol
    var_equal = abs(mb.variance - mv.variance) <= certify_tol
    if mean_equal and mv.variance > mb.variance + certify_tol:
        kind = "mean_preserving_spread"
        predicted = "decrease"
    elif var_equal and not mean_equal:
        kind = "variance_preserving_mean_shift"
        rising_mean = mv.e_s > mb.e_s
        widening = mb.e_s < mb.std
        if rising_mean == widening:
            predicted = "increase"
        else:
            predicted = "decrease"
    else:
        raise ValueError(
            "pair is neither a mean-preserving spread nor a variance-preserving mean shift"
        )
    return TauComparison(
        kind=kind,
        tau_base=mb.tau,
        tau_variant=mv.tau,
        tau_decreased=mv.tau < mb.tau,
        predicted_direction=predicted,
    )


def lemma_inequality_check(d, probs) -> bool:
    """Check the exponential-moment inequality used by the high-regime analysis.

    For a strictly positive finite-support random variable d (an independent
    copy d' of it), with W(d') = E[d exp(-d' d E[d^2])], the claim is

        E[d' E[d]^2 / (E[d^2] W(d'))]  <  E[(d')^2 E[d]^4 / (E[d^2]^2 W(d')^2)].

    Both sides are computed as exact finite sums.
    """
    d = np.asarray(d, dtype=float)
    q = np.asarray(probs, dtype=float)
    if d.ndim != 1 or q.shape != d.shape:
        raise ValueError("d and probs must be one-dimensional and the same length")
    if np.any(d <= 0):
        raise ValueError("support must be strictly positive")
    if np.any(q < 0) or abs(q.sum() - 1.0) > 1e-12:
        raise ValueError("probs must be nonnegative and sum to 1")
    if len(np.unique(d[q > 0])) < 2:
        raise ValueError("need at least two distinct support points")
    e_d = float(q @ d)
    e_d2 = float(q @ (d * d))
    # the exponentials underflow for large supports (exponents beyond -700),
    # so both sides are assembled and compared entirely in log space
    from scipy.special import logsumexp

    with np.errstate(divide="ignore"):
        log_q = np.log(q)
    log_d = np.log(d)
    log_w = logsumexp(log_q + log_d - np.outer(d, d) * e_d2, axis=1)  # log W(d_j)
    lhs_terms = log_q + log_d + 2.0 * math.log(e_d) - math.log(e_d2) - log_w
    rhs_terms = log_q + 2.0 * log_d + 4.0 * math.log(e_d) - 2.0 * math.log(e_d2) - 2.0 * log_w
    return float(logsumexp(lhs_terms)) < float(logsumexp(rhs_terms))
