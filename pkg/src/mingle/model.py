"""Interaction kernels, intensity profiles, and expected-utility primitives.

Two views of the same model live here. The profile-based operations take a
full vector of per-agent intensities and evaluate the exact expectations by
the inclusion-exclusion product over potential common neighbors. The
symmetric closed forms take a single linking probability p directly and are
the workhorse for the equilibrium and planner solvers; they must agree with
the profile operations on constant profiles, which the test suite enforces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .params import ModelParams

KernelFn = Callable[[float, float], float]


def _product_kernel(x: float, y: float) -> float:
    return x * y


@dataclass(frozen=True)
class InteractionKernel:
    """Symmetric map from two intensities in [0,1] to a linking probability.

    ``kind`` is "product" for p(x, y) = x*y (the form used throughout the
    heterogeneous analysis) or "custom" for a user-supplied function, which
    must be symmetric, strictly increasing on (0,1] x (0,1], and satisfy
    p(0,0) = 0 and p(1,1) = 1. Those endpoint conditions are checked at
    construction; symmetry and monotonicity are the caller's contract.
    """

    kind: str
    evaluate: KernelFn = field(repr=False)

    def __post_init__(self):
        if self.kind not in ("product", "custom"):
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        if self.evaluate(0.0, 0.0) != 0.0 or self.evaluate(1.0, 1.0) != 1.0:
            raise ValueError("kernel must satisfy p(0,0)=0 and p(1,1)=1")

    @classmethod
    def product(cls) -> "InteractionKernel":
        return cls(kind="product", evaluate=_product_kernel)

    @classmethod
    def custom(cls, fn: KernelFn) -> "InteractionKernel":
        return cls(kind="custom", evaluate=fn)

    def __call__(self, x: float, y: float) -> float:
        return self.evaluate(x, y)

    def pair_matrix(self, values: np.ndarray) -> np.ndarray:
        """Full n-by-n matrix of pair probabilities (zero diagonal)."""
        values = np.asarray(values, dtype=float)
        if self.kind == "product":
            p = np.outer(values, values)
        else:
            n = len(values)
            p = np.empty((n, n))
            for a in range(n):
                for b in range(n):
                    p[a, b] = self.evaluate(values[a], values[b])
        np.fill_diagonal(p, 0.0)
        return p


@dataclass(frozen=True)
class IntensityProfile:
    """Per-agent interaction intensities, each in [0,1]."""

    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1:
            raise ValueError("intensity profile must be one-dimensional")
        if np.any(values < 0.0) or np.any(values > 1.0) or not np.all(np.isfinite(values)):
            raise ValueError("intensities must lie in [0, 1]")
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, n: int, x: float) -> "IntensityProfile":
        return cls(np.full(n, float(x)))

    def __len__(self) -> int:
        return len(self.values)


def link_probability(kernel: InteractionKernel, xi: float, xj: float) -> float:
    """Probability that the link forms between agents with intensities xi, xj."""
    if not (0.0 <= xi <= 1.0 and 0.0 <= xj <= 1.0):
        raise ValueError(f"intensities must lie in [0, 1], got ({xi}, {xj})")
    return kernel.evaluate(xi, xj)


def expected_friend_count(profile: IntensityProfile, kernel: InteractionKernel, i: int) -> float:
    """Expected number of direct friends of agent i: sum of p_ik over k != i."""
    p = kernel.pair_matrix(profile.values)
    return float(p[i].sum())


def expected_fof_count(profile: IntensityProfile, kernel: InteractionKernel, i: int) -> float:
    """Expected number of friends of friends of agent i.

    For each candidate k != i this is the probability that the direct link
    i-k is absent times the probability that at least one common neighbor
    l connects them: (1 - p_ik) * (1 - prod_{l != i,k} (1 - p_il p_lk)).
    Link realizations are independent, so the expectation is the sum of
    these products. Builds the full pair matrix, so cost and memory are
    quadratic in n; the symmetric closed forms below cover the large-n case.
    """
    n = len(profile)
    if not 0 <= i < n:
        raise ValueError(f"agent index {i} out of range for n={n}")
    p = kernel.pair_matrix(profile.values)
    pi = p[i]
    total = 0.0
    for k in range(n):
        if k == i:
            continue
        through = pi * p[:, k]
        through[i] = 0.0
        through[k] = 0.0
        none_connect = np.prod(1.0 - through)
        total += (1.0 - pi[k]) * (1.0 - none_connect)
    return float(total)


def expected_utility(profile: IntensityProfile, kernel: InteractionKernel,
                     params: ModelParams, i: int) -> float:
    """Agent i's expected payoff: v1 * E[friends] + v2 * E[FoF] minus the time cost.

    The cost is (c/alpha) * (sum_k p_ik)^alpha, paid on the total expected
    quantity of interaction rather than on realized links.
    """
    friends = expected_friend_count(profile, kernel, i)
    fof = expected_fof_count(profile, kernel, i)
    return params.v1 * friends + params.v2 * fof - (params.c / params.alpha) * friends ** params.alpha


def one_minus_p_squared_pow(p: float, exponent: float) -> float:
    """(1 - p^2)^exponent evaluated stably for p in [0, 1].

    Uses exp(exponent * log1p(-p^2)) so that values like p ~ 1e-3 with
    exponent ~ 1e6 keep full precision; at p = 1 the limit 0 is returned
    (any positive exponent).
    """
    if p >= 1.0:
        return 0.0
    return math.exp(exponent * math.log1p(-p * p))


def symmetric_fof_count(p: float, n: int) -> float:
    """Expected friends of friends when every pair links with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    return (n - 1) * (1.0 - p) * (1.0 - one_minus_p_squared_pow(p, n - 2))


def symmetric_expected_utility(p: float, params: ModelParams) -> float:
    """Per-agent expected payoff when all pairs link with the same probability p.

    Closed form of ``expected_utility`` on a constant profile (product kernel
    with x = sqrt(p)): v1 (n-1) p + v2 (n-1)(1-p)(1-(1-p^2)^(n-2))
    - (c/alpha) ((n-1) p)^alpha.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    n = params.n
    friends = (n - 1) * p
    fof = symmetric_fof_count(p, n)
    return params.v1 * friends + params.v2 * fof - (params.c / params.alpha) * friends ** params.alpha
