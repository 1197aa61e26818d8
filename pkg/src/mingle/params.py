"""Model parameters and regime labels shared across the solver modules."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class Regime(enum.Enum):
    """Asymptotic behavior of the symmetric solution as the population grows.

    LOW: expected degree converges to a constant; HIGH: expected degree grows
    like sqrt(n); CRITICAL: the value of indirect contacts sits on the
    threshold (within the classification band) and no asymptotic label applies.
    """

    LOW = "low"
    HIGH = "high"
    CRITICAL = "critical"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RegimeLabel:
    """A regime classification together with the threshold it was tested against.

    ``threshold`` is the critical value of v2 (tau); ``epsilon`` is the
    half-width of the CRITICAL band around it.
    """

    regime: Regime
    threshold: float
    epsilon: float = 1e-9


def classify_against_threshold(v2: float, threshold: float, epsilon: float = 1e-9) -> RegimeLabel:
    """Label v2 relative to a threshold: LOW below, HIGH above, CRITICAL within +-epsilon."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if v2 < threshold - epsilon:
        regime = Regime.LOW
    elif v2 > threshold + epsilon:
        regime = Regime.HIGH
    else:
        regime = Regime.CRITICAL
    return RegimeLabel(regime=regime, threshold=threshold, epsilon=epsilon)


@dataclass(frozen=True)
class ModelParams:
    """Primitives of the socializing game.

    n: population size (at least 3).
    v1: value of a direct friend (v1 > v2).
    v2: value of a friend of a friend (nonnegative).
    c: cost coefficient on total interaction time (positive).
    alpha: exponent of the time-cost term; the baseline model is quadratic
        (alpha = 2) and any alpha > 1 is accepted.
    """

    n: int
    v1: float
    v2: float
    c: float
    alpha: float = 2.0

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"population size n must be an integer >= 3, got {self.n}")
        for name in ("v1", "v2", "c", "alpha"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value}")
        if not self.v1 > self.v2 >= 0:
            raise ValueError(f"need v1 > v2 >= 0, got v1={self.v1}, v2={self.v2}")
        if self.c <= 0:
            raise ValueError(f"cost coefficient c must be positive, got {self.c}")
        if self.alpha <= 1:
            raise ValueError(f"cost exponent alpha must exceed 1, got {self.alpha}")
