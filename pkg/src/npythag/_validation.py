"""Input checking shared by every public function, plus the exception types."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class DomainError(ValueError):
    """Raised when an input lies outside the domain an operation accepts."""


class RatioAtLeastTwoError(DomainError):
    """Negative degrees admit no real triangle once the side ratio reaches 2."""


class NoCriticalDegreeError(DomainError):
    """The isosceles case (ratio 1) is real for every negative degree."""


class InconclusiveBracketError(DomainError):
    """The critical-degree search found no sign change before the floor."""


class Exclusion(enum.Enum):
    """Why a (gamma, n) pair has no real vertex angle."""

    FRACTIONAL_POSITIVE_DEGREE = "fractional positive degree (0 < n < 1)"
    EXCEEDS_CRITICAL_DEGREE = "exceeds critical degree"
    RATIO_AT_LEAST_TWO = "ratio >= 2 with negative degree"


class ExcludedDomainError(DomainError):
    """A quantity was requested for a pair whose vertex angle is complex."""

    def __init__(self, reason: Exclusion, gamma: float, n: float):
        self.reason = reason
        self.gamma = gamma
        self.n = n
        super().__init__(f"(gamma={gamma!r}, n={n!r}) is excluded: {reason.value}")


@dataclass(frozen=True)
class SideRatio:
    """Side ratio b/a.

    The ordinary constructor enforces gamma >= 1. Use
    :meth:`excluded_regime` to build ratios below 1, which only exist to
    reproduce sweeps that extend past the conventional domain.
    """

    gamma: float
    excluded_regime_ok: bool = False

    def __post_init__(self):
        g = _finite(self.gamma, "gamma")
        if g <= 0:
            raise DomainError(f"gamma must be > 0, got {g!r}")
        if g < 1 and not self.excluded_regime_ok:
            raise DomainError(
                f"gamma must be >= 1, got {g!r}; use SideRatio.excluded_regime()"
            )
        object.__setattr__(self, "gamma", g)

    @classmethod
    def excluded_regime(cls, gamma: float) -> "SideRatio":
        """Unchecked constructor permitting 0 < gamma < 1."""
        return cls(gamma, excluded_regime_ok=True)

    def __float__(self):
        return self.gamma


def _finite(x, name: str) -> float:
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number, got {x!r}") from None
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")
    return x


def as_gamma(gamma) -> float:
    """Return gamma as a float, enforcing gamma >= 1 unless it is a SideRatio."""
    if isinstance(gamma, SideRatio):
        return gamma.gamma
    return SideRatio(gamma).gamma


def as_degree(n) -> float:
    n = _finite(n, "n")
    if n == 0:
        raise DomainError("n = 0 has no triangle (a^0 + b^0 = c^0 reads 2 = 1)")
    return n


def as_length(x, name: str = "a") -> float:
    x = _finite(x, name)
    if x <= 0:
        raise DomainError(f"{name} must be > 0, got {x!r}")
    return x


def as_tolerance(tol, name: str = "tol") -> float:
    tol = _finite(tol, name)
    if tol <= 0:
        raise DomainError(f"{name} must be > 0, got {tol!r}")
    return tol
