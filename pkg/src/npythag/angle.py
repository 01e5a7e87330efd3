"""Vertex angle of the generalized relation a^n + b^n = c^n.

Requiring a^n + b^n = c^n to agree with the law of cosines fixes the angle
between legs a and b = gamma * a::

    cos(theta) = (gamma^2 + 1 - (gamma^n + 1)^(2/n)) / (2 gamma)

All angles are radians.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Union

from ._validation import (
    DomainError,
    Exclusion,
    RatioAtLeastTwoError,
    SideRatio,
    _finite,
    as_degree,
    as_gamma,
)

TOL_DOMAIN = 1e-12


def _log_pow_sum(gamma: float, n: float) -> float:
    """log(gamma^n + 1) without overflowing gamma^n."""
    x = n * math.log(gamma)
    if x > 0:
        return x + math.log1p(math.exp(-x))
    return math.log1p(math.exp(x))


def _exp(x: float) -> float:
    # math.exp raises on overflow; the callers want +inf
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def logistic_pow(gamma: float, n: float) -> float:
    """gamma^n / (gamma^n + 1) without overflow."""
    x = n * math.log(gamma)
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def pow_sum(gamma: float, n: float, p: float) -> float:
    """(gamma^n + 1)^(p/n) evaluated through logs, safe for large |n|."""
    return _exp(p * _log_pow_sum(gamma, n) / n)


def numerator_term(gamma: float, n: float) -> float:
    """gamma^2 + 1 - (gamma^n + 1)^(2/n) for gamma >= 1.

    For n > 0 the power is factored as gamma^2 (1 + gamma^-n)^(2/n) so the
    subtraction against gamma^2 happens inside expm1 rather than between two
    large floats.
    """
    # exact reductions; arccos is too ill-conditioned at +-1 to tolerate ulp noise
    if n == 2:
        return 0.0
    if n == 1:
        return -2.0 * gamma
    lg = math.log(gamma)
    if n > 0:
        x = (2.0 / n) * math.log1p(math.exp(-n * lg))
        if x > 700.0:  # only reachable for 0 < n < 1
            return -math.inf
        return 1.0 - gamma * gamma * math.expm1(x)
    return gamma * gamma + 1.0 - math.exp((2.0 / n) * math.log1p(math.exp(n * lg)))


def _effective_ratio(gamma) -> float:
    # gamma < 1 is the same triangle with its legs swapped; the cosine
    # argument is invariant under gamma -> 1/gamma.
    g = as_gamma(gamma)
    return 1.0 / g if g < 1 else g


def cos_vertex_arg(gamma, n) -> float:
    """Cosine argument of the vertex angle, unclamped.

    The value may fall outside [-1, 1]; that is how the complex regimes
    show up. Non-finite input raises DomainError.
    """
    g = _effective_ratio(gamma)
    n = as_degree(n)
    return numerator_term(g, n) / (2.0 * g)


@dataclass(frozen=True)
class AngleOutcome:
    """A real vertex angle with its (clamped) cosine, or an exclusion."""

    theta: Optional[float] = None
    cos_arg: Optional[float] = None
    exclusion: Optional[Exclusion] = None

    def __post_init__(self):
        if (self.theta is None) == (self.exclusion is None):
            raise ValueError("exactly one of theta / exclusion must be set")

    @property
    def is_real(self) -> bool:
        return self.exclusion is None

    @property
    def degrees(self) -> float:
        if self.theta is None:
            raise ValueError(f"no real angle: {self.exclusion.value}")
        return math.degrees(self.theta)


def vertex_angle(gamma, n, tol_domain: float = TOL_DOMAIN) -> AngleOutcome:
    """Vertex angle theta(gamma, n), or the reason it is complex.

    Exclusions are returned, not raised, so sweeps over n can cross the
    complex regions. Cosine arguments within ``tol_domain`` of +-1 are
    clamped; further out they are excluded.
    """
    g = _effective_ratio(gamma)
    n = as_degree(n)
    if 0 < n < 1:
        return AngleOutcome(exclusion=Exclusion.FRACTIONAL_POSITIVE_DEGREE)
    if n < 0 and g >= 2:
        return AngleOutcome(exclusion=Exclusion.RATIO_AT_LEAST_TWO)
    x = numerator_term(g, n) / (2.0 * g)
    if n < 0 and x > 1.0 + tol_domain:
        return AngleOutcome(exclusion=Exclusion.EXCEEDS_CRITICAL_DEGREE)
    # n >= 1 is always real, so any excursion there is rounding
    x = min(1.0, max(-1.0, x))
    return AngleOutcome(theta=math.acos(x), cos_arg=x)


def limit_angle_pos_inf(gamma) -> float:
    """Angle as n -> +inf. Accepts any gamma > 0, including gamma < 1."""
    g = float(gamma) if isinstance(gamma, SideRatio) else _finite(gamma, "gamma")
    if g <= 0:
        raise DomainError(f"gamma must be > 0, got {g!r}")
    if g < 1:
        return math.acos(g / 2.0)
    if g == 1:
        return math.pi / 3.0
    return math.acos(1.0 / (2.0 * g))


def limit_angle_neg_inf(gamma) -> float:
    """Angle as n -> -inf, defined for 1 <= gamma < 2.

    Tends to 0 as gamma -> 2 from below.
    """
    g = as_gamma(gamma)
    if g < 1:
        raise DomainError(f"gamma must be >= 1 here, got {g!r}")
    if g >= 2:
        raise RatioAtLeastTwoError(f"no real angle for negative degrees at gamma={g!r}")
    if g == 1:
        return math.pi / 3.0
    return math.acos(g / 2.0)


def extremal_isosceles_angle(n) -> float:
    """arccos(1 - 2^((2-n)/n)), the angle of the isosceles member.

    Over gamma this is the maximum for 1 <= n <= 2 and for n < 0, and the
    minimum for n >= 2.
    """
    n = as_degree(n)
    if 0 < n < 1:
        raise DomainError(f"no real angle for 0 < n < 1, got n={n!r}")
    x = 1.0 - 2.0 ** ((2.0 - n) / n)
    return math.acos(min(1.0, max(-1.0, x)))


def angle_stationarity_residual(gamma, n) -> float:
    """1 - gamma^2 + (gamma^n - 1)(gamma^n + 1)^((2-n)/n).

    Proportional to d(theta)/d(gamma) with the same sign; vanishes at
    gamma = 1 for every n.
    """
    g = as_gamma(gamma)
    n = as_degree(n)
    # (g^n - 1)(g^n + 1)^((2-n)/n) == tanh(n ln g / 2) * (g^n + 1)^(2/n)
    t = math.tanh(0.5 * n * math.log(g))
    return 1.0 - g * g + t * pow_sum(g, n, 2.0)


class TriangleClass(enum.Enum):
    DEGENERATE = "degenerate"
    RIGHT = "right"
    OBTUSE = "obtuse"
    ACUTE = "acute"


def classify_triangle(gamma, n, tol: float = 1e-9) -> Union[TriangleClass, Exclusion]:
    """Degenerate / right / obtuse / acute, or the exclusion if theta is complex."""
    out = vertex_angle(gamma, n)
    if not out.is_real:
        return out.exclusion
    theta = out.theta
    if theta <= tol or theta >= math.pi - tol:
        return TriangleClass.DEGENERATE
    if abs(theta - math.pi / 2) <= tol:
        return TriangleClass.RIGHT
    return TriangleClass.OBTUSE if theta > math.pi / 2 else TriangleClass.ACUTE
