"""Independent checks used to cross-examine the closed forms.

Nothing here goes through the cosine-argument expression: areas come from
side lengths (Heron), angles from side lengths (law of cosines in Kahan's
stable arrangement), derivatives from central differences, and the
high-precision variants from mpmath.
"""

from __future__ import annotations

import math
from typing import Callable

import mpmath

from ._validation import DomainError, SideRatio, as_degree, as_length
from .angle import vertex_angle
from .area import TriangleSides, side_lengths

HERON_SLACK = 1e-9
MP_DIGITS = 60


def _sorted_desc(sides) -> tuple:
    if isinstance(sides, TriangleSides):
        sides = (sides.a, sides.b, sides.c)
    x, y, z = sorted((float(s) for s in sides), reverse=True)
    if z < 0:
        raise DomainError(f"negative side length in {sides!r}")
    return x, y, z


def heron_area(sides) -> float:
    """Area from three sides, sqrt(s(s-a)(s-b)(s-c)).

    Evaluated in Kahan's ordering so needle-like triangles keep their
    digits. A violated triangle inequality within ``HERON_SLACK`` (relative)
    counts as degenerate; beyond that it raises.
    """
    a, b, c = _sorted_desc(sides)
    t = c - (a - b)
    if t < 0:
        if t < -HERON_SLACK * a:
            raise DomainError(f"triangle inequality violated: {sides!r}")
        return 0.0
    return 0.25 * math.sqrt((a + (b + c)) * t * (c + (a - b)) * (a + (b - c)))


def angle_from_sides(a: float, b: float, c: float) -> float:
    """Angle between sides a and b (opposite c), radians.

    Kahan's arctangent form of the law of cosines; accurate for angles
    near 0 and pi where arccos loses half its digits.
    """
    a, b, c = float(a), float(b), float(c)
    if min(a, b, c) < 0:
        raise DomainError(f"negative side length in {(a, b, c)!r}")
    if b > a:
        a, b = b, a
    # inequality violations within the slack are rounding on a flat triangle
    if c < a - b:
        if (a - b) - c > HERON_SLACK * a:
            raise DomainError(f"not a triangle: {(a, b, c)!r}")
        return 0.0
    if c > a + b:
        if c - (a + b) > HERON_SLACK * c:
            raise DomainError(f"not a triangle: {(a, b, c)!r}")
        return math.pi
    mu = c - (a - b) if b >= c else b - (a - c)
    num = ((a - b) + c) * max(mu, 0.0)
    den = (a + (b + c)) * max((a - c) + b, 0.0)
    if den == 0:
        return math.pi
    return 2.0 * math.atan(math.sqrt(num / den))


def sides_angle(gamma, n) -> float:
    """Vertex angle of the unit-leg triangle computed from its sides."""
    s = side_lengths(1.0, gamma, n)
    return angle_from_sides(s.a, s.b, s.c)


def law_of_cosines_residual(a, gamma, n) -> float:
    """|c^2 - (a^2 + b^2 - 2ab cos theta)| / c^2.

    c comes from (a^n + b^n)^(1/n), theta from the vertex-angle routine;
    this is zero exactly when the two are mutually consistent.
    """
    a = as_length(a)
    n = as_degree(n)
    out = vertex_angle(gamma, n)
    if not out.is_real:
        raise DomainError(f"no real angle at gamma={float(gamma)!r}, n={n!r}")
    s = side_lengths(a, gamma, n)
    rhs = s.a * s.a + s.b * s.b - 2.0 * s.a * s.b * math.cos(out.theta)
    c2 = s.c * s.c
    return abs(c2 - rhs) / c2


def finite_difference(f: Callable[[float], float], x: float, h: float = None) -> float:
    """Central difference (f(x+h) - f(x-h)) / 2h, default h = 1e-6 max(1, |x|)."""
    x = float(x)
    if h is None:
        h = 1e-6 * max(1.0, abs(x))
    hi, lo = f(x + h), f(x - h)
    if not (math.isfinite(hi) and math.isfinite(lo)):
        raise DomainError(f"non-finite evaluation near x={x!r}")
    return (hi - lo) / (2.0 * h)


# -- arbitrary precision -----------------------------------------------------

def mp_sides(a, gamma, n):
    """(a, b, c) as mpf at MP_DIGITS significant digits."""
    with mpmath.workdps(MP_DIGITS):
        a = mpmath.mpf(a)
        g = mpmath.mpf(float(gamma) if isinstance(gamma, SideRatio) else gamma)
        n = mpmath.mpf(n)
        c = a * (g**n + 1) ** (1 / n)
        return a, a * g, c


def mp_heron(a, b, c):
    with mpmath.workdps(MP_DIGITS):
        a, b, c = (mpmath.mpf(v) for v in (a, b, c))
        s = (a + b + c) / 2
        prod = s * (s - a) * (s - b) * (s - c)
        return mpmath.sqrt(max(prod, mpmath.mpf(0)))


def mp_angle(a, b, c):
    with mpmath.workdps(MP_DIGITS):
        a, b, c = (mpmath.mpf(v) for v in (a, b, c))
        x = (a * a + b * b - c * c) / (2 * a * b)
        return mpmath.acos(max(mpmath.mpf(-1), min(mpmath.mpf(1), x)))


def mp_area_fixed_leg(a, gamma, n):
    return mp_heron(*mp_sides(a, gamma, n))


def mp_vertex_angle(gamma, n):
    return mp_angle(*mp_sides(1, gamma, n))

