"""Areas of the generalized-Pythagorean triangles.

Two families: legs a and gamma*a with a held fixed, or the whole perimeter
P held fixed (a is then derived from P). Closed forms for the isosceles
members and the n -> +-inf limits live here too.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._validation import (
    DomainError,
    ExcludedDomainError,
    RatioAtLeastTwoError,
    as_degree,
    as_gamma,
    as_length,
)
from .angle import TOL_DOMAIN, _log_pow_sum, logistic_pow, numerator_term, pow_sum, vertex_angle

RADICAND_CLAMP = 1e-12


class AreaFamily(enum.Enum):
    FIXED_LEG = "fixed_leg"
    FIXED_PERIMETER = "fixed_perimeter"


@dataclass(frozen=True)
class AreaValue:
    area: float
    family: AreaFamily
    scale: float  # the fixed leg a, or the fixed perimeter P

    def __float__(self):
        return self.area


@dataclass(frozen=True)
class TriangleSides:
    a: float
    b: float
    c: float

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c

    def is_degenerate(self, rel_tol: float = 1e-12) -> bool:
        x, y, z = sorted((self.a, self.b, self.c))
        return x + y - z <= rel_tol * z


def _require_real(gamma, n, tol_domain=TOL_DOMAIN):
    out = vertex_angle(gamma, n, tol_domain)
    if not out.is_real:
        raise ExcludedDomainError(out.exclusion, float(gamma), n)
    return out


def _third_side_unit(g: float, n: float) -> float:
    # (g^n + 1)^(1/n) with the larger of (1, g) factored out for n > 0 and
    # the smaller for n < 0, so the inner power never exceeds 1.
    lo, hi = min(1.0, g), max(1.0, g)
    if n > 0:
        return hi * (1.0 + (lo / hi) ** n) ** (1.0 / n)
    return lo * (1.0 + (hi / lo) ** n) ** (1.0 / n)


def side_lengths(a, gamma, n, tol_domain: float = TOL_DOMAIN) -> TriangleSides:
    """Sides (a, gamma*a, c) with c = a (gamma^n + 1)^(1/n)."""
    a = as_length(a)
    g = as_gamma(gamma)
    n = as_degree(n)
    _require_real(gamma, n, tol_domain)
    b = g * a
    # exact reductions keep the flat (n=1) and right (n=2) cases exact
    if n == 1:
        return TriangleSides(a, b, a + b)
    if n == 2:
        return TriangleSides(a, b, math.hypot(a, b))
    return TriangleSides(a, b, a * _third_side_unit(g, n))


def perimeter(a, gamma, n, tol_domain: float = TOL_DOMAIN) -> float:
    s = side_lengths(a, gamma, n, tol_domain)
    return s.a + s.b + s.c


def area_from_angle(a, gamma, theta) -> AreaValue:
    """Half a^2 gamma sin(theta)."""
    a = as_length(a)
    g = as_gamma(gamma)
    theta = float(theta)
    if not 0.0 <= theta <= math.pi:
        raise DomainError(f"theta must lie in [0, pi], got {theta!r}")
    return AreaValue(0.5 * a * a * g * math.sin(theta), AreaFamily.FIXED_LEG, a)


def _root_term(gamma, n, tol_domain: float = TOL_DOMAIN) -> float:
    """sqrt(4 gamma^2 - [gamma^2 + 1 - (gamma^n + 1)^(2/n)]^2)."""
    _require_real(gamma, n, tol_domain)
    g = as_gamma(gamma)
    # the numerator term is symmetric under gamma -> 1/gamma up to a factor gamma^2
    ge = 1.0 / g if g < 1 else g
    d = numerator_term(ge, n)
    rad = (2.0 * ge - d) * (2.0 * ge + d)
    if rad < 0:
        if rad < -RADICAND_CLAMP * ge * ge:
            raise DomainError(f"negative radicand {rad!r} at gamma={g!r}, n={n!r}")
        rad = 0.0
    root = math.sqrt(rad)
    return root * g * g if g < 1 else root


def area_fixed_leg(a, gamma, n, tol_domain: float = TOL_DOMAIN) -> AreaValue:
    """(a/2)^2 sqrt(4 gamma^2 - [gamma^2 + 1 - (gamma^n + 1)^(2/n)]^2)."""
    a = as_length(a)
    n = as_degree(n)
    return AreaValue(0.25 * a * a * _root_term(gamma, n, tol_domain), AreaFamily.FIXED_LEG, a)


def area_fixed_perimeter(P, gamma, n, tol_domain: float = TOL_DOMAIN) -> AreaValue:
    """Area when a + b + c = P; the leg is a = P / (gamma + 1 + (gamma^n+1)^(1/n))."""
    P = as_length(P, "P")
    n = as_degree(n)
    g = as_gamma(gamma)
    root = _root_term(gamma, n, tol_domain)
    k = g + 1.0 + _third_side_unit(g, n)
    return AreaValue((P / (2.0 * k)) ** 2 * root, AreaFamily.FIXED_PERIMETER, P)


def _check_isosceles_degree(n: float, lower_negative: float) -> None:
    if lower_negative < n < 1:
        raise DomainError(f"degree n={n!r} outside the supported range")


def area_max_fixed_perimeter_isosceles(P, n) -> AreaValue:
    """Isosceles (gamma = 1) area at fixed perimeter, in closed form.

    (P^2/16) sqrt(4^((n+1)/n) - 16^(1/n)) / (1 + 2^((1-n)/n))^2
    """
    P = as_length(P, "P")
    n = as_degree(n)
    _check_isosceles_degree(n, 0.0)
    rad = 4.0 ** ((n + 1.0) / n) - 16.0 ** (1.0 / n)
    rad = max(rad, 0.0)
    val = P * P / 16.0 * math.sqrt(rad) / (1.0 + 2.0 ** ((1.0 - n) / n)) ** 2
    return AreaValue(val, AreaFamily.FIXED_PERIMETER, P)


def area_limit_pos_inf_fixed_perimeter(P, gamma) -> AreaValue:
    """n -> +inf at fixed perimeter: P^2 sqrt(4 gamma^2 - 1) / (4 (2 gamma + 1)^2)."""
    P = as_length(P, "P")
    g = as_gamma(gamma)
    val = 0.25 * math.sqrt(4.0 * g * g - 1.0) / (2.0 * g + 1.0) ** 2 * P * P
    return AreaValue(val, AreaFamily.FIXED_PERIMETER, P)


def _below_two(gamma) -> float:
    g = as_gamma(gamma)
    if g >= 2:
        raise RatioAtLeastTwoError(f"gamma={g!r} has no negative-degree triangle")
    return g


def area_limit_neg_inf_fixed_perimeter(P, gamma) -> AreaValue:
    """n -> -inf at fixed perimeter: P^2 gamma sqrt(4 - gamma^2) / (4 (gamma + 2)^2)."""
    P = as_length(P, "P")
    g = _below_two(gamma)
    val = 0.25 * g / (g + 2.0) ** 2 * math.sqrt(4.0 - g * g) * P * P
    return AreaValue(val, AreaFamily.FIXED_PERIMETER, P)


def area_isosceles_extremal(a, n) -> AreaValue:
    """Fixed-leg area of the isosceles member, a^2 u sqrt(1 - u^2) with u = 2^((1-n)/n).

    Defined for n >= 1 and n <= -1.
    """
    a = as_length(a)
    n = as_degree(n)
    _check_isosceles_degree(n, -1.0)
    e = (1.0 - n) / n
    val = a * a * 2.0**e * math.sqrt(max(0.0, 1.0 - 4.0**e))
    return AreaValue(val, AreaFamily.FIXED_LEG, a)


def area_limit_neg_inf_fixed_leg(a, gamma) -> AreaValue:
    """n -> -inf at fixed leg: a^2 gamma sqrt(4 - gamma^2) / 4."""
    a = as_length(a)
    g = _below_two(gamma)
    return AreaValue(0.25 * a * a * g * math.sqrt(4.0 - g * g), AreaFamily.FIXED_LEG, a)


def area_dn_stationarity_residual(gamma, n) -> float:
    """[gamma^2+1-(gamma^n+1)^(2/n)] [gamma^n/(gamma^n+1) ln gamma - ln(gamma^n+1)/n].

    Shares the sign of dA/dn for n > 0. The second factor never vanishes,
    so zeros come only from the first (n = 2).
    """
    g = as_gamma(gamma)
    n = as_degree(n)
    frac = logistic_pow(g, n)
    return numerator_term(g, n) * (frac * math.log(g) - _log_pow_sum(g, n) / n)


def area_dgamma_condition_residual(gamma, n) -> float:
    """[gamma^2+1-(gamma^n+1)^(2/n)] [1 - gamma^(n-2) (gamma^n+1)^(2/n - 1)] - 4."""
    g = as_gamma(gamma)
    n = as_degree(n)
    w = logistic_pow(g, n) * pow_sum(g, n, 2.0) / (g * g)
    return numerator_term(g, n) * (1.0 - w) - 4.0
