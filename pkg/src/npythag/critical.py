"""Critical degree for negative exponents.

For 1 < gamma < 2 a negative degree n gives a real vertex angle only while
n <= n_crit(gamma), where n_crit solves::

    (gamma^n + 1)^(1/n) = gamma - 1

i.e. the third side shrinks to |b - a| and the triangle closes to a line.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Tuple

from ._validation import (
    DomainError,
    InconclusiveBracketError,
    NoCriticalDegreeError,
    RatioAtLeastTwoError,
    SideRatio,
    as_degree,
    as_gamma,
    as_tolerance,
)
from .angle import pow_sum

TOL_ROOT = 1e-12
BRACKET_FLOOR = -1e6
SCAN_POINTS = 200
MAX_BISECTIONS = 400


@dataclass(frozen=True)
class CriticalDegree:
    gamma: float
    n_crit: float
    residual: float
    bracket: Tuple[float, float]
    iterations: int


def _ratio_in_open_interval(gamma) -> float:
    g = as_gamma(gamma)
    if isinstance(gamma, SideRatio) and g < 1:
        g = 1.0 / g
    if g == 1:
        raise NoCriticalDegreeError("gamma = 1 is real for every negative degree")
    if g >= 2:
        raise RatioAtLeastTwoError(f"no real negative-degree triangle at gamma={g!r}")
    return g


def _residual(g: float, n: float) -> float:
    return pow_sum(g, n, 1.0) - (g - 1.0)


def ncrit_residual(gamma, n) -> float:
    """(gamma^n + 1)^(1/n) - (gamma - 1), for 1 < gamma < 2 and n < 0.

    Negative near n = 0, positive for large |n|; the single sign change
    is n_crit. A real angle needs the residual to be >= 0.
    """
    try:
        g = _ratio_in_open_interval(gamma)
    except NoCriticalDegreeError as exc:
        raise DomainError(str(exc)) from None
    n = as_degree(n)
    if n > 0:
        raise DomainError(f"n must be negative, got {n!r}")
    return _residual(g, n)


def _bracket(g: float) -> Tuple[float, float]:
    lo, hi = -1.0, -0.5
    while _residual(g, hi) >= 0:
        lo, hi = hi, hi / 2.0
    while _residual(g, lo) <= 0:
        lo, hi = lo * 2.0, lo
        if lo < BRACKET_FLOOR:
            raise InconclusiveBracketError(
                f"no sign change above n={BRACKET_FLOOR:g} for gamma={g!r}"
            )
    return lo, hi


def _sign_changes(g: float, lo: float, hi: float) -> int:
    # geometric grid in |n| well beyond the bracket on both sides
    start = abs(hi) / 64.0
    stop = min(abs(lo) * 64.0, -BRACKET_FLOOR)
    ratio = (stop / start) ** (1.0 / (SCAN_POINTS - 1))
    changes, prev = 0, None
    for k in range(SCAN_POINTS):
        r = _residual(g, -start * ratio**k)
        if r == 0:
            continue
        s = r > 0
        if prev is not None and s != prev:
            changes += 1
        prev = s
    return changes


def _solve(g: float, tol: float) -> CriticalDegree:
    lo, hi = _bracket(g)
    changes = _sign_changes(g, lo, hi)
    if changes != 1:
        raise InconclusiveBracketError(
            f"expected one sign change for gamma={g!r}, scan found {changes}"
        )
    a, b = lo, hi
    best_n, best_r = lo, _residual(g, lo)
    it = 0
    while it < MAX_BISECTIONS:
        it += 1
        m = 0.5 * (a + b)
        rm = _residual(g, m)
        if abs(rm) < abs(best_r):
            best_n, best_r = m, rm
        if abs(rm) <= tol or m in (a, b):
            break
        if rm > 0:
            a = m
        else:
            b = m
    if abs(best_r) > tol:
        raise InconclusiveBracketError(
            f"bisection stalled at |residual|={abs(best_r):.3g} > {tol:g} for gamma={g!r}"
        )
    return CriticalDegree(g, best_n, best_r, (lo, hi), it)


_cache: dict = {}
_cache_lock = threading.Lock()


def clear_ncrit_cache() -> None:
    with _cache_lock:
        _cache.clear()


def solve_ncrit(gamma, tol_root: float = TOL_ROOT, use_cache: bool = True) -> CriticalDegree:
    """Critical degree by bracket expansion from [-1, -1/2] then bisection.

    Raises NoCriticalDegreeError at gamma = 1, RatioAtLeastTwoError for
    gamma >= 2 and InconclusiveBracketError when no unique sign change is
    found above n = -1e6.
    """
    g = _ratio_in_open_interval(gamma)
    tol = as_tolerance(tol_root, "tol_root")
    if not use_cache:
        return _solve(g, tol)
    key = (g.hex(), tol.hex())
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    result = _solve(g, tol)
    with _cache_lock:
        _cache.setdefault(key, result)
    return result


def is_real_domain(gamma, n, tol_root: float = TOL_ROOT) -> bool:
    """True iff (gamma, n) yields a real vertex angle."""
    g = as_gamma(gamma)
    if isinstance(gamma, SideRatio) and g < 1:
        g = 1.0 / g
    n = as_degree(n)
    if n >= 1:
        return True
    if n > 0:
        return False
    if g == 1:
        return True
    if g >= 2:
        return False
    return n <= solve_ncrit(g, tol_root).n_crit
