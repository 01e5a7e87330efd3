"""Numerical adjudication of the published statements about the relation.

Every claim pairs the library formula (or the published formula, when the
published one is suspect) with an oracle that reaches the same quantity by
a different route: Heron's formula and the law of cosines on side lengths,
central differences, sign scans, or 60-digit mpmath re-evaluation.

Status rules:

* VERIFIED      worst residual <= tolerance
* REFUTED       worst residual > 100 x tolerance, and a high-precision
                re-evaluation at the witness agrees
* INCONCLUSIVE  anything else, including solver failures
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional

import mpmath

from ._validation import DomainError, SideRatio
from .angle import extremal_isosceles_angle, limit_angle_neg_inf, limit_angle_pos_inf, vertex_angle
from .area import (
    area_dgamma_condition_residual,
    area_isosceles_extremal,
    area_limit_neg_inf_fixed_leg,
    area_limit_neg_inf_fixed_perimeter,
    area_limit_pos_inf_fixed_perimeter,
    area_max_fixed_perimeter_isosceles,
    side_lengths,
)
from .critical import solve_ncrit
from .oracles import (
    MP_DIGITS,
    angle_from_sides,
    finite_difference,
    heron_area,
    mp_heron,
    mp_vertex_angle,
    sides_angle,
)

REPORT_VERSION = "1"
SEED = 20240521
GRID_POINTS = 2001
SURROGATE_DEGREE = 1e6

VERIFIED = "VERIFIED"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class ClaimRecord:
    id: str
    paper_ref: str
    oracle: str
    status: str
    worst_residual: float
    tolerance: float
    witness: Dict[str, float] = field(default_factory=dict)
    note: str = ""


@dataclass
class _Outcome:
    worst: float
    witness: Dict[str, float]
    tol: float
    confirm: Optional[Callable[[Dict[str, float]], float]] = None
    note: str = ""


@dataclass
class _Claim:
    id: str
    paper_ref: str
    oracle: str
    grid: str
    check: Callable[[], _Outcome]


_REGISTRY: List[_Claim] = []


def _claim(id, paper_ref, oracle, grid):
    def deco(fn):
        _REGISTRY.append(_Claim(id, paper_ref, oracle, grid, fn))
        return fn

    return deco


def linspace(lo: float, hi: float, k: int) -> List[float]:
    step = (hi - lo) / (k - 1)
    return [lo + i * step for i in range(k - 1)] + [hi]


def _worst(pairs):
    """pairs: iterable of (residual, witness) -> (max residual, its witness)."""
    worst, wit = 0.0, {}
    for r, w in pairs:
        if r > worst or not wit:
            worst, wit = r, w
    return worst, wit


def _refine_peak(xs, ys, i) -> float:
    # three-point parabola through the grid extremum; endpoints stay put
    if i == 0 or i == len(xs) - 1:
        return xs[i]
    y0, y1, y2 = ys[i - 1], ys[i], ys[i + 1]
    den = y0 - 2.0 * y1 + y2
    if den == 0:
        return xs[i]
    return xs[i] + 0.5 * (xs[i + 1] - xs[i]) * (y0 - y2) / den


def _unit_heron(gamma, n) -> float:
    return heron_area(side_lengths(1.0, gamma, n))


def _isosceles_fixed_perimeter_heron(P, n) -> float:
    s = side_lengths(1.0, 1.0, n)
    k = P / s.perimeter
    return heron_area((k * s.a, k * s.b, k * s.c))


def _rel(x, ref) -> float:
    return abs(x - ref) / abs(ref) if ref else abs(x)


# -- the registered claims, in report order ----------------------------------


@_claim("C-EQ4", "eq. (4): theta(n=1) = 180 deg and theta(n=2) = 90 deg for every gamma",
        "angle_from_sides", "gamma in linspace(1, 10, 37); n in {1, 2}")
def _c_eq4():
    pts = []
    for g in linspace(1.0, 10.0, 37):
        for n, ref in ((1.0, math.pi), (2.0, math.pi / 2)):
            theta = vertex_angle(g, n).theta
            pts.append((max(abs(theta - ref), abs(sides_angle(g, n) - ref)),
                        {"gamma": g, "n": n, "theta": theta}))
    worst, wit = _worst(pts)
    # n = 1 sides carry one rounding in c, which arccos-free oracles still
    # amplify by sqrt near a straight angle
    return _Outcome(worst, wit, 1e-6)


def _extremum_claim(degrees, kind):
    pts = []
    for n in degrees:
        hi = 4.0 if n > 0 else 1.99
        gs, ths = [], []
        for g in linspace(1.0, hi, GRID_POINTS):
            if vertex_angle(g, n).is_real:
                gs.append(g)
                ths.append(sides_angle(g, n))
        pick = max if kind == "max" else min
        i = ths.index(pick(ths))
        ref = extremal_isosceles_angle(n)
        pts.append((max(abs(ths[i] - ref), abs(gs[i] - 1.0)),
                    {"n": n, "argext_gamma": gs[i], "grid_theta": ths[i], "formula_theta": ref}))
    return _worst(pts)


@_claim("C-EQ6", "eq. (6): the maximum vertex angle for 1 <= n <= 2 is at gamma = 1",
        "grid scan of angle_from_sides", "n in {1.2, 1.5, 1.8}; gamma in linspace(1, 4, 2001)")
def _c_eq6():
    return _Outcome(*_extremum_claim((1.2, 1.5, 1.8), "max"), 1e-6)


@_claim("C-EQ7", "eq. (7): the minimum vertex angle for n >= 2 is at gamma = 1",
        "grid scan of angle_from_sides", "n in {3, 7, 20}; gamma in linspace(1, 4, 2001)")
def _c_eq7():
    return _Outcome(*_extremum_claim((3.0, 7.0, 20.0), "min"), 1e-6)


@_claim("C-EQ13", "eq. (13): the maximum vertex angle for negative n is at gamma = 1",
        "grid scan of angle_from_sides", "n in {-1, -3, -10}; gamma in linspace(1, 1.99, 2001)")
def _c_eq13():
    return _Outcome(*_extremum_claim((-1.0, -3.0, -10.0), "max"), 1e-6)


@_claim("C-EQ8", "eq. (8): piecewise limit of theta as n -> +inf",
        "angle_from_sides at n = 1e6", "gamma in {0.5, 1, 1.5, 3, 10}")
def _c_eq8():
    pts = []
    for g in (0.5, 1.0, 1.5, 3.0, 10.0):
        ratio = SideRatio.excluded_regime(g)
        th = sides_angle(ratio, SURROGATE_DEGREE)
        ref = limit_angle_pos_inf(g)
        pts.append((abs(th - ref), {"gamma": g, "surrogate_theta": th, "limit_theta": ref}))
    return _Outcome(*_worst(pts), 1e-4)


@_claim("C-EQ14", "eq. (14): piecewise limit of theta as n -> -inf",
        "angle_from_sides at n = -1e6", "gamma in {1, 1.3, 1.8, 1.99}")
def _c_eq14():
    pts = []
    for g in (1.0, 1.3, 1.8, 1.99):
        th = sides_angle(g, -SURROGATE_DEGREE)
        ref = limit_angle_neg_inf(g)
        pts.append((abs(th - ref), {"gamma": g, "surrogate_theta": th, "limit_theta": ref}))
    return _Outcome(*_worst(pts), 1e-4)


@_claim("C-EQ10", "eq. (10): isosceles triangles are real for every negative degree",
        "strict triangle inequality on side lengths", "gamma = 1; n = -10^k, k in linspace(-3, 3, 601)")
def _c_eq10():
    bad, wit = 0, {}
    for k in linspace(-3.0, 3.0, 601):
        n = -(10.0**k)
        c = (1.0 + 1.0) ** (1.0 / n)
        if not (0.0 < c < 2.0) or not vertex_angle(1.0, n).is_real:
            bad += 1
            wit = wit or {"n": n, "c": c}
    return _Outcome(float(bad), wit, 0.0)


@_claim("C-EQ11", "eq. (11): the critical degree closes the triangle, c = gamma - 1",
        "direct power evaluation of c at the solver root",
        "gamma in linspace(1.01, 1.99, 50)")
def _c_eq11():
    pts = []
    for g in linspace(1.01, 1.99, 50):
        n = solve_ncrit(g).n_crit
        c = (g**n + 1.0) ** (1.0 / n)
        pts.append((abs(c - (g - 1.0)), {"gamma": g, "n_crit": n, "c": c}))
    return _Outcome(*_worst(pts), 1e-10)


@_claim("C-LINE", "section 3.1: theta -> 0 as n -> n_crit(gamma)",
        "angle_from_sides at the solver root", "gamma in linspace(1.01, 1.99, 50)")
def _c_line():
    pts = []
    for g in linspace(1.01, 1.99, 50):
        n = solve_ncrit(g).n_crit
        c = (g**n + 1.0) ** (1.0 / n)
        th = angle_from_sides(1.0, g, c)
        pts.append((th, {"gamma": g, "n_crit": n, "theta": th}))
    return _Outcome(*_worst(pts), 1e-4)


def _published_equal_angle(g):
    x = (g * g + 1.0) / (2.0 * g) - g / (2.0 * (g + 1.0) ** 2)
    return x


@_claim("C-EQANGLE", "section 3: n = -1 and n = -2 give equal gamma-dependent angles",
        "angle_from_sides for both degrees", "gamma in linspace(1, 1.6, 61), both degrees in domain")
def _c_eqangle():
    pts = []
    for g in linspace(1.0, 1.6, 61):
        if not (vertex_angle(g, -1.0).is_real and vertex_angle(g, -2.0).is_real):
            continue
        t1, t2 = sides_angle(g, -1.0), sides_angle(g, -2.0)
        pts.append((abs(t1 - t2), {"gamma": g, "theta_n_minus_1": t1, "theta_n_minus_2": t2,
                                   "published_cos_arg": _published_equal_angle(g)}))
    worst, wit = _worst(pts)

    def confirm(w):
        with mpmath.workdps(MP_DIGITS):
            return float(abs(mp_vertex_angle(w["gamma"], -1) - mp_vertex_angle(w["gamma"], -2)))

    return _Outcome(worst, wit, 1e-9, confirm)


@_claim("C-GAMMA2", "section 3: no real triangle for negative n once gamma >= 2",
        "triangle inequality c >= gamma - 1 on side lengths",
        f"1000 samples, seed {SEED}: gamma ~ U[2, 10], n ~ U[-50, -0.01]")
def _c_gamma2():
    rng = random.Random(SEED)
    bad, wit = 0, {}
    for _ in range(1000):
        g = rng.uniform(2.0, 10.0)
        n = rng.uniform(-50.0, -0.01)
        c = (g**n + 1.0) ** (1.0 / n)
        if c >= g - 1.0 or vertex_angle(g, n).is_real:
            bad += 1
            wit = wit or {"gamma": g, "n": n, "c": c}
    return _Outcome(float(bad), wit, 0.0)


@_claim("C-N2ONLY", "eq. (17): (gamma^n+1)^(2/n) = gamma^2+1 only at n = 2",
        "sign scan plus bisection on the direct power expression",
        "gamma in {1.2, 2, 5}; n in linspace(0.5, 10, 2001)")
def _c_n2only():
    pts = []
    for g in (1.2, 2.0, 5.0):
        h = lambda n: (g**n + 1.0) ** (2.0 / n) - (g * g + 1.0)  # noqa: E731
        ns = linspace(0.5, 10.0, GRID_POINTS)
        vals = [h(n) for n in ns]
        cross = [i for i in range(len(ns) - 1) if (vals[i] > 0) != (vals[i + 1] > 0)]
        if len(cross) != 1:
            pts.append((float("inf"), {"gamma": g, "sign_changes": len(cross)}))
            continue
        lo, hi = ns[cross[0]], ns[cross[0] + 1]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            if (h(mid) > 0) == (vals[cross[0]] > 0):
                lo = mid
            else:
                hi = mid
        root = 0.5 * (lo + hi)
        pts.append((abs(root - 2.0), {"gamma": g, "root": root, "sign_changes": 1}))
    return _Outcome(*_worst(pts), 1e-9)


@_claim("C-NMAXAREA", "section 4.1: fixed-leg area is largest at n = 2",
        "grid scan of Heron area with parabolic refinement",
        "gamma in {1, 1.5, 2.5}; n in linspace(1, 50, 2001)")
def _c_nmaxarea():
    ns = linspace(1.0, 50.0, GRID_POINTS)
    step = ns[1] - ns[0]
    pts = []
    for g in (1.0, 1.5, 2.5):
        ys = [_unit_heron(g, n) for n in ns]
        i = ys.index(max(ys))
        n_star = _refine_peak(ns, ys, i)
        pts.append((abs(n_star - 2.0), {"gamma": g, "argmax_n": n_star}))
    return _Outcome(*_worst(pts), step)


@_claim("C-EQ20", "eq. (20): dA/dgamma = 0 has no solution for n > 0",
        "sign of the dA/dgamma condition residual plus central differences of Heron area",
        "gamma in linspace(1, 10, 61); n in linspace(1.05, 20, 61)")
def _c_eq20():
    bad, wit = 0, {}
    for g in linspace(1.0, 10.0, 61):
        for n in linspace(1.05, 20.0, 61):
            r = area_dgamma_condition_residual(g, n)
            gg = max(g, 1.0 + 1e-5)
            slope = finite_difference(lambda x: _unit_heron(x, n), gg, 1e-6)
            if r >= 0 or slope <= 0:
                bad += 1
                wit = wit or {"gamma": g, "n": n, "residual": r, "dA_dgamma": slope}
    return _Outcome(float(bad), wit, 0.0)


@_claim("C-SQRT2", "section 4.2 item 3: the n -> -inf fixed-leg maximum is at gamma = sqrt 2 with area a^2/2",
        "grid scan of Heron area on the limiting sides (1, gamma, 1)",
        "gamma in linspace(1, 2, 2001)")
def _c_sqrt2():
    gs = linspace(1.0, 2.0, GRID_POINTS)
    step = gs[1] - gs[0]
    ys = [heron_area((1.0, g, 1.0)) for g in gs]
    i = ys.index(max(ys))
    g_star = _refine_peak(gs, ys, i)
    closed = area_limit_neg_inf_fixed_leg(1.0, g_star).area
    worst = max(abs(g_star - math.sqrt(2.0)), abs(ys[i] - 0.5), abs(closed - 0.5))
    return _Outcome(worst, {"argmax_gamma": g_star, "max_area": ys[i], "closed_form": closed}, step)


@_claim("C-EQ30EQ", "section 4.2 item 1: gamma = 1 and gamma = sqrt 3 give equal areas sqrt(3)/4 a^2",
        "Heron area on the limiting sides (1, gamma, 1)", "gamma in {1, sqrt 3}")
def _c_eq30eq():
    ref = math.sqrt(3.0) / 4.0
    pts = []
    for g in (1.0, math.sqrt(3.0)):
        closed = area_limit_neg_inf_fixed_leg(1.0, g).area
        her = heron_area((1.0, g, 1.0))
        pts.append((max(abs(closed - ref), abs(her - ref)),
                    {"gamma": g, "closed_form": closed, "heron": her}))
    return _Outcome(*_worst(pts), 1e-12)


@_claim("C-EQ25", "eq. (25): isosceles fixed-perimeter area in closed form",
        "Heron area of the rescaled isosceles triangle",
        "n in {1.5, 2, 3, 10, 100, -1, -3, -10}")
def _c_eq25():
    pts = []
    for n in (1.5, 2.0, 3.0, 10.0, 100.0, -1.0, -3.0, -10.0):
        closed = area_max_fixed_perimeter_isosceles(1.0, n).area
        her = _isosceles_fixed_perimeter_heron(1.0, n)
        pts.append((_rel(closed, her), {"n": n, "closed_form": closed, "heron": her}))
    return _Outcome(*_worst(pts), 1e-10)


@_claim("C-EQ26", "eq. (26): the n -> inf isosceles fixed-perimeter area is sqrt(3)/36 P^2",
        "Heron area of the rescaled isosceles triangle at n = 1e6", "P = 1; n = 1e6")
def _c_eq26():
    ref = math.sqrt(3.0) / 36.0
    closed = area_max_fixed_perimeter_isosceles(1.0, SURROGATE_DEGREE).area
    her = _isosceles_fixed_perimeter_heron(1.0, SURROGATE_DEGREE)
    worst = max(_rel(closed, ref), _rel(her, ref))
    return _Outcome(worst, {"n": SURROGATE_DEGREE, "closed_form": closed, "heron": her, "limit": ref}, 1e-4)


@_claim("C-EQ27", "eq. (27): n -> inf fixed-perimeter area as a function of gamma",
        "Heron area of the rescaled triangle at n = 1e6", "P = 1; gamma in {1, 1.5, 3, 10}")
def _c_eq27():
    pts = []
    for g in (1.0, 1.5, 3.0, 10.0):
        s = side_lengths(1.0, g, SURROGATE_DEGREE)
        k = 1.0 / s.perimeter
        her = heron_area((k * s.a, k * s.b, k * s.c))
        closed = area_limit_pos_inf_fixed_perimeter(1.0, g).area
        pts.append((_rel(closed, her), {"gamma": g, "closed_form": closed, "heron": her}))
    return _Outcome(*_worst(pts), 1e-4)


@_claim("C-EQ29", "eq. (29): isosceles fixed-leg area a^2 2^((1-n)/n) sqrt(1 - 4^((1-n)/n))",
        "Heron area of the isosceles triangle", "n in {1.5, 2, 3, 10, 100, -1, -3, -10}")
def _c_eq29():
    pts = []
    for n in (1.5, 2.0, 3.0, 10.0, 100.0, -1.0, -3.0, -10.0):
        closed = area_isosceles_extremal(1.0, n).area
        her = _unit_heron(1.0, n)
        pts.append((_rel(closed, her), {"n": n, "closed_form": closed, "heron": her}))
    return _Outcome(*_worst(pts), 1e-10)


@_claim("C-EQ31", "eq. (31): n -> -inf fixed-perimeter area, largest at gamma = 1 with sqrt(3)/36 P^2",
        "Heron area of the rescaled triangle at n = -1e6, and a gamma grid scan",
        "P = 1; gamma in {1, 1.3, 1.8}; scan gamma in linspace(1, 1.999, 2001)")
def _c_eq31():
    pts = []
    for g in (1.0, 1.3, 1.8):
        s = side_lengths(1.0, g, -SURROGATE_DEGREE)
        k = 1.0 / s.perimeter
        her = heron_area((k * s.a, k * s.b, k * s.c))
        closed = area_limit_neg_inf_fixed_perimeter(1.0, g).area
        pts.append((_rel(closed, her), {"gamma": g, "closed_form": closed, "heron": her}))
    gs = linspace(1.0, 1.999, GRID_POINTS)
    ys = [heron_area((1.0 / (g + 2.0), g / (g + 2.0), 1.0 / (g + 2.0))) for g in gs]
    i = ys.index(max(ys))
    ref = math.sqrt(3.0) / 36.0
    pts.append((max(abs(gs[i] - 1.0), _rel(ys[i], ref)), {"argmax_gamma": gs[i], "max_area": ys[i]}))
    return _Outcome(*_worst(pts), 1e-4)


def published_min_isosceles_area(a: float, n: float) -> float:
    """The isosceles fixed-leg area exactly as published (exponent (3n-2)/(2n))."""
    return a * a * 2.0 ** ((3.0 * n - 2.0) / (2.0 * n)) * math.sqrt(1.0 - 4.0 ** ((1.0 - n) / n))


def _mp_published(n):
    with mpmath.workdps(MP_DIGITS):
        n = mpmath.mpf(n)
        return mpmath.power(2, (3 * n - 2) / (2 * n)) * mpmath.sqrt(1 - mpmath.power(4, (1 - n) / n))


def _mp_isosceles_heron(n):
    with mpmath.workdps(MP_DIGITS):
        c = mpmath.power(2, 1 / mpmath.mpf(n))
        return mp_heron(1, 1, c)


@_claim("C-EQ21", "eq. (21): isosceles fixed-leg area a^2 2^((3n-2)/(2n)) sqrt(1 - 4^((1-n)/n))",
        "Heron area of the isosceles triangle", "a = 1; n in {1.5, 2, 3, 5, 10, 100}")
def _c_eq21():
    pts = []
    for n in (1.5, 2.0, 3.0, 5.0, 10.0, 100.0):
        pub = published_min_isosceles_area(1.0, n)
        her = _unit_heron(1.0, n)
        pts.append((abs(pub - her), {"n": n, "published": pub, "heron": her,
                                     "corrected_exponent_form": area_isosceles_extremal(1.0, n).area}))
    worst, wit = _worst(pts)

    def confirm(w):
        with mpmath.workdps(MP_DIGITS):
            return float(abs(_mp_published(w["n"]) - _mp_isosceles_heron(w["n"])))

    at2 = {"published_at_n2": published_min_isosceles_area(1.0, 2.0),
           "corrected_at_n2": area_isosceles_extremal(1.0, 2.0).area}
    return _Outcome(worst, wit, 1e-10, confirm,
                    note="n=2 evaluations: published {published_at_n2!r}, "
                         "exponent (1-n)/n {corrected_at_n2!r}".format(**at2))


@_claim("C-EQ22", "eq. (22): the n -> inf limit of the isosceles fixed-leg area is sqrt(6) a^2",
        "Heron area of the isosceles triangle at n = 1e6", "a = 1; n = 1e6")
def _c_eq22():
    her = _unit_heron(1.0, SURROGATE_DEGREE)
    published = math.sqrt(6.0)
    wit = {"n": SURROGATE_DEGREE, "published": published, "heron": her,
           "equilateral": math.sqrt(3.0) / 4.0}

    def confirm(w):
        with mpmath.workdps(MP_DIGITS):
            return float(abs(mpmath.sqrt(6) - _mp_isosceles_heron(w["n"])))

    return _Outcome(abs(published - her), wit, 1e-4, confirm)


# -- driver ------------------------------------------------------------------


def claim_ids() -> List[str]:
    return [c.id for c in _REGISTRY]


def _status(out: _Outcome) -> str:
    if out.worst <= out.tol:
        return VERIFIED
    if out.worst > 100.0 * out.tol and out.confirm is not None:
        if out.confirm(out.witness) > 100.0 * out.tol:
            return REFUTED
    return INCONCLUSIVE


def _evaluate(claim: _Claim) -> ClaimRecord:
    try:
        out = claim.check()
    except DomainError as exc:
        return ClaimRecord(claim.id, claim.paper_ref, claim.oracle, INCONCLUSIVE,
                           float("nan"), float("nan"), {}, f"evaluation failed: {exc}")
    return ClaimRecord(claim.id, claim.paper_ref, claim.oracle, _status(out),
                       out.worst, out.tol, out.witness, out.note)


def run_claims_report(workers: int = 1) -> List[ClaimRecord]:
    """Evaluate every registered claim; records come back in registration order."""
    if workers <= 1:
        return [_evaluate(c) for c in _REGISTRY]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate, _REGISTRY))


def grid_spec() -> Dict[str, str]:
    return {c.id: c.grid for c in _REGISTRY}


def report_dict(records: List[ClaimRecord]) -> dict:
    return {
        "version": REPORT_VERSION,
        "grid_spec": {"seed": SEED, "grid_points": GRID_POINTS,
                      "surrogate_degree": SURROGATE_DEGREE, "claims": grid_spec()},
        "claims": [asdict(r) for r in records],
    }


def report_json(records: List[ClaimRecord]) -> str:
    return json.dumps(report_dict(records), indent=2, allow_nan=True)


def report_text(records: List[ClaimRecord]) -> str:
    lines = []
    for r in records:
        lines.append(f"{r.id:<12} {r.status:<13} worst={r.worst_residual:.3e} "
                     f"tol={r.tolerance:.1e}  [{r.oracle}]")
    return "\n".join(lines)
