"""Parameter sweeps that emit figure data as CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ._validation import DomainError, SideRatio, _finite
from .angle import TOL_DOMAIN, extremal_isosceles_angle, vertex_angle
from .area import area_fixed_leg, area_fixed_perimeter, area_isosceles_extremal
from .critical import TOL_ROOT, solve_ncrit

EXCLUDED = "excluded"

# quantity -> (axes it takes, value column)
QUANTITIES: Dict[str, Tuple[Tuple[str, ...], str]] = {
    "angle": (("gamma", "n"), "theta_deg"),
    "area_fixed_leg": (("gamma", "n"), "area"),
    "area_fixed_perimeter": (("gamma", "n"), "area"),
    "ncrit": (("gamma",), "n_crit"),
    "extremal_angle": (("n",), "theta_deg"),
    "area_isosceles": (("n",), "area"),
}


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(x, ".17g")


@dataclass(frozen=True)
class Axis:
    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.name not in ("gamma", "n"):
            raise DomainError(f"unknown axis {self.name!r}")
        if self.steps == 1:
            if self.lo != self.hi:
                raise DomainError("a single-step axis needs lo == hi")
        elif self.steps < 2 or not self.lo < self.hi:
            raise DomainError(f"axis {self.name} needs steps >= 2 and lo < hi")

    @property
    def values(self) -> List[float]:
        if self.steps == 1:
            return [self.lo]
        step = (self.hi - self.lo) / (self.steps - 1)
        return [self.lo + i * step for i in range(self.steps - 1)] + [self.hi]


def parse_axis(name: str, text: str) -> Axis:
    """``lo:hi:steps`` or a single number (a one-point axis)."""
    parts = str(text).split(":")
    try:
        if len(parts) == 1:
            v = _finite(parts[0], name)
            return Axis(name, v, v, 1)
        if len(parts) == 3:
            return Axis(name, _finite(parts[0], name), _finite(parts[1], name), int(parts[2]))
    except ValueError as exc:
        raise DomainError(f"bad range for --{name}: {text!r} ({exc})") from None
    raise DomainError(f"bad range for --{name}: {text!r}; expected lo:hi:steps")


@dataclass
class SweepSpec:
    quantity: str
    axes: List[Axis]
    fixed: Dict[str, float] = field(default_factory=dict)
    output_format: str = "csv"
    radians: bool = False
    excluded_regime: bool = False
    tol_domain: float = TOL_DOMAIN
    tol_root: float = TOL_ROOT

    def __post_init__(self):
        if self.quantity not in QUANTITIES:
            raise DomainError(f"unknown quantity {self.quantity!r}")
        if self.output_format not in ("csv", "json"):
            raise DomainError(f"unknown output format {self.output_format!r}")
        names = [a.name for a in self.axes]
        if not 1 <= len(names) <= 2 or len(set(names)) != len(names):
            raise DomainError("one or two axes over distinct parameters")
        wanted = QUANTITIES[self.quantity][0]
        for nm in wanted:
            if nm not in names and nm not in self.fixed:
                raise DomainError(f"quantity {self.quantity} needs --{nm}")
        for nm in names:
            if nm not in wanted:
                raise DomainError(f"quantity {self.quantity} does not take --{nm}")

    @property
    def columns(self) -> List[str]:
        params, col = QUANTITIES[self.quantity]
        if self.radians and col == "theta_deg":
            col = "theta_rad"
        return list(params) + [col]


def _ratio(g: float, excluded_regime: bool):
    if g < 1 and excluded_regime:
        return SideRatio.excluded_regime(g)
    return g


def _angle_out(theta: float, radians: bool) -> float:
    return theta if radians else math.degrees(theta)


def evaluate_cell(spec: SweepSpec, point: Dict[str, float]) -> Optional[float]:
    """Value of the spec's quantity at one point, None when out of domain."""
    q = spec.quantity
    try:
        if q == "ncrit":
            return solve_ncrit(_ratio(point["gamma"], spec.excluded_regime), spec.tol_root).n_crit
        if q == "extremal_angle":
            return _angle_out(extremal_isosceles_angle(point["n"]), spec.radians)
        if q == "area_isosceles":
            return area_isosceles_extremal(spec.fixed.get("a", 1.0), point["n"]).area
        g = _ratio(point["gamma"], spec.excluded_regime)
        n = point["n"]
        if q == "angle":
            out = vertex_angle(g, n, spec.tol_domain)
            return _angle_out(out.theta, spec.radians) if out.is_real else None
        if q == "area_fixed_leg":
            return area_fixed_leg(spec.fixed.get("a", 1.0), g, n, tol_domain=spec.tol_domain).area
        return area_fixed_perimeter(spec.fixed.get("P", 1.0), g, n, tol_domain=spec.tol_domain).area
    except DomainError:
        return None


def rows(spec: SweepSpec) -> Iterator[List[object]]:
    """Rows in axis-1-major order; each row lists the parameters then the value."""
    params = QUANTITIES[spec.quantity][0]
    grids = [(a.name, a.values) for a in spec.axes]

    def walk(depth, point):
        if depth == len(grids):
            yield point
            return
        name, vals = grids[depth]
        for v in vals:
            yield from walk(depth + 1, {**point, name: v})

    for point in walk(0, {}):
        full = {**{k: v for k, v in spec.fixed.items() if k in params}, **point}
        yield [full[p] for p in params] + [evaluate_cell(spec, full)]


def render(spec: SweepSpec) -> str:
    table = list(rows(spec))
    if spec.output_format == "json":
        body = [[EXCLUDED if v is None else v for v in r] for r in table]
        return json.dumps({"quantity": spec.quantity, "columns": spec.columns, "rows": body}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(spec.columns)
    for r in table:
        w.writerow([EXCLUDED if v is None else fmt(v) for v in r])
    return buf.getvalue()


# Figure data presets: quantity, axes (major first), fixed parameters.
FIGURES: Dict[int, dict] = {
    2: dict(quantity="angle", axes=[("n", "1:2:11"), ("gamma", "1:10:91")]),
    3: dict(quantity="angle", axes=[("gamma", "1:10:181"), ("n", "1:2:6")]),
    4: dict(quantity="extremal_angle", axes=[("n", "1:2:201")]),
    5: dict(quantity="angle", axes=[("n", "2:100:50"), ("gamma", "1:10:91")]),
    6: dict(quantity="angle", axes=[("n", "2:100:50"), ("gamma", "0.1:5:99")], excluded_regime=True),
    7: dict(quantity="extremal_angle", axes=[("n", "2:100:197")]),
    8: dict(quantity="angle", axes=[("gamma", "0.1:5:200")], fixed={"n": 1e6}, excluded_regime=True),
    9: dict(quantity="ncrit", axes=[("gamma", "1.01:1.99:99")]),
    10: dict(quantity="angle", axes=[("n", "-30:-0.1:100"), ("gamma", "0.5:2:61")], excluded_regime=True),
    11: dict(quantity="angle", axes=[("n", "-10:-1:10"), ("gamma", "0.5:2:151")], excluded_regime=True),
    12: dict(quantity="extremal_angle", axes=[("n", "-30:-1:100")]),
    13: dict(quantity="angle", axes=[("gamma", "1:1.999:200")], fixed={"n": -1e6}),
    14: dict(quantity="area_fixed_leg", axes=[("n", "1:10:37"), ("gamma", "1:10:91")], fixed={"a": 1.0}),
    15: dict(quantity="area_isosceles", axes=[("n", "1:100:397")], fixed={"a": 1.0}),
    16: dict(quantity="area_fixed_perimeter", axes=[("n", "1:100:100"), ("gamma", "1:10:91")], fixed={"P": 1.0}),
    17: dict(quantity="area_fixed_perimeter", axes=[("n", "1:10:10"), ("gamma", "1:100:199")], fixed={"P": 1.0}),
    18: dict(quantity="area_fixed_leg", axes=[("n", "-30:-0.1:100"), ("gamma", "1:1.99:100")], fixed={"a": 1.0}),
    19: dict(quantity="area_fixed_perimeter", axes=[("gamma", "1:1.999:200")], fixed={"P": 1.0, "n": -1e6}),
    20: dict(quantity="area_fixed_perimeter", axes=[("n", "-30:-0.1:100"), ("gamma", "1:1.99:100")], fixed={"P": 1.0}),
}


def figure_spec(number: int, output_format: str = "csv", radians: bool = False) -> SweepSpec:
    try:
        preset = FIGURES[number]
    except KeyError:
        raise DomainError(f"no data preset for figure {number}; have {sorted(FIGURES)}") from None
    return SweepSpec(
        quantity=preset["quantity"],
        axes=[parse_axis(name, text) for name, text in preset["axes"]],
        fixed=dict(preset.get("fixed", {})),
        output_format=output_format,
        radians=radians,
        excluded_regime=preset.get("excluded_regime", False),
    )
