import csv
import io
import json
import math

import pytest

from npythag import DomainError
from npythag.sweep import FIGURES, Axis, SweepSpec, figure_spec, fmt, parse_axis, render, rows


def test_fmt_round_trips():
    for x in (0.1, math.pi, 1 / 3, 1e-300, 123456789.123456789, -2.5e17):
        assert float(fmt(x)) == x


def test_parse_axis():
    ax = parse_axis("n", "1:2:11")
    assert ax.values[0] == 1.0 and ax.values[-1] == 2.0 and len(ax.values) == 11
    assert parse_axis("gamma", "1.5") == Axis("gamma", 1.5, 1.5, 1)
    assert parse_axis("gamma", "1:1:1").values == [1.0]
    for bad in ("1:2", "a:b:3", "2:1:5", "1:2:1", "nan"):
        with pytest.raises(DomainError):
            parse_axis("n", bad)


def test_spec_validation():
    with pytest.raises(DomainError):
        SweepSpec("bogus", [parse_axis("n", "1:2:3")])
    with pytest.raises(DomainError):
        SweepSpec("angle", [parse_axis("n", "1:2:3")])  # gamma missing
    with pytest.raises(DomainError):
        SweepSpec("ncrit", [parse_axis("n", "1:2:3")])


def test_csv_rows_and_exclusions():
    spec = SweepSpec("angle", [parse_axis("gamma", "1.5:1.5:1"), parse_axis("n", "-2:0.5:3")])
    out = render(spec)
    assert "\r" not in out
    table = list(csv.reader(io.StringIO(out)))
    assert table[0] == ["gamma", "n", "theta_deg"]
    assert float(table[1][2]) == pytest.approx(31.508339739760007827, abs=1e-12)
    assert table[2][2] == "excluded"  # n = -0.75, above the critical degree
    assert table[3][2] == "excluded"  # n = 0.5


def test_major_order():
    spec = SweepSpec("angle", [parse_axis("n", "2:3:2"), parse_axis("gamma", "1:2:2")])
    got = [(r[0], r[1]) for r in rows(spec)]
    assert got == [(1.0, 2.0), (2.0, 2.0), (1.0, 3.0), (2.0, 3.0)]


def test_json_output():
    spec = SweepSpec("ncrit", [parse_axis("gamma", "1:1.5:2")], output_format="json")
    doc = json.loads(render(spec))
    assert doc["columns"] == ["gamma", "n_crit"]
    assert doc["rows"][0] == [1.0, "excluded"]
    assert doc["rows"][1][1] == pytest.approx(-0.78788491102586978363, abs=1e-9)


def test_radians_column():
    spec = SweepSpec("angle", [parse_axis("gamma", "1:2:2")], fixed={"n": 2.0}, radians=True)
    assert spec.columns[-1] == "theta_rad"
    assert [r[-1] for r in rows(spec)] == [math.pi / 2, math.pi / 2]


def test_excluded_regime_flag():
    plain = SweepSpec("angle", [parse_axis("gamma", "0.5:1:2")], fixed={"n": 3.0})
    swapped = SweepSpec("angle", [parse_axis("gamma", "0.5:1:2")], fixed={"n": 3.0}, excluded_regime=True)
    assert list(rows(plain))[0][-1] is None
    assert list(rows(swapped))[0][-1] is not None


def test_every_figure_preset_builds():
    for k in FIGURES:
        spec = figure_spec(k)
        assert spec.columns
    with pytest.raises(DomainError):
        figure_spec(1)


def test_figure_render_deterministic():
    assert render(figure_spec(9)) == render(figure_spec(9))
