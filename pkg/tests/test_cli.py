import json
import subprocess
import sys

import pytest

from npythag.cli import EXIT_EXCLUDED, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_angle_default_degrees(capsys):
    assert run(capsys, "angle", "--gamma", "1", "--n", "2") == (EXIT_OK, "90\n", "")
    code, out, _ = run(capsys, "angle", "--gamma", "1.5", "--n", "-2")
    assert code == EXIT_OK
    assert float(out) == pytest.approx(31.508339739760007827, abs=1e-12)


def test_angle_radians(capsys):
    code, out, _ = run(capsys, "angle", "--gamma", "1.3", "--n", "1", "--radians")
    assert (code, out) == (EXIT_OK, "3.1415926535897931\n")


def test_angle_excluded(capsys):
    code, out, _ = run(capsys, "angle", "--gamma", "1.5", "--n", "-0.5")
    assert code == EXIT_EXCLUDED
    assert out.startswith("excluded: exceeds critical degree (n_crit ~ -0.78788491")
    code, out, _ = run(capsys, "angle", "--gamma", "3", "--n", "-1")
    assert code == EXIT_EXCLUDED and "ratio >= 2" in out
    code, out, _ = run(capsys, "angle", "--gamma", "1.2", "--n", "0.5")
    assert code == EXIT_EXCLUDED and "fractional" in out


def test_ncrit(capsys):
    code, out, _ = run(capsys, "ncrit", "--gamma", "1.5")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].startswith("n_crit ") and lines[1].startswith("residual ")
    assert float(lines[0].split()[1]) == pytest.approx(-0.78788491102586978363, abs=1e-9)
    assert run(capsys, "ncrit", "--gamma", "1")[:2] == (EXIT_EXCLUDED, "no critical degree (all n<0 valid)\n")
    assert run(capsys, "ncrit", "--gamma", "2")[0] == EXIT_EXCLUDED


def test_area(capsys):
    code, out, _ = run(capsys, "area", "--perimeter", "1", "--gamma", "1", "--n", "2")
    assert (code, out) == (EXIT_OK, "0.042893218813452476\n")
    code, out, _ = run(capsys, "area", "--a", "1", "--gamma", "1.5", "--n", "-0.5")
    assert code == EXIT_EXCLUDED


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["angle", "--gamma", "1"],
        ["angle", "--gamma", "x", "--n", "2"],
        ["angle", "--gamma", "nan", "--n", "2"],
        ["angle", "--gamma", "0.5", "--n", "2"],
        ["angle", "--gamma", "1", "--n", "0"],
        ["area", "--a", "1", "--perimeter", "1", "--gamma", "1", "--n", "2"],
        ["sweep", "--n", "1:2"],
        ["sweep", "--figure", "99"],
        ["bogus"],
    ],
)
def test_usage_errors(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_sweep_negative_range(capsys):
    code, out, _ = run(capsys, "sweep", "--gamma", "1.5", "--n", "-3:-1:3")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "gamma,n,theta_deg"
    assert len(lines) == 4


def test_sweep_json(capsys):
    code, out, _ = run(capsys, "sweep", "--quantity", "ncrit", "--gamma", "1.1:1.9:5", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["rows"]) == 5


def test_sweep_round_trip(capsys):
    code, out, _ = run(capsys, "sweep", "--gamma", "1:3:7", "--n", "3.3")
    from npythag import vertex_angle
    import math

    for line in out.splitlines()[1:]:
        g, n, th = line.split(",")
        assert float(th) == math.degrees(vertex_angle(float(g), float(n)).theta)


def test_sweep_figure(capsys):
    code, out, _ = run(capsys, "sweep", "--figure", "9")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "gamma,n_crit"
    assert len(out.splitlines()) == 100


def test_determinism(capsys):
    a = run(capsys, "sweep", "--figure", "13")
    b = run(capsys, "sweep", "--figure", "13")
    assert a == b


def test_tolerance_env_and_flag_precedence(capsys, monkeypatch):
    # at n_crit itself the cosine sits within ~1e-13 of 1; a tiny band excludes it
    code, out, _ = run(capsys, "ncrit", "--gamma", "1.5")
    nc = out.splitlines()[0].split()[1]
    nudged = repr(float(nc) * (1 - 1e-9))
    assert run(capsys, "angle", "--gamma", "1.5", "--n", nudged)[0] == EXIT_EXCLUDED
    monkeypatch.setenv("NPYTHAG_TOL_DOMAIN", "1e-3")
    assert run(capsys, "angle", "--gamma", "1.5", "--n", nudged)[0] == EXIT_OK
    assert run(capsys, "--tol-domain", "1e-15", "angle", "--gamma", "1.5", "--n", nudged)[0] == EXIT_EXCLUDED
    monkeypatch.setenv("NPYTHAG_TOL_DOMAIN", "garbage")
    assert run(capsys, "angle", "--gamma", "1.5", "--n", "-2")[0] == EXIT_USAGE


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert [c["status"] for c in doc["claims"] if c["id"] == "C-EQ22"] == ["REFUTED"]


def test_verify_mismatch(capsys, monkeypatch):
    import npythag.cli as cli

    monkeypatch.setattr(cli, "load_expected", lambda: {"C-EQ4": "REFUTED"})
    code, _, err = run(capsys, "verify")
    assert code == EXIT_MISMATCH
    assert "mismatch C-EQ4" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "npythag", "angle", "--gamma", "1", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "180\n"
