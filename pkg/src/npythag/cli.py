"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 out-of-domain result, 3 claims
report disagrees with the shipped expectations.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from importlib import resources

from ._validation import (
    DomainError,
    ExcludedDomainError,
    Exclusion,
    NoCriticalDegreeError,
    RatioAtLeastTwoError,
    _finite,
)
from .angle import TOL_DOMAIN, vertex_angle
from .area import area_fixed_leg, area_fixed_perimeter
from .claims import report_json, report_text, run_claims_report
from .critical import TOL_ROOT, solve_ncrit
from .sweep import QUANTITIES, SweepSpec, figure_spec, fmt, parse_axis, render

ENV_TOL_DOMAIN = "NPYTHAG_TOL_DOMAIN"
ENV_TOL_ROOT = "NPYTHAG_TOL_ROOT"

EXIT_OK, EXIT_USAGE, EXIT_EXCLUDED, EXIT_MISMATCH = 0, 1, 2, 3

_VALUE_OPTS = {"--gamma", "--n", "--a", "--perimeter", "--tol", "--tol-domain", "--tol-root"}
_NUMERIC_ISH = re.compile(r"^-[0-9.eE+:-]+$")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _join_negative_values(argv):
    # argparse refuses "--n -30:-1:100" because the value looks like a flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_OPTS and i + 1 < len(argv) and _NUMERIC_ISH.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _number(text):
    try:
        return _finite(text, "value")
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _tolerance(flag_value, env_name, default):
    if flag_value is not None:
        return flag_value
    raw = os.environ.get(env_name)
    if raw is None:
        return default
    try:
        val = float(raw)
    except ValueError:
        raise DomainError(f"{env_name}={raw!r} is not a number") from None
    if not (math.isfinite(val) and val > 0):
        raise DomainError(f"{env_name} must be a positive number")
    return val


def _exclusion_message(reason: Exclusion, gamma: float, n: float, tol_root: float) -> str:
    if reason is Exclusion.EXCEEDS_CRITICAL_DEGREE:
        try:
            nc = solve_ncrit(gamma, tol_root).n_crit
            return f"excluded: exceeds critical degree (n_crit ~ {fmt(nc)})"
        except DomainError:
            return "excluded: exceeds critical degree"
    if reason is Exclusion.RATIO_AT_LEAST_TWO:
        return "excluded: ratio >= 2 (no real triangle for negative degrees)"
    return "excluded: fractional positive degree (0 < n < 1)"


def cmd_angle(args, tol_domain, tol_root):
    out = vertex_angle(args.gamma, args.n, tol_domain)
    if not out.is_real:
        print(_exclusion_message(out.exclusion, args.gamma, args.n, tol_root))
        return EXIT_EXCLUDED
    print(fmt(out.theta if args.radians else math.degrees(out.theta)))
    return EXIT_OK


def cmd_ncrit(args, tol_domain, tol_root):
    tol = args.tol if args.tol is not None else tol_root
    try:
        cd = solve_ncrit(args.gamma, tol)
    except NoCriticalDegreeError:
        print("no critical degree (all n<0 valid)")
        return EXIT_EXCLUDED
    except RatioAtLeastTwoError:
        print("no critical degree: ratio >= 2 admits no real triangle for negative degrees")
        return EXIT_EXCLUDED
    print(f"n_crit {fmt(cd.n_crit)}")
    print(f"residual {fmt(cd.residual)}")
    return EXIT_OK


def cmd_area(args, tol_domain, tol_root):
    try:
        if args.a is not None:
            val = area_fixed_leg(args.a, args.gamma, args.n, tol_domain)
        else:
            val = area_fixed_perimeter(args.perimeter, args.gamma, args.n, tol_domain)
    except ExcludedDomainError as exc:
        print(_exclusion_message(exc.reason, args.gamma, args.n, tol_root))
        return EXIT_EXCLUDED
    print(fmt(val.area))
    return EXIT_OK


def cmd_sweep(args, tol_domain, tol_root):
    if args.figure is not None:
        spec = figure_spec(args.figure, args.format, args.radians)
    else:
        axes, fixed = [], {}
        given = {"gamma": args.gamma, "n": args.n}
        order = ("n", "gamma") if args.major == "n" else ("gamma", "n")
        for name in order:
            text = given[name]
            if text is None:
                continue
            axis = parse_axis(name, text)
            if axis.steps == 1:
                fixed[name] = axis.lo
            else:
                axes.append(axis)
        if not axes and fixed:
            # a pure point query is a one-row sweep
            name = next(iter(fixed))
            axes.append(parse_axis(name, fmt(fixed.pop(name))))
        if args.a is not None:
            fixed["a"] = args.a
        if args.perimeter is not None:
            fixed["P"] = args.perimeter
        spec = SweepSpec(args.quantity, axes, fixed, args.format, args.radians,
                         args.excluded_regime)
    spec.tol_domain, spec.tol_root = tol_domain, tol_root
    sys.stdout.write(render(spec))
    return EXIT_OK


def load_expected() -> dict:
    text = resources.files("npythag").joinpath("expected_claims.json").read_text()
    return json.loads(text)["statuses"]


def cmd_verify(args, tol_domain, tol_root):
    records = run_claims_report(workers=args.workers)
    print(report_json(records) if args.format == "json" else report_text(records))
    expected = load_expected()
    got = {r.id: r.status for r in records}
    if got != expected:
        for cid in sorted(set(got) | set(expected)):
            if got.get(cid) != expected.get(cid):
                print(f"mismatch {cid}: got {got.get(cid)}, expected {expected.get(cid)}",
                      file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="npythag", description=__doc__.splitlines()[0])
    p.add_argument("--tol-domain", type=_number, default=None,
                   help=f"cosine clamp band (env {ENV_TOL_DOMAIN}, default {TOL_DOMAIN:g})")
    p.add_argument("--tol-root", type=_number, default=None,
                   help=f"critical-degree residual tolerance (env {ENV_TOL_ROOT}, default {TOL_ROOT:g})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("angle", help="vertex angle theta(gamma, n)")
    s.add_argument("--gamma", type=_number, required=True)
    s.add_argument("--n", type=_number, required=True)
    unit = s.add_mutually_exclusive_group()
    unit.add_argument("--degrees", dest="radians", action="store_false", help="(default)")
    unit.add_argument("--radians", dest="radians", action="store_true")
    s.set_defaults(func=cmd_angle, radians=False)

    s = sub.add_parser("ncrit", help="critical degree n_crit(gamma) for 1 < gamma < 2")
    s.add_argument("--gamma", type=_number, required=True)
    s.add_argument("--tol", type=_number, default=None, help="residual tolerance")
    s.set_defaults(func=cmd_ncrit)

    s = sub.add_parser("area", help="triangle area at fixed leg or fixed perimeter")
    scale = s.add_mutually_exclusive_group(required=True)
    scale.add_argument("--a", type=_number, help="fixed leg length")
    scale.add_argument("--perimeter", type=_number, help="fixed perimeter")
    s.add_argument("--gamma", type=_number, required=True)
    s.add_argument("--n", type=_number, required=True)
    s.set_defaults(func=cmd_area)

    s = sub.add_parser(
        "sweep",
        help="tabulate a quantity over gamma and/or n",
        description="Axes take a number or a range lo:hi:steps (steps >= 2). "
        "Out-of-domain cells print 'excluded'.",
    )
    s.add_argument("--quantity", choices=sorted(QUANTITIES), default="angle")
    s.add_argument("--gamma", help="value or lo:hi:steps")
    s.add_argument("--n", help="value or lo:hi:steps")
    s.add_argument("--a", type=_number, default=None, help="fixed leg (default 1)")
    s.add_argument("--perimeter", type=_number, default=None, help="fixed perimeter (default 1)")
    s.add_argument("--major", choices=("gamma", "n"), default="gamma",
                   help="outer loop when both axes are ranges")
    s.add_argument("--figure", type=int, default=None, help="use the data preset for a figure (2-20)")
    s.add_argument("--excluded-regime", action="store_true",
                   help="evaluate gamma < 1 instead of marking it excluded")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--radians", action="store_true")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("verify", help="run the claims report")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_join_negative_values(argv))
    try:
        tol_domain = _tolerance(args.tol_domain, ENV_TOL_DOMAIN, TOL_DOMAIN)
        tol_root = _tolerance(args.tol_root, ENV_TOL_ROOT, TOL_ROOT)
        return args.func(args, tol_domain, tol_root)
    except DomainError as exc:
        print(f"npythag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
