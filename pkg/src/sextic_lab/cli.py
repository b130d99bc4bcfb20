"""Command line entry point; every command prints JSON.

Exit status: 0 when all requested checks pass, 1 on a verification
failure, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import curves, pencil, singular, verify
from .exact.poly import QQ, QQW, proportional
from .exact.textfmt import format_poly, format_scalar, parse_rational, parse_scalar
from .fpgrp import library
from .fpgrp.cosets import coset_enumerate
from .fpgrp.multable import identify_small_group, table_from_cosets
from .fpgrp.presentation import abelianization
from .fpgrp.words import WordSyntaxError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FAMILY_CHANGES = ("paper-epi", "epsilon-twist")
CHARTS = {"X": "X", "Y": "Y", "Z": "Z"}


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number p/q: {text!r}") from exc


def _parameter(text: str):
    """A rational ``p/q`` or an element of Q(w) such as ``3+3*w``."""
    try:
        return _rational(text)
    except argparse.ArgumentTypeError:
        try:
            return parse_scalar(text)
        except Exception as exc:
            raise argparse.ArgumentTypeError(f"not a rational or Q(w) number: {text!r}") from exc


def _emit(payload, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None, ensure_ascii=False))


def _poly_json(p) -> dict:
    return {
        "variables": list(p.variables),
        "domain": p.domain,
        "text": format_poly(p),
        "monomials": [{"exps": list(e), "coef": format_scalar(c)} for e, c in p.sorted_terms()],
    }


def cmd_family(args) -> int:
    t = args.t
    C = curves.build_family_equation(t)
    out = curves.family_to_json(t, C)
    ok = True
    if args.check_symmetry:
        sym = curves.cyclic_shift(C) == C
        out["symmetry"] = "pass" if sym else "fail"
        ok &= sym
    if args.change or args.chart:
        if args.change and args.change not in FAMILY_CHANGES:
            raise UsageError(f"--change must be one of {', '.join(FAMILY_CHANGES)}")
        p = C
        if args.change == "paper-epi":
            p = curves.apply_change(p, curves.epi_change())
        elif args.change == "epsilon-twist":
            p = curves.apply_change(p.to_domain(QQW), curves.twist_change())
        if args.chart:
            var = args.chart if args.change == "paper-epi" else f"z{'XYZ'.index(args.chart)}"
            rest = [v for v in p.variables if v != var]
            p = curves.dehomogenize(p, var, dict(zip(rest, ("x", "y"))))
        out["model"] = _poly_json(p)
        if args.change == "paper-epi" and args.chart == "Z" and t == curves.EPI_PARAMETER:
            match = proportional(p, curves.printed_epi_model())
            out["matches_printed_model"] = match
            ok &= match
    _emit(out, args.pretty)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_singular(args) -> int:
    t = args.t
    domain = QQ if isinstance(t, Fraction) or (hasattr(t, "is_rational") and t.is_rational()) else QQW
    C = curves.build_family_equation(t, domain=domain)
    census = singular.singularity_census(C)
    out = {"t": format_scalar(t), "points": singular.census_to_json(census)}
    unresolved = any(isinstance(r, singular.Unresolved) for r in census)
    total = sum(r.milnor for r in census if isinstance(r, singular.SingularityReport))
    out["milnor_sum"] = total
    out["status"] = "fail" if unresolved else "pass"
    if unresolved:
        out["detail"] = f"unresolved singular candidates; milnor_sum is a lower bound ({total})"
    _emit(out, args.pretty)
    return EXIT_FAIL if unresolved else EXIT_OK


def cmd_pencil(args) -> int:
    t = args.t
    model = curves.printed_epi_model() if args.printed else curves.epi_model(t)
    census = pencil.singular_fiber_census(model)
    out = {"t": format_scalar(t), "census": census.to_json(), "summary": pencil.census_summary(census)}
    ok = True
    if args.printed or t == curves.EPI_PARAMETER:
        ok = pencil.verify_factorization(census.discriminant, pencil.claimed_factorization(),
                                         pencil.NONIC_LEADING)
        out["matches_printed_factorization"] = ok
    out["status"] = "pass" if ok else "fail"
    _emit(out, args.pretty)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_group(args) -> int:
    try:
        pres = library.lookup(args.presentation)
    except (WordSyntaxError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    out = {"presentation": str(pres)}
    if args.action == "abelianize":
        out["invariant_factors"] = list(abelianization(pres))
        _emit(out, args.pretty)
        return EXIT_OK
    ct = coset_enumerate(pres, (), args.limit)
    out["enumeration"] = ct.to_json()
    if not ct.is_complete:
        out["status"] = "fail"
        out["detail"] = f"coset limit reached after defining {ct.defined} cosets"
        _emit(out, args.pretty)
        return EXIT_FAIL
    out["order"] = ct.index
    if args.action == "identify":
        if ct.index > args.table_limit:
            raise UsageError(f"group of order {ct.index} is too large for a multiplication table")
        out["invariants"] = identify_small_group(table_from_cosets(ct))
    out["status"] = "pass"
    _emit(out, args.pretty)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        reports = verify.run_checks(args.only)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    out = {"reports": [r.to_json() for r in reports], "summary": verify.summary(reports)}
    _emit(out, args.pretty)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sextic-lab", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common], help="print the sextic C(t)")
    p.add_argument("--t", type=_rational, required=True)
    p.add_argument("--check-symmetry", action="store_true")
    p.add_argument("--chart", choices=sorted(CHARTS), help="set this coordinate to 1")
    p.add_argument("--change", help=f"named coordinate change ({', '.join(FAMILY_CHANGES)})")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("singular", parents=[common], help="singular points of C(t)")
    p.add_argument("--t", type=_parameter, required=True)
    p.set_defaults(func=cmd_singular)

    p = sub.add_parser("pencil", parents=[common], help="singular fibers of y = const")
    p.add_argument("--t", type=_rational, default=curves.EPI_PARAMETER)
    p.add_argument("--printed", action="store_true", help="use the printed affine model")
    p.set_defaults(func=cmd_pencil)

    p = sub.add_parser("group", parents=[common], help="finitely presented groups")
    p.add_argument("action", choices=("order", "identify", "abelianize"))
    p.add_argument("--presentation", required=True,
                   help=f"one of {', '.join(library.NAMED)} or text like '<a,b | a^2, b^3>'")
    p.add_argument("--limit", type=int, default=None, help="coset limit")
    p.add_argument("--table-limit", type=int, default=2000)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--only", help=f"a check name or group ({', '.join(verify.GROUPS)})")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sextic-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
