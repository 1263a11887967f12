"""Command-line entry point.

Exit codes: 0 success (whatever the claim verdicts), 2 invalid parameters,
3 tolerance failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .audit import (
    DEFAULT_EPSILON,
    audit_grid,
    audit_instance,
    audit_triple,
    brute_force_search,
    diagonal_check,
    reduce_exponent,
)
from .errors import DomainError, ParameterError, PreconditionError, ToleranceError
from .family import FamilyParams, FermatTriple
from .numerics import rational_str
from .report import render_json_obj, render_report, to_dict

EXIT_OK, EXIT_PARAMS, EXIT_TOLERANCE = 0, 2, 3


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers: {text!r}") from None


def _emit(data: bytes, out: str | None):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _triple_dict(t: FermatTriple) -> dict:
    return {"x": t.x, "y": t.y, "z": t.z}


def cmd_instance(args) -> int:
    report = audit_instance(FamilyParams(args.p, args.u), args.epsilon)
    _emit(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_grid(args) -> int:
    result = audit_grid(args.p, args.u_count, args.epsilon, workers=args.workers)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for r in result.reports:
            name = f"p{r.p}_u{r.u.numerator}-{r.u.denominator}.json"
            (out / name).write_bytes(render_report(r, "json"))
        (out / "index.json").write_bytes(render_json_obj({
            "reports": [
                {"p": r.p, "u": rational_str(r.u), "verdicts": r.verdicts()} for r in result.reports
            ],
            "errors": result.errors,
        }))
    else:
        _emit(render_json_obj({
            "reports": [to_dict(r) for r in result.reports],
            "errors": result.errors,
        }), None)
    return EXIT_OK


def cmd_triple(args) -> int:
    _emit(render_json_obj(audit_triple(FermatTriple(args.x, args.y, args.z, args.p))), None)
    return EXIT_OK


def cmd_search(args) -> int:
    res = brute_force_search(args.p, args.max)
    _emit(render_json_obj({
        "p": res.p,
        "bound": res.bound,
        "triples_tested": res.triples_tested,
        "solutions": [_triple_dict(t) for t in res.solutions],
        "near_misses": [dict(_triple_dict(t), residual=r) for t, r in res.near_misses],
    }), None)
    return EXIT_OK


def cmd_reduce(args) -> int:
    r = reduce_exponent(args.n)
    _emit(render_json_obj({"n": r.n, "p": r.p, "q": r.q}), None)
    return EXIT_OK


def cmd_diagonal(args) -> int:
    hits = diagonal_check(args.n, args.max)
    _emit(render_json_obj({"n": args.n, "max": args.max, "hits": [list(h) for h in hits]}), None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="slope-audit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("instance", help="audit one (p, u) instance")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--u", type=_rational, required=True)
    p.add_argument("--epsilon", type=_rational, default=DEFAULT_EPSILON)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_instance)

    p = sub.add_parser("grid", help="audit u = i/(n+1) for each p")
    p.add_argument("--p", type=_int_list, required=True)
    p.add_argument("--u-count", type=int, required=True)
    p.add_argument("--epsilon", type=_rational, default=DEFAULT_EPSILON)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("triple", help="evaluate the slope polynomial at a triple's slope")
    for name in ("x", "y", "z", "p"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.set_defaults(func=cmd_triple)

    p = sub.add_parser("search", help="exhaustive x^p + y^p = z^p search")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reduce", help="reduce an exponent to an odd prime or 4")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("diagonal", help="check 2*x^n for perfect n-th powers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_diagonal)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except ToleranceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    sys.exit(main())
