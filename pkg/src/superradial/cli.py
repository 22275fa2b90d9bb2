"""Command-line interface.

Subcommands emit a single JSON object (default) or TSV path/value rows.
Output for a given invocation is byte-identical across runs; wall-clock
timings are only added under `--timings`.  Exit codes: 0 on success or
an all-pass check run, 1 when a check suite fails, 2 on usage errors.
"""

import argparse
import json
import os
import sys
import time
from typing import Optional, Sequence

from .exprparse import ExprError, elaborate, parse, to_text
from .gl12 import alpha_closed, alpha_recursive, beta_closed, beta_recursive, build_pair
from .scalars import format_scalar
from .sequences import bernoulli, zigzag
from .suites import SUITE_NAMES, run_suite

DEGREE_ENV = "SUPERRADIAL_DEGREE"
DEFAULT_DEGREE = 4


def _scalar_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    return str(value)


def _tsv_lines(value, path: str = ""):
    if isinstance(value, dict):
        for key, sub in value.items():
            yield from _tsv_lines(sub, f"{path}.{key}" if path else str(key))
    elif isinstance(value, list):
        if value and all(not isinstance(v, (dict, list)) for v in value):
            yield (path, ",".join(_scalar_text(v) for v in value))
        elif not value:
            yield (path, "")
        else:
            for i, sub in enumerate(value):
                yield from _tsv_lines(sub, f"{path}.{i}")
    else:
        yield (path, _scalar_text(value))


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "tsv":
        for path, text in _tsv_lines(payload):
            sys.stdout.write(f"{path}\t{text}\n")
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _resolve_degree(args) -> int:
    if args.degree is not None:
        return args.degree
    env = os.environ.get(DEGREE_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{DEGREE_ENV} is not an integer: {env!r}") from None
    return DEFAULT_DEGREE


def _poly_payload(args, which: str):
    n = args.n
    if n < 0:
        raise ValueError("n must be nonnegative")
    if which == "alpha":
        if args.method == "closed":
            poly = alpha_closed(n)
        elif args.method == "pbw":
            poly = build_pair().alpha_beta_from_pbw(n)[0]
        else:
            poly = alpha_recursive(n)
    else:
        # `beta --n N` reports beta_N; the pbw/closed routes index by the
        # partner alpha, hence the n + 1.
        if args.method == "closed":
            poly = beta_closed(n + 1)
        elif args.method == "pbw":
            poly = build_pair().alpha_beta_from_pbw(n + 1)[1]
        else:
            poly = beta_recursive(n)
    return {"schema": "1", "n": n, which: poly.coeff_strings()}


def _expr_payload(source: str, reduce_to_quotient: bool) -> dict:
    ast = parse(source)
    pair = build_pair()
    element = elaborate(ast, pair.U)
    if reduce_to_quotient:
        element = pair.quotient_reduce(element)
    return {
        "schema": "1",
        "expr": to_text(ast),
        "text": element.text(),
        "terms": element.to_json(),
    }


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superradial",
        description="Exact computations in U(gl(1|2)) and its radial quotient.",
    )
    # SUPPRESS keeps a subcommand's unset copy of a shared flag from
    # clobbering a value parsed before the subcommand name.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("json", "tsv"),
        default=argparse.SUPPRESS,
        help="output format",
    )
    common.add_argument(
        "--timings",
        action="store_true",
        default=argparse.SUPPRESS,
        help="include wall time",
    )
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--timings", action="store_true", default=False)

    sub = parser.add_subparsers(dest="command", required=True)

    for which in ("alpha", "beta"):
        p = sub.add_parser(which, parents=[common], help=f"{which} polynomial table")
        p.add_argument("--n", type=int, required=True)
        p.add_argument(
            "--method",
            choices=("recursive", "closed", "pbw"),
            default="recursive",
        )

    p = sub.add_parser("zigzag", parents=[common], help="Euler zigzag number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("bernoulli", parents=[common], help="Bernoulli number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("--expr", required=True)

    p = sub.add_parser(
        "quotient", parents=[common], help="image of an expression in U(g)/I"
    )
    p.add_argument("--expr", required=True)

    p = sub.add_parser("radial", parents=[common], help="radial restriction report")
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("check", parents=[common], help="run a check suite")
    p.add_argument("--suite", choices=SUITE_NAMES + ("all",), required=True)
    p.add_argument("--degree", type=int, default=None)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    fmt = args.format or "json"
    started = time.monotonic()

    try:
        if args.command in ("alpha", "beta"):
            payload = _poly_payload(args, args.command)
            code = 0
        elif args.command == "zigzag":
            if args.n < 0:
                raise ValueError("n must be nonnegative")
            payload = {"schema": "1", "n": args.n, "zigzag": zigzag(args.n)}
            code = 0
        elif args.command == "bernoulli":
            if args.n < 0:
                raise ValueError("n must be nonnegative")
            payload = {
                "schema": "1",
                "n": args.n,
                "bernoulli": format_scalar(bernoulli(args.n)),
            }
            code = 0
        elif args.command == "nf":
            payload = _expr_payload(args.expr, reduce_to_quotient=False)
            code = 0
        elif args.command == "quotient":
            payload = _expr_payload(args.expr, reduce_to_quotient=True)
            code = 0
        elif args.command == "radial":
            degree = _resolve_degree(args)
            report = build_pair().radial_restriction_check(degree)
            payload = {"schema": "1", **report}
            code = 0 if report["pass"] else 1
        else:
            degree = _resolve_degree(args)
            report = run_suite(args.suite, degree)
            payload = {"schema": "1", **report}
            code = 0 if report["pass"] else 1
    except ExprError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except ValueError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2

    if args.timings:
        payload["seconds"] = round(time.monotonic() - started, 3)
    _emit(payload, fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
