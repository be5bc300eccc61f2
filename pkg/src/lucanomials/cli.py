"""Command-line interface: compute values, enumerate tilings, run verifiers.

Every run with identical arguments produces byte-identical output: there is
no randomness anywhere, all sweeps iterate in sorted (n, k) order, and JSON
is emitted with sorted keys.  Exit status is 0 on success, 1 when a
verification finds a counterexample, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bijection, narayana, tilings
from .lucas import fibonomial, lucanomial
from .lucas import lucas as lucas_poly
from .polys import Poly
from .tilings import ShapeError

_VERIFY_DEFAULTS = {
    "theorem1": 10,
    "theorem2": 25,
    "theorem3": 12,
    "bijection": 6,
    "catalan": 8,
    "classical": 15,
}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format (default: text)")

    parser = argparse.ArgumentParser(
        prog="lucanomials",
        description="Exact Lucas polynomials, lucanomial and fibonomial "
                    "coefficients, Narayana and Catalan analogues, rectangle "
                    "tilings, and the stairstep bijection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lucas", parents=[fmt], help="Lucas polynomial {n}")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lucanomial", parents=[fmt], help="lucanomial {n choose k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("fibonomial", parents=[fmt], help="fibonomial coefficient")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("narayana", parents=[fmt], help="Narayana-style numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("fibo", "general", "classical"), default="fibo")

    p = sub.add_parser("catalan", parents=[fmt], help="Catalan-style numbers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("fibo", "general", "classical"), default="fibo")

    p = sub.add_parser("tilings", parents=[fmt], help="rectangle tilings of k x (n-k)")
    p.add_argument("action", choices=("count", "list"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("bijection", parents=[fmt], help="apply the stairstep bijection")
    p.add_argument("action", choices=("forward", "inverse"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input", required=True, metavar="FILE",
                   help="stairstep rows (forward) or triple JSON (inverse)")

    p = sub.add_parser("verify", parents=[fmt], help="run an exhaustive verifier")
    p.add_argument("target", choices=("theorem1", "theorem2", "theorem3",
                                      "bijection", "catalan", "classical"))
    p.add_argument("--n-max", type=int, default=None,
                   help="sweep bound (defaults per target)")
    p.add_argument("--n", type=int, default=None, help="check a single n")
    p.add_argument("--k", type=int, default=None, help="check a single k")
    return parser


def _emit_poly(poly: Poly, fmt: str) -> None:
    print(str(poly) if fmt == "text" else _dump(poly.to_json_dict()))


def _emit_int(value: int, fmt: str) -> None:
    print(str(value) if fmt == "text" else _dump({"value": str(value)}))


def _emit_checks(name: str, checks: list[dict], fmt: str) -> int:
    ok = all(c["pass"] for c in checks)
    if fmt == "json":
        print(_dump({"target": name, "pass": ok, "checks": checks}))
    else:
        for c in checks:
            where = " ".join(f"{key}={c[key]}" for key in ("n", "k") if key in c)
            if c["pass"]:
                print(f"{name} {where} ok")
            else:
                detail = " ".join(
                    f"{key}={c[key]}" for key in ("lhs", "rhs") if key in c
                )
                print(f"{name} {where} FAIL {detail}".rstrip())
        status = "passed" if ok else "FAILED"
        print(f"{name}: {len(checks)} checks {status}")
    return 0 if ok else 1


def _check_theorem1(n: int, k: int) -> dict:
    lhs = tilings.lucanomial_tiling_oracle(n, k)
    rhs = lucanomial(n, k)
    return {"n": n, "k": k, "lhs": str(lhs), "rhs": str(rhs), "pass": lhs == rhs}


def _check_catalan(n: int) -> dict:
    value = narayana.fibocatalan(n)
    poly = narayana.generalized_catalan(n)
    agrees = poly.evaluate(1, 1) == value
    nonneg = poly.is_nonneg()
    return {
        "n": n,
        "lhs": str(value),
        "rhs": str(poly),
        "nonneg": nonneg,
        "pass": agrees and nonneg,
    }


def _narayana_check(report: dict) -> dict:
    report = dict(report)
    report["pass"] = report["oracle_agrees"] and report["nonneg"]
    return report


def _run_verify(args, parser: argparse.ArgumentParser) -> int:
    n_max = args.n_max if args.n_max is not None else _VERIFY_DEFAULTS[args.target]
    if n_max < 0:
        parser.error("--n-max must be nonnegative")
    single = args.n is not None
    if args.k is not None and not single:
        parser.error("--k requires --n")
    if single and args.n < 0:
        parser.error("--n must be nonnegative")
    if single and args.target == "classical" and args.n < 1:
        parser.error("--n must be positive for this target")

    if args.target == "theorem1":
        if single:
            ks = [args.k] if args.k is not None else range(0, args.n + 1)
            if args.k is not None and not 0 <= args.k <= args.n:
                parser.error("need 0 <= --k <= --n")
            checks = [_check_theorem1(args.n, k) for k in ks]
        else:
            checks = [_check_theorem1(n, k) for n in range(0, n_max + 1) for k in range(0, n + 1)]
        return _emit_checks("theorem1", checks, args.format)

    if args.target == "theorem2":
        if single:
            # Exhaustive realization of the identity at one (n, k) by pair
            # decomposition; cost grows as F_n! * F_{n-1}!.
            if args.k is None:
                parser.error("--n requires --k for this target")
            if not 1 <= args.k <= args.n - 1:
                parser.error("need 1 <= --k <= --n - 1")
            checks = [bijection.verify_pair_decomposition(args.n, args.k)]
            return _emit_checks("theorem2", checks, args.format)
        checks = [
            _narayana_check(narayana.fibonarayana_report(n, k))
            for n in range(2, n_max + 1)
            for k in range(1, n + 1)
        ]
        return _emit_checks("theorem2", checks, args.format)

    if args.target == "theorem3":
        if single:
            if args.n < 1 or (args.k is not None and not 1 <= args.k <= args.n):
                parser.error("need --n >= 1 and 1 <= --k <= --n")
            ks = [args.k] if args.k is not None else range(1, args.n + 1)
            checks = [_narayana_check(narayana.generalized_narayana_report(args.n, k)) for k in ks]
        else:
            checks = [
                _narayana_check(narayana.generalized_narayana_report(n, k))
                for n in range(2, n_max + 1)
                for k in range(1, n + 1)
            ]
        return _emit_checks("theorem3", checks, args.format)

    if args.target == "bijection":
        if single:
            if args.k is None:
                parser.error("--n requires --k for this target")
            if not 1 <= args.k <= args.n - 1:
                parser.error("need 1 <= --k <= --n - 1")
            checks = [bijection.verify_cardinality(args.n, args.k)]
            if args.format == "json" and len(checks) == 1:
                print(_dump(checks[0]))
                return 0 if checks[0]["pass"] else 1
        else:
            checks = [
                bijection.verify_cardinality(n, k)
                for n in range(2, n_max + 1)
                for k in range(1, n)
            ]
        return _emit_checks("bijection", checks, args.format)

    if args.target == "catalan":
        if single:
            checks = [_check_catalan(args.n)]
        else:
            checks = [_check_catalan(n) for n in range(0, n_max + 1)]
        return _emit_checks("catalan", checks, args.format)

    # classical
    bound = args.n if single else n_max
    if bound < 1:
        parser.error("the classical sweep needs a positive bound")
    report = narayana.classical_specialization_report(bound)
    if args.format == "json":
        print(_dump(report))
    else:
        status = "ok" if report["pass"] else f"FAIL {report['first_failure']}"
        print(f"classical n_max={report['n_max']} {status}")
    return 0 if report["pass"] else 1


def _run_bijection(args, parser: argparse.ArgumentParser) -> int:
    path = Path(args.input)
    if not path.is_file():
        parser.error(f"--input file not found: {args.input}")
    text = path.read_text()
    if args.action == "forward":
        try:
            tiling = bijection.StairstepTiling.from_text(text)
        except ShapeError as exc:
            parser.error(f"--input is not a valid stairstep fixture: {exc}")
        if tiling.size != args.n - 1:
            parser.error(f"--input has size {tiling.size}, expected {args.n - 1}")
        if not 1 <= args.k <= args.n - 1:
            parser.error("need 1 <= --k <= --n - 1")
        triple = bijection.forward(tiling, args.k)
        if args.format == "json":
            print(_dump(triple.to_json_dict()))
        else:
            print("small_stair:")
            for row in triple.small_stair.rows:
                print(row)
            print("other_stair:")
            for row in triple.other_stair.rows:
                print(row)
            print("rect:")
            print(_dump(triple.rect.to_json_dict()))
        return 0
    try:
        triple = bijection.TilingTriple.from_json_dict(json.loads(text))
        tiling = bijection.inverse(triple, args.n, args.k)
    except (json.JSONDecodeError, ValueError, ShapeError) as exc:
        parser.error(f"--input is not an invertible triple for (n={args.n}, k={args.k}): {exc}")
    if args.format == "json":
        print(_dump({"rows": list(tiling.rows)}))
    else:
        print(tiling.to_text())
    return 0


def _dispatch(args, parser: argparse.ArgumentParser) -> int:
    if args.command == "lucas":
        if args.n < 0:
            parser.error("--n must be nonnegative")
        _emit_poly(lucas_poly(args.n), args.format)
        return 0
    if args.command == "lucanomial":
        if args.n < 0:
            parser.error("--n must be nonnegative")
        _emit_poly(lucanomial(args.n, args.k), args.format)
        return 0
    if args.command == "fibonomial":
        if args.n < 0:
            parser.error("--n must be nonnegative")
        _emit_int(fibonomial(args.n, args.k), args.format)
        return 0
    if args.command == "narayana":
        if args.n < 1:
            parser.error("--n must be positive")
        if args.mode == "fibo":
            _emit_int(narayana.fibonarayana(args.n, args.k), args.format)
        elif args.mode == "general":
            _emit_poly(narayana.generalized_narayana(args.n, args.k), args.format)
        else:
            _emit_int(narayana.generalized_narayana(args.n, args.k).evaluate(2, -1), args.format)
        return 0
    if args.command == "catalan":
        if args.n < 0:
            parser.error("--n must be nonnegative")
        if args.mode == "fibo":
            _emit_int(narayana.fibocatalan(args.n), args.format)
        elif args.mode == "general":
            _emit_poly(narayana.generalized_catalan(args.n), args.format)
        else:
            _emit_int(narayana.generalized_catalan(args.n).evaluate(2, -1), args.format)
        return 0
    if args.command == "tilings":
        if not 0 <= args.k <= args.n:
            parser.error("need 0 <= --k <= --n")
        if args.action == "count":
            _emit_int(sum(1 for _ in tilings.enumerate_rect_tilings(args.n, args.k)), args.format)
        else:
            items = [rt.to_json_dict() for rt in tilings.enumerate_rect_tilings(args.n, args.k)]
            if args.format == "json":
                print(_dump(items))
            else:
                for item in items:
                    print(_dump(item))
        return 0
    if args.command == "bijection":
        return _run_bijection(args, parser)
    return _run_verify(args, parser)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _dispatch(args, parser)


if __name__ == "__main__":
    sys.exit(main())
