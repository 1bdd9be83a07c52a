"""Command-line interface.

Subcommands: det, lu, check-pd, gen, bench, oracle. Matrices come either
from a file in the four-line text format (``--input FILE``, ``-`` for
standard input) or from a generator spec (``--family ex33 --n 100``).

Exit codes for ``det``: 0 success, 2 parse/usage failure, 3 overflow in
plain mode, 4 two-term algorithm requested on a zero-pivot matrix.
``check-pd`` exits 0 (positive definite), 1 (not), 2 (bad input).
"""

from __future__ import annotations

import argparse
import sys

from . import bench as bench_mod
from .core import (
    MatrixParseError,
    NotSymmetricError,
    PlainOverflowError,
    SignedLogValue,
    TridetError,
    ZeroPivotError,
    format_matrix_text,
    format_scalar,
    parse_matrix_text,
    to_dense,
)
from .factorization import Convention, is_positive_definite, lu_factorize
from .generators import Family, gen_example
from .oracle import dense_det_exact, dense_det_float
from .recurrences import Algorithm, det_hybrid, det_hybrid_scaled, det_three_term, det_two_term
from .symbolic import det_detgtri

EXIT_OK = 0
EXIT_NOT_PD = 1
EXIT_PARSE = 2
EXIT_OVERFLOW = 3
EXIT_ZERO_PIVOT = 4


class CliError(Exception):
    def __init__(self, message, code=EXIT_PARSE):
        super().__init__(message)
        self.code = code


def _add_input_args(p):
    p.add_argument("--input", help="matrix file in the text format, or - for stdin")
    p.add_argument("--family", choices=[f.value for f in Family], help="generator family")
    p.add_argument("--n", type=int, help="matrix order for --family")


def _load_matrix(args):
    if args.family is not None:
        if args.n is None:
            raise CliError("--family requires --n")
        try:
            return gen_example(Family(args.family), args.n)
        except ValueError as exc:
            raise CliError(str(exc))
    if args.input is None:
        raise CliError("provide --input or --family/--n")
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc}")
    try:
        return parse_matrix_text(text)
    except (MatrixParseError, TridetError) as exc:
        raise CliError(f"bad matrix input: {exc}")


def _all_integral(matrix) -> bool:
    return all(float(x).is_integer() for x in (*matrix.d, *matrix.a, *matrix.b))


def cmd_det(args) -> int:
    matrix = _load_matrix(args)
    alg = Algorithm(args.alg)
    try:
        if args.mode == "scaled":
            result = det_hybrid_scaled(matrix, zero_tol=args.zero_tol)
        elif alg is Algorithm.TWO_TERM:
            # the pivot product divides even for integer matrices; keep it
            # exact when the input is integral so results print as integers
            result = det_two_term(matrix, zero_tol=args.zero_tol, exact=_all_integral(matrix))
        elif alg is Algorithm.THREE_TERM:
            result = det_three_term(matrix)
        elif alg is Algorithm.DETGTRI:
            value = det_detgtri(matrix)
            print(format_scalar(value))
            print("algorithm: detgtri")
            return EXIT_OK
        else:
            result = det_hybrid(matrix, zero_tol=args.zero_tol)
    except ZeroPivotError as exc:
        raise CliError(str(exc), code=EXIT_ZERO_PIVOT)
    except PlainOverflowError as exc:
        raise CliError(f"{exc} (use --mode scaled)", code=EXIT_OVERFLOW)
    value = result.value
    if isinstance(value, SignedLogValue):
        print(f"{value.sign} {format_scalar(value.logmag) if value.sign else 0}")
    else:
        print(format_scalar(value))
    print(f"algorithm: {result.algorithm.value}")
    return EXIT_OK


def cmd_lu(args) -> int:
    matrix = _load_matrix(args)
    try:
        factors = lu_factorize(matrix, Convention(args.convention))
    except ZeroPivotError as exc:
        raise CliError(str(exc), code=EXIT_NOT_PD)
    print(f"convention: {factors.convention.value}")
    print(matrix.n)
    for row in (factors.l_diag, factors.l_sub, factors.u_diag, factors.u_super):
        print(" ".join(format_scalar(x) for x in row))
    return EXIT_OK


def cmd_check_pd(args) -> int:
    matrix = _load_matrix(args)
    try:
        verdict = is_positive_definite(matrix)
    except NotSymmetricError as exc:
        raise CliError(str(exc))
    if verdict:
        print("positive-definite")
        print("c = " + " ".join(format_scalar(x) for x in verdict.pivots))
        return EXIT_OK
    print(f"not-positive-definite index={verdict.failure_index}")
    return EXIT_NOT_PD


def cmd_gen(args) -> int:
    if args.family is None or args.n is None:
        raise CliError("gen requires --family and --n")
    try:
        matrix = gen_example(Family(args.family), args.n)
    except ValueError as exc:
        raise CliError(str(exc))
    sys.stdout.write(format_matrix_text(matrix))
    return EXIT_OK


def cmd_oracle(args) -> int:
    matrix = _load_matrix(args)
    grid = to_dense(matrix)
    if args.exact:
        # entries arrive as floats from the parser; integral ones are exact ints
        grid = [[int(x) if float(x).is_integer() else x for x in row] for row in grid]
        print(format_scalar(dense_det_exact(grid)))
    else:
        print(format_scalar(dense_det_float(grid)))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.family is None:
        raise CliError("bench requires --family")
    try:
        sizes = [int(s) for s in args.n_list.split(",") if s]
        algs = [Algorithm(s) for s in args.algs.split(",") if s]
    except ValueError as exc:
        raise CliError(f"bad bench plan: {exc}")
    family = Family(args.family)
    plan = [(family, n, alg) for n in sizes for alg in algs]
    records = bench_mod.run_bench(plan, trials=args.trials, warmup=args.warmup)
    for r in records:
        print(
            f"{r.family.value} n={r.n} {r.algorithm.value}: "
            f"median={r.median_seconds:.6f}s sign={r.result_sign} logmag={r.result_logmag:.6g}"
        )
    if args.csv:
        bench_mod.emit_csv(records, args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tridet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="evaluate a determinant")
    _add_input_args(p)
    p.add_argument("--alg", default="hybrid", choices=["two_term", "three_term", "hybrid", "detgtri"])
    p.add_argument("--mode", default="plain", choices=["plain", "scaled"])
    p.add_argument("--zero-tol", dest="zero_tol", type=float, default=0.0)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("lu", help="LU factorization")
    _add_input_args(p)
    p.add_argument("--convention", default="doolittle", choices=[c.value for c in Convention])
    p.set_defaults(func=cmd_lu)

    p = sub.add_parser("check-pd", help="positive-definiteness test")
    _add_input_args(p)
    p.set_defaults(func=cmd_check_pd)

    p = sub.add_parser("gen", help="emit a family instance in the matrix text format")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="dense brute-force determinant")
    _add_input_args(p)
    p.add_argument("--exact", action="store_true", help="exact fraction-free elimination")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="median-timing benchmark with CSV output")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--n", dest="n_list", required=True, help="comma-separated orders")
    p.add_argument("--algs", default="hybrid,three_term", help="comma-separated algorithms")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--warmup", type=int, default=2)
    p.add_argument("--csv", help="output CSV path")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TridetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
