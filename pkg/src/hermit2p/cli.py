"""``hermit2p`` command line.

Exit codes: 0 success, 1 usage error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from . import params as P
from .codes import evaluate_code
from .curve import affine_points, curve_constants, evaluation_set
from .oracle import DEFAULT_BUDGET, BudgetExceeded, Oracle
from .quantum import one_point_aqecc, search_nested_pairs, two_point_aqecc
from .rrspace import TwoPointDivisor, monomial_basis
from .verify import SUITES, run_suites

SUPPORTED_Q = (2, 3, 4, 8)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _q(text: str) -> int:
    q = int(text)
    if q not in SUPPORTED_Q:
        raise argparse.ArgumentTypeError(f"unsupported q={q}; choose from {SUPPORTED_Q}")
    return q


def _divisor(text: str) -> TwoPointDivisor:
    try:
        return TwoPointDivisor.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hermit2p", description="Two-point Hermitian codes and the quantum codes built from them.")
    parser.add_argument("--output", "-o", help="write to this file instead of standard output")
    parser.add_argument("--threads", type=_positive, help="worker threads (overrides HERMIT2P_THREADS)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("curve", help="rational points and constants of the curve")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--emit", choices=("points", "affine", "constants"), default="points")

    p = sub.add_parser("basis", help="monomial basis of L(G)")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--divisor", type=_divisor, required=True)

    p = sub.add_parser("code", help="generator matrix of C_L(D, G)")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--divisor", type=_divisor, required=True)
    p.add_argument("--emit", choices=("generator",), default="generator")

    p = sub.add_parser("tables", help="best one- and two-point dimensions per designed distance")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.add_argument("--delta", type=int, nargs="+", help="explicit designed distances")

    p = sub.add_parser("params", help="classical parameters for design parameter r")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("aqecc", help="asymmetric quantum code from the two-point family")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--r1", type=int, required=True)
    p.add_argument("--r2", type=int, required=True)
    p.add_argument("--one-point", action="store_true", help="parameters of the one-point analog instead")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("search", help="nested two-point divisor pairs")
    p.add_argument("--q", type=_q, required=True)
    p.add_argument("--max-deg", type=int)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("verify", help="check formulas against brute force")
    p.add_argument("--q", type=int, choices=(2, 3), required=True)
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_curve(args) -> str:
    if args.emit == "constants":
        c = curve_constants(args.q)
        return _json({"q": c.q, "genus": c.genus, "n": c.n, "deg_H": c.deg_H, "deg_K": c.deg_K})
    pts = affine_points(args.q) if args.emit == "affine" else evaluation_set(args.q).points
    return "".join(f"{pt}\n" for pt in pts)


def cmd_basis(args) -> str:
    return "".join(f"{m.dx},{m.dy}\n" for m in monomial_basis(args.divisor, args.q))


def cmd_code(args) -> str:
    try:
        C = evaluate_code(args.q, args.divisor)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _json(
        {
            "q": args.q,
            "divisor": {"i": args.divisor.i, "j": args.divisor.j},
            "n": C.n,
            "k": C.k,
            "generator": C.generator.tolist(),
        }
    )


def cmd_tables(args) -> str:
    try:
        rows = P.comparison_table(args.q, args.delta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = ["delta", "dim_one_point", "dim_two_point", "r"]
    data = [[t.delta, t.dim_one_point, t.dim_two_point, t.r] for t in rows]
    if args.format == "csv":
        return _csv(header, data)
    if args.format == "json":
        return _json([dict(zip(header, row)) for row in data])
    lines = [f"{'delta':>5} {'1-point':>8} {'2-point':>8} {'r':>4}"]
    lines += [f"{d:>5} {o:>8} {t:>8} {r:>4}" for d, o, t, r in data]
    return "\n".join(lines) + "\n"


def cmd_params(args) -> str:
    try:
        dec = P.decompose_r(args.q, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    two, one = P.two_point_params(args.q, args.r), P.one_point_params(args.q, args.r)
    if args.format == "text":
        return f"r={args.r} c={dec.c} a={dec.a} two-point {two} one-point {one}\n"
    G = P.two_point_divisor(args.q, args.r)
    return _json(
        {
            "q": args.q,
            "r": args.r,
            "c": dec.c,
            "a": dec.a,
            "divisor": {"i": G.i, "j": G.j},
            "two_point": {"n": two.n, "k": two.k, "d": two.d},
            "one_point": {"n": one.n, "k": one.k, "d": one.d},
        }
    )


def cmd_aqecc(args) -> str:
    try:
        if args.one_point:
            result = one_point_aqecc(args.q, args.r1, args.r2)
        else:
            oracle = Oracle(args.budget, args.threads) if args.oracle else None
            result = two_point_aqecc(args.q, args.r1, args.r2, oracle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _json(result.to_dict())


def cmd_search(args) -> str:
    oracle = Oracle(args.budget, args.threads) if args.oracle else None
    try:
        records = search_nested_pairs(args.q, args.max_deg, oracle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = ["k", "d_z", "d_x", "G1_i", "G1_j", "G2_i", "G2_j"]
    data = [
        [r.k, r.d_z, "" if r.d_x is None else r.d_x, r.G1.i, r.G1.j, r.G2.i, r.G2.j]
        for r in records
    ]
    if args.format == "csv":
        return _csv(header, data)
    return _json([{h: (None if v == "" else v) for h, v in zip(header, row)} for row in data])


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code = 0
    try:
        if args.command == "verify":
            suites = list(SUITES) if args.suite == "all" else [args.suite]
            results = run_suites(args.q, suites, Oracle(args.budget, args.threads))
            text = "".join(line + "\n" for res in results for line in res.lines())
            ok = all(res.ok for res in results)
            text += ("all checks match\n" if ok else "MISMATCH FOUND\n")
            code = 0 if ok else 2
        else:
            handler = {
                "curve": cmd_curve,
                "basis": cmd_basis,
                "code": cmd_code,
                "tables": cmd_tables,
                "params": cmd_params,
                "aqecc": cmd_aqecc,
                "search": cmd_search,
            }[args.command]
            text = handler(args)
    except UsageError as exc:
        print(f"hermit2p: error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"hermit2p: budget exceeded in {args.command}: {exc}", file=sys.stderr)
        return 1
    with _sink(args.output) as out:
        out.write(text)
    return code


@contextmanager
def _sink(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
