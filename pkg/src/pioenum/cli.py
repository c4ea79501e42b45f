"""Command-line interface: ``pioenum {seq,lrs,qp,verify,profile}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 resource budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import golden, lrs, quasipoly
from .numutil import DomainError
from .oracle import OracleLimitError
from .sequences import REGISTRY, Budget, BudgetError, compute

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_range(text: str) -> Tuple[int, int]:
    """``"7"`` or ``"1..5"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise UsageError(f"bad index or range {text!r}; expected N or LO..HI") from None


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(v)


def emit_pairs(pairs: Sequence[Tuple[int, object]], fmt: str, out) -> None:
    if fmt == "json":
        json.dump([{"n": n, "value": _fmt(v) if isinstance(v, Fraction) else v} for n, v in pairs], out)
        out.write("\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows((n, _fmt(v)) for n, v in pairs)
    else:
        for n, v in pairs:
            out.write(f"{n}\t{_fmt(v)}\n")


# --- seq ----------------------------------------------------------------------

def cmd_seq(args, out) -> int:
    if args.name not in REGISTRY:
        raise UsageError(f"unknown sequence {args.name!r}; try 'pioenum seq --list'")
    lo, hi = parse_range(args.range)
    values = compute(args.name, lo, hi, args.param, _budget(args))
    emit_pairs(list(zip(range(lo, hi + 1), values)), args.format, out)
    return EXIT_OK


def cmd_list(out) -> int:
    for s in REGISTRY.values():
        extra = f" [--param {s.param}, default {s.default_param}]" if s.param else ""
        out.write(f"{s.name}\t{s.summary} (n >= {s.start}){extra}\n")
    return EXIT_OK


# --- lrs ----------------------------------------------------------------------

def cmd_lrs(args, out) -> int:
    coeffs, init = parse_int_list(args.coeffs), parse_int_list(args.init)
    spec = lrs.LrsSpec(tuple(coeffs), tuple(init))
    if args.classify:
        c = lrs.classify(spec)
        if args.format == "json":
            json.dump({"modulus": c.modulus,
                       "minimal_polynomial": str(c.minpoly),
                       "residues": {str(j): str(c.verdicts[j]) for j in range(1, c.modulus + 1)}}, out)
            out.write("\n")
        else:
            parts = [f"m={c.modulus}"] + [f"r{j}: {c.verdicts[j]}" for j in range(1, c.modulus + 1)]
            out.write("; ".join(parts) + "\n")
        return EXIT_OK
    if args.range is None:
        raise UsageError("give an index or range, or --classify")
    lo, hi = parse_range(args.range)
    if lo < 1:
        raise UsageError("indices start at 1")
    c = lrs.classify(spec)
    emit_pairs([(n, lrs.eval(spec, c, n)) for n in range(lo, hi + 1)], args.format, out)
    return EXIT_OK


# --- qp -----------------------------------------------------------------------

def _parse_weights(text: str) -> dict:
    g = {}
    for item in text.split(","):
        if not item.strip():
            continue
        try:
            k, w = item.split(":")
            g[int(k)] = Fraction(w)
        except ValueError:
            raise UsageError(f"bad weight {item!r}; expected K:W") from None
    return g


def cmd_qp(args, out) -> int:
    if args.qp_kind == "bell":
        q = quasipoly.bell_quasipoly(parse_int_list(args.set))
    elif args.qp_kind == "weighted":
        q = quasipoly.weighted_finite_support(_parse_weights(args.weights), args.variant)
    elif args.qp_kind == "fit":
        if args.sequence not in REGISTRY:
            raise UsageError(f"unknown sequence {args.sequence!r}")
        start = REGISTRY[args.sequence].start
        N = max(args.threshold, start)
        values = compute(args.sequence, start, N + args.modulus * (args.degree + 2), args.param, _budget(args))

        def source(n: int) -> int:
            if n < start:
                raise DomainError(f"{args.sequence} starts at {start}")
            return values[n - start]
        q = quasipoly.interpolate_quasipoly(source, args.modulus, args.degree, N)
    else:
        text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
        q = (quasipoly.QuasiPolynomial.from_json(text) if text.lstrip().startswith("{")
             else quasipoly.QuasiPolynomial.from_text(text))
    if args.eval:
        lo, hi = parse_range(args.eval)
        emit_pairs([(n, quasipoly.qp_eval(q, n)) for n in range(lo, hi + 1)], args.format, out)
    elif args.format == "json":
        out.write(q.to_json() + "\n")
    else:
        out.write(q.to_text())
    return EXIT_OK


# --- verify -------------------------------------------------------------------

def cmd_verify(args, out) -> int:
    if args.suite not in golden.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(golden.SUITES))}")
    count, mismatches = golden.run_suite(args.suite)
    if args.format == "json":
        json.dump({"suite": args.suite, "checks": count, "mismatches": [str(m) for m in mismatches]}, out)
        out.write("\n")
    elif mismatches:
        out.write(f"MISMATCH {mismatches[0]}\n")
    else:
        out.write(f"ok {args.suite}: {count} checks\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


# --- profile ------------------------------------------------------------------

_LN2 = math.log(2)


def ln_int(x: int) -> float:
    """Natural log of a positive integer of any size, via its bit length."""
    b = x.bit_length()
    if b <= 53:
        return math.log(x)
    shift = b - 53
    return shift * _LN2 + math.log(x >> shift)


def pio_measure(n: int, value: int) -> Fraction:
    """``ln(1 + n) + ln(2 + |f(n)|)`` rounded to 12 decimals, as an exact rational."""
    return Fraction(f"{ln_int(1 + n) + ln_int(2 + abs(value)):.12f}")


@dataclass(frozen=True)
class ProfileRecord:
    n: int
    bits: int
    m_n: Fraction
    duration_ns: int
    op: str


def profile(name: str, ladder: Sequence[int], param: Optional[int] = None,
            budget: Budget = Budget(), repeat: int = 3) -> Tuple[List[ProfileRecord], float]:
    """Time single evaluations along ``ladder``; fit ``log duration ~ d log m(n)``."""
    records = []
    for n in ladder:
        best = None
        for _ in range(repeat):
            t0 = time.perf_counter_ns()
            value = compute(name, n, n, param, budget)[0]
            dt = time.perf_counter_ns() - t0
            best = dt if best is None else min(best, dt)
        records.append(ProfileRecord(n, abs(value).bit_length(), pio_measure(n, value), best, name))
    return records, fit_exponent(records)


def fit_exponent(records: Sequence[ProfileRecord]) -> float:
    xs = [math.log(float(r.m_n)) for r in records]
    ys = [math.log(max(r.duration_ns, 1)) for r in records]
    if len(set(xs)) < 2:
        return 0.0
    return statistics.linear_regression(xs, ys).slope


def geometric_ladder(start: int, factor: int, count: int) -> List[int]:
    return [start * factor ** i for i in range(count)]


def cmd_profile(args, out) -> int:
    if args.name not in REGISTRY:
        raise UsageError(f"unknown sequence {args.name!r}")
    ladder = parse_int_list(args.ladder) if args.ladder else geometric_ladder(args.start, args.factor, args.count)
    records, slope = profile(args.name, ladder, args.param, _budget(args), args.repeat)
    if args.format == "json":
        json.dump({"records": [{"n": r.n, "bits": r.bits, "m_n": f"{float(r.m_n):.12f}",
                                "duration_ns": r.duration_ns, "op": r.op} for r in records],
                   "exponent": slope}, out)
        out.write("\n")
        return EXIT_OK
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "bits", "m_n", "duration_ns"])
    for r in records:
        w.writerow([r.n, r.bits, f"{float(r.m_n):.12f}", r.duration_ns])
    out.write(f"# fitted exponent d = {slope:.4f} (duration ~ m(n)^d)\n")
    return EXIT_OK


# --- plumbing -----------------------------------------------------------------

def _budget(args) -> Budget:
    return Budget(max_order=args.max_order, oracle_limit=args.oracle_limit)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit status 2, but route through UsageError
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--max-order", type=int, default=100_000, help="largest series order or table size")
    common.add_argument("--oracle-limit", type=int, default=60, help="largest n for exhaustive enumeration")

    p = _Parser(prog="pioenum", description="Exact values of integer sequences.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("seq", parents=[common], help="values of a named sequence")
    s.add_argument("name", nargs="?")
    s.add_argument("range", nargs="?", help="N or LO..HI")
    s.add_argument("--param", type=int, help="sequence parameter (k, m or l)")
    s.add_argument("--list", action="store_true", help="list the available sequences")

    r = sub.add_parser("lrs", parents=[common], help="linear recurrence f(n+k) = a_0 f(n) + ... + a_{k-1} f(n+k-1)")
    r.add_argument("--coeffs", required=True, help="a_0,...,a_{k-1}")
    r.add_argument("--init", required=True, help="f(1),...,f(k)")
    r.add_argument("range", nargs="?", help="N or LO..HI")
    r.add_argument("--classify", action="store_true", help="print the section classification")

    q = sub.add_parser("qp", parents=[common], help="build, serialize and evaluate quasipolynomials")
    qsub = q.add_subparsers(dest="qp_kind", parser_class=_Parser)
    for kind, helptext in (("bell", "partitions with parts in a finite set"),
                           ("weighted", "weighted counts by number of parts"),
                           ("fit", "interpolate a registered sequence"),
                           ("load", "read a serialized quasipolynomial")):
        k = qsub.add_parser(kind, parents=[common], help=helptext)
        k.add_argument("--eval", help="evaluate at N or LO..HI instead of printing the polynomials")
        if kind == "bell":
            k.add_argument("set", help="comma-separated parts, e.g. 1,2,3")
        elif kind == "weighted":
            k.add_argument("weights", help="K:W pairs, e.g. 2:-1,3:2")
            k.add_argument("--variant", choices=("P", "Q"), default="P")
        elif kind == "fit":
            k.add_argument("sequence")
            k.add_argument("--modulus", type=int, required=True)
            k.add_argument("--degree", type=int, required=True)
            k.add_argument("--threshold", type=int, default=0)
            k.add_argument("--param", type=int)
        else:
            k.add_argument("file", help="path, or - for standard input")

    v = sub.add_parser("verify", parents=[common], help="recompute published reference values")
    v.add_argument("suite")

    f = sub.add_parser("profile", parents=[common], help="time evaluations against m(n)")
    f.add_argument("name")
    f.add_argument("--ladder", help="comma-separated indices")
    f.add_argument("--start", type=int, default=1000)
    f.add_argument("--factor", type=int, default=1000)
    f.add_argument("--count", type=int, default=4)
    f.add_argument("--param", type=int)
    f.add_argument("--repeat", type=int, default=3)
    return p


_LIST_FLAGS = ("--coeffs", "--init", "--ladder")


def _join_list_flags(argv: Sequence[str]) -> List[str]:
    # "--coeffs -1,2" would otherwise be read as an unknown option
    out, it = [], iter(argv)
    for tok in it:
        if tok in _LIST_FLAGS:
            val = next(it, None)
            out.append(tok if val is None else f"{tok}={val}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _join_list_flags(sys.argv[1:] if argv is None else argv)
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)  # values are printed in full, however long
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("missing command; see pioenum --help")
        if args.command == "seq":
            if args.list:
                return cmd_list(out)
            if not args.name or not args.range:
                raise UsageError("seq needs a name and an index or range")
            return cmd_seq(args, out)
        if args.command == "lrs":
            return cmd_lrs(args, out)
        if args.command == "qp":
            if args.qp_kind is None:
                raise UsageError("qp needs one of bell, weighted, fit, load")
            return cmd_qp(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_profile(args, out)
    except UsageError as e:
        err.write(f"pioenum: error: {e}\n")
        return EXIT_USAGE
    except (BudgetError, OracleLimitError) as e:
        err.write(f"pioenum: budget exceeded: {e}\n")
        return EXIT_BUDGET
    except (DomainError, quasipoly.ClassHypothesisError, OSError) as e:
        err.write(f"pioenum: error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
