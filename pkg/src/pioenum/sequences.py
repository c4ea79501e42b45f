"""Named integer sequences shared by the command line and the golden checks."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from . import cancellative as canc
from . import catalan as cat
from . import genfun, lrs, oracle, partitions
from .numutil import DomainError


class BudgetError(RuntimeError):
    """A request exceeds the configured resource budget."""


@dataclass(frozen=True)
class Budget:
    max_order: int = 100_000
    oracle_limit: int = oracle.DEFAULT_LIMIT


# cost kinds: "closed" needs no prefix, "series"/"table" build everything up to n,
# "oracle" enumerates partitions
@dataclass(frozen=True)
class SequenceDef:
    name: str
    summary: str
    start: int
    cost: str
    compute: Callable[[int, int, Optional[int], Budget], List[int]]
    param: Optional[str] = None
    default_param: Optional[int] = None


def _pointwise(f: Callable[[int], int]):
    return lambda lo, hi, _p, _b: [f(n) for n in range(lo, hi + 1)]


def _prefix(f: Callable[[int], List[int]]):
    # f(hi) returns the list for indices 0..hi
    return lambda lo, hi, _p, _b: f(hi)[lo: hi + 1]


_FIB = lrs.LrsSpec((1, 1), (1, 1))


def _fib(lo, hi, _p, _b):
    cls = lrs.classify(_FIB)
    return [lrs.eval(_FIB, cls, n) for n in range(lo, hi + 1)]


def _catalan_prefix(lo, hi, _p, _b):
    out, c = [], 1
    for n in range(1, hi + 1):
        if n >= lo:
            out.append(c)
        c = (4 * n - 2) * c // (n + 1)
    return out


def _table_entry(distinct: bool):
    def compute(lo, hi, k, _b):
        t = partitions.build_qk_table(hi) if distinct else partitions.build_pk_table(hi)
        return [t.get(k, n) for n in range(lo, hi + 1)]
    return compute


def _parts_total(distinct: bool):
    def compute(lo, hi, _p, _b):
        t = partitions.build_qk_table(hi) if distinct else partitions.build_pk_table(hi)
        return [sum(k * t.get(k, n) for k in range(1, n + 1)) for n in range(lo, hi + 1)]
    return compute


def _fcdp(lo, hi, _p, _b):
    t = partitions.build_qk_table(hi)
    return [sum(math.factorial(k) * t.get(k, n) for k in range(1, n + 1)) for n in range(lo, hi + 1)]


def _fdm(lo, hi, _p, budget: Budget):
    if hi > budget.oracle_limit:
        raise BudgetError(f"f_dm is served by exhaustive enumeration only; n={hi} exceeds the oracle limit {budget.oracle_limit}")
    return [oracle.oracle_count(n, lambda lam: lam.has_distinct_multiplicities(), limit=budget.oracle_limit)
            for n in range(lo, hi + 1)]


def _mary(lo, hi, m, _b):
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if m == 2:
        return genfun.binary_partitions_list(hi)[lo: hi + 1]
    powers, p = [], 1
    while p <= hi:
        powers.append(p)
        p *= m
    return genfun.restricted_series(genfun.parts_in(powers), hi).coeffs[lo: hi + 1]


def _etapow(lo, hi, l, _b):
    return canc.eta_power_coeffs(l, hi)[lo: hi + 1]


def _tau(lo, hi, _p, _b):
    return canc.tau_series(hi)[lo - 1: hi]


REGISTRY: Dict[str, SequenceDef] = {s.name: s for s in [
    SequenceDef("catalan", "Catalan numbers c_n (c_1 = 1)", 1, "table", _catalan_prefix),
    SequenceDef("catalan-parity", "1 if c_n is odd, else c_n", 1, "closed", _pointwise(cat.catalan_parity_aware)),
    SequenceDef("fib", "Fibonacci numbers F_1 = F_2 = 1", 1, "closed", _fib),
    SequenceDef("p", "partitions p(n)", 0, "series", _prefix(partitions.p_pentagonal)),
    SequenceDef("q", "partitions into distinct parts q(n)", 0, "series", _prefix(partitions.q_list)),
    SequenceDef("pk", "partitions with exactly k parts", 1, "table", _table_entry(False), "k", 2),
    SequenceDef("qk", "partitions with exactly k distinct parts", 1, "table", _table_entry(True), "k", 2),
    SequenceDef("ptotal", "total number of parts over all partitions", 1, "table", _parts_total(False)),
    SequenceDef("qtotal", "total number of parts over distinct-part partitions", 1, "table", _parts_total(True)),
    SequenceDef("fcdp", "compositions with no repeated part", 1, "table", _fcdp),
    SequenceDef("fm", "partitions whose multiplicities divide n", 1, "table", _pointwise(genfun.f_m)),
    SequenceDef("fp", "partitions whose parts divide n", 1, "table", _pointwise(genfun.f_p)),
    SequenceDef("fsq", "partitions into squares", 0, "series", _prefix(genfun.squares_series)),
    SequenceDef("fdsq", "partitions into distinct squares", 0, "series", _prefix(genfun.distinct_squares_series)),
    SequenceDef("fsm", "partitions whose multiplicities are squares", 0, "series", _prefix(genfun.square_multiplicities_series)),
    SequenceDef("fdm", "partitions with distinct multiplicities (exhaustive)", 1, "oracle", _fdm),
    SequenceDef("mary", "partitions into powers of m", 0, "series", _mary, "m", 2),
    SequenceDef("qpm", "coefficients of prod(1-q^k)", 0, "closed", _pointwise(canc.q_pm)),
    SequenceDef("ppm", "coefficients of prod 1/(1+q^k)", 0, "series",
                _prefix(lambda hi: [(-c if n % 2 else c) for n, c in enumerate(canc.distinct_odd_series(hi))])),
    SequenceDef("ppm2", "coefficients of prod 1/(1+q^k)^2", 0, "series", _prefix(canc.p_pm2_series)),
    SequenceDef("etapow", "coefficients of prod(1-q^k)^l", 0, "series", _etapow, "l", 1),
    SequenceDef("glaisher2", "coefficients of prod(1-q^k)^2 via G(12n+1)", 0, "closed", _pointwise(canc.glaisher_q2)),
    SequenceDef("jacobi3", "coefficients of prod(1-q^k)^3 via triangular numbers", 0, "closed", _pointwise(canc.jacobi_q3)),
    SequenceDef("tau", "Ramanujan tau", 1, "series", _tau),
    SequenceDef("s", "coefficients of prod(1-q^(k^2))", 0, "series", _prefix(lambda hi: canc.signed_square_series("s", hi))),
    SequenceDef("t", "coefficients of prod 1/(1+q^(k^2))", 0, "series", _prefix(lambda hi: canc.signed_square_series("t", hi))),
    SequenceDef("x2y2", "solutions of x^2 + 2y^2 = n in nonnegative integers", 1, "closed",
                _pointwise(lambda n: canc.two_square_forms(n, "x^2+2y^2"))),
    SequenceDef("xy2", "solutions of x + 2y^2 = n in nonnegative integers", 1, "closed",
                _pointwise(lambda n: canc.two_square_forms(n, "x+2y^2"))),
]}


def compute(name: str, lo: int, hi: int, param: Optional[int] = None, budget: Budget = Budget()) -> List[int]:
    """Values of the named sequence at ``lo..hi``."""
    seq = REGISTRY.get(name)
    if seq is None:
        raise KeyError(name)
    if lo < seq.start:
        raise DomainError(f"{name} starts at index {seq.start}")
    if hi < lo:
        return []
    if seq.param is None:
        if param is not None:
            raise DomainError(f"{name} takes no parameter")
    elif param is None:
        param = seq.default_param
    if seq.cost in ("series", "table") and hi > budget.max_order:
        raise BudgetError(f"order {hi} exceeds the budget {budget.max_order}")
    return seq.compute(lo, hi, param, budget)
