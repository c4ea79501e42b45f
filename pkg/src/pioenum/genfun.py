"""Truncated power series and restricted-partition products.

A partition family is described by a predicate ``g(n, i, j)`` saying whether
part ``i`` may appear with multiplicity ``j``; the count is the coefficient
of ``q**n`` in ``prod_i sum_j g(n, i, j) q**(i*j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from operator import add
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .numutil import DomainError, frobenius_threshold, isqrt
from . import oracle

# below this length schoolbook multiplication beats packing into big ints
_KRONECKER_MIN = 48


class TruncatedSeries:
    """Integer coefficients of ``q**0 .. q**order``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        if len(cs) < order + 1:
            cs += [0] * (order + 1 - len(cs))
        self.order = order
        self.coeffs = cs[: order + 1]

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]], order: int) -> "TruncatedSeries":
        cs = [0] * (order + 1)
        for e, c in terms:
            if 0 <= e <= order:
                cs[e] += c
        return cls(cs, order)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs}, order={self.order})"

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def _schoolbook(a: List[int], b: List[int], n: int) -> List[int]:
    out = [0] * n
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), n - i)):
                out[i + j] += x * b[j]
    return out


def _pack(cs: List[int], width: int) -> int:
    pos = b"".join(max(c, 0).to_bytes(width, "little") for c in cs)
    neg = b"".join(max(-c, 0).to_bytes(width, "little") for c in cs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker(a: List[int], b: List[int], n: int) -> List[int]:
    ma = max(map(abs, a), default=0)
    mb = max(map(abs, b), default=0)
    if not ma or not mb:
        return [0] * n
    bound = ma * mb * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * width
    prod = _pack(a, width) * _pack(b, width)
    count = len(a) + len(b) - 1
    # shift every digit into [0, 2^bits) so the product unpacks byte-wise
    half = 1 << (bits - 1)
    offset = int.from_bytes(half.to_bytes(width, "little") * count, "little")
    raw = (prod + offset).to_bytes(width * count, "little")
    out = [int.from_bytes(raw[i * width:(i + 1) * width], "little") - half for i in range(min(count, n))]
    return out + [0] * (n - len(out))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    if a.order != b.order:
        raise DomainError(f"order mismatch {a.order} != {b.order}")
    n = a.order + 1
    if min(len(a.coeffs), len(b.coeffs)) < _KRONECKER_MIN:
        return TruncatedSeries(_schoolbook(a.coeffs, b.coeffs, n), a.order)
    return TruncatedSeries(_kronecker(a.coeffs, b.coeffs, n), a.order)


def series_mul_schoolbook(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise DomainError(f"order mismatch {a.order} != {b.order}")
    return TruncatedSeries(_schoolbook(a.coeffs, b.coeffs, a.order + 1), a.order)


def series_pow(a: TruncatedSeries, e: int) -> TruncatedSeries:
    """``a**e`` by binary powering."""
    if e < 0:
        raise DomainError("negative exponent; use series_reciprocal first")
    result = TruncatedSeries.one(a.order)
    base = a
    while e:
        if e & 1:
            result = series_mul(result, base)
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """``1/a`` for a series with constant term +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise DomainError("constant term must be a unit")
    n = a.order
    nz = [(k, c) for k, c in enumerate(a.coeffs) if k and c]
    out = [0] * (n + 1)
    out[0] = c0
    for m in range(1, n + 1):
        s = 0
        for k, c in nz:
            if k > m:
                break
            s += c * out[m - k]
        out[m] = -s * c0
    return TruncatedSeries(out, n)


def mul_sparse(coeffs: List[int], terms: Sequence[Tuple[int, int]]) -> List[int]:
    """Multiply a dense coefficient list by ``sum w q**e`` (same truncation)."""
    n = len(coeffs)
    out = [0] * n
    for e, w in terms:
        if e >= n or not w:
            continue
        src = coeffs[: n - e]
        if w != 1:
            src = [w * c for c in src]
        out[e:] = map(add, out[e:], src)
    return out


# --- restricted partitions ----------------------------------------------------

@dataclass(frozen=True)
class MultiplicityPredicate:
    """``evaluator(n, i, j)`` admits part ``i`` with multiplicity ``j`` in partitions of ``n``.

    ``uniform`` marks predicates that ignore ``n``; those can be expanded once
    into a whole series.  ``cost`` is a free-form note on evaluation cost.
    """

    evaluator: Callable[[int, int, int], int]
    uniform: bool = False
    cost: str = "poly(n)"

    def __call__(self, n: int, i: int, j: int) -> int:
        return self.evaluator(n, i, j)


def _product(pred: MultiplicityPredicate, n: int, order: int) -> List[int]:
    cs = [1] + [0] * order
    for i in range(1, order + 1):
        terms = [(i * j, pred(n, i, j)) for j in range(order // i + 1)]
        if terms[0][1] == 1 and all(w == 0 for _, w in terms[1:]):
            continue
        cs = mul_sparse(cs, terms)
    return cs


def restricted_count(pred: MultiplicityPredicate, n: int) -> int:
    """``[q^n] prod_{i<=n} sum_{j<=n/i} g(n, i, j) q^(i j)``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    return _product(pred, n, n)[n]


def restricted_series(pred: MultiplicityPredicate, order: int) -> TruncatedSeries:
    """The whole product up to ``order`` for a predicate independent of ``n``."""
    if not pred.uniform:
        raise DomainError("restricted_series needs a predicate independent of n")
    return TruncatedSeries(_product(pred, order, order), order)


ADMIT_ALL = MultiplicityPredicate(lambda n, i, j: 1, uniform=True, cost="O(1)")
MULTIPLICITY_DIVIDES_N = MultiplicityPredicate(lambda n, i, j: int(j == 0 or n % j == 0), cost="poly(log n)")
PART_DIVIDES_N = MultiplicityPredicate(lambda n, i, j: int(j == 0 or n % i == 0), cost="poly(log n)")


def parts_in(A: Iterable[int]) -> MultiplicityPredicate:
    S = frozenset(A)
    return MultiplicityPredicate(lambda n, i, j: int(j == 0 or i in S), uniform=True)


def f_m(n: int) -> int:
    """Partitions of ``n`` in which every nonzero multiplicity divides ``n``."""
    return restricted_count(MULTIPLICITY_DIVIDES_N, n)


def f_p(n: int) -> int:
    """Partitions of ``n`` in which every part divides ``n``."""
    return restricted_count(PART_DIVIDES_N, n)


def partitions_into_set(g: Callable[[int], int], d: int, B: Iterable[int], n: int) -> int:
    """``p_A(n)`` for ``A = {g(1), g(2), ...}`` with ``g`` strictly increasing.

    ``d = gcd(A)`` and a finite ``B`` inside ``A`` with ``gcd(B) = d`` must be
    supplied; they are not derivable from ``g`` in general.
    """
    B = sorted(set(B))
    if not B or reduce(math.gcd, B) != d:
        raise DomainError(f"gcd({B}) != {d}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n % d:
        return 0
    A = []
    k = 1
    while (v := g(k)) <= n:
        A.append(v)
        k += 1
    n0 = d * frobenius_threshold([b // d for b in B])
    if n <= n0 and n <= oracle.DEFAULT_LIMIT:
        S = set(A)
        return oracle.oracle_count(n, lambda lam: all(p in S for p in lam.parts))
    return restricted_count(parts_in(A), n)


def distinct_squares_count(n: int) -> int:
    """``[q^n] prod_{k^2 <= n} (1 + q^(k^2))``."""
    return distinct_squares_series(n)[n]


def distinct_squares_series(order: int) -> List[int]:
    cs = [1] + [0] * order
    for k in range(1, isqrt(order) + 1):
        cs = mul_sparse(cs, [(0, 1), (k * k, 1)])
    return cs


def squares_series(order: int) -> List[int]:
    """Partitions into squares, ``prod_k 1/(1 - q^(k^2))``."""
    cs = [1] + [0] * order
    for k in range(1, isqrt(order) + 1):
        s = k * k
        for t in range(s, order + 1):
            cs[t] += cs[t - s]
    return cs


SQUARE_MULTIPLICITIES = MultiplicityPredicate(lambda _n, i, j: int(isqrt(j) ** 2 == j), uniform=True)


def square_multiplicities_count(n: int) -> int:
    """Partitions of ``n`` whose nonzero multiplicities are all squares."""
    return restricted_count(SQUARE_MULTIPLICITIES, n)


def square_multiplicities_series(order: int) -> List[int]:
    return restricted_series(SQUARE_MULTIPLICITIES, order).coeffs


def binary_partitions_list(n: int) -> List[int]:
    """``f_bp(0..n)`` from ``f(t) = f(t-1) + f(t/2)``."""
    out = [1] + [0] * n
    for t in range(1, n + 1):
        out[t] = out[t - 1] + (out[t // 2] if t % 2 == 0 else 0)
    return out


def mary_partitions(m: int, n: int, method: str = "auto") -> int:
    """Partitions of ``n`` into powers of ``m``."""
    if m < 2:
        raise DomainError(f"m must be >= 2, got {m}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if method == "auto":
        method = "recurrence" if m == 2 else "product"
    if method == "recurrence":
        if m != 2:
            raise DomainError("the linear recurrence path is for m = 2")
        return binary_partitions_list(n)[n]
    powers = []
    p = 1
    while p <= n:
        powers.append(p)
        p *= m
    return restricted_count(parts_in(powers), n)
