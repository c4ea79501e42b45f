"""Unsigned partition counts from exact recurrences.

``p_k(n)`` counts partitions of ``n`` into exactly ``k`` parts and ``q_k(n)``
the ones with ``k`` distinct parts.  Tables are kept per process and reused
for any query at the same or smaller size.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from .lrs import ConsistencyError
from .numutil import DomainError, divisor_sums


@dataclass(frozen=True)
class PartitionTable:
    """Rows ``0..limit``; ``rows[m][k]`` is the count for ``m`` with ``k`` parts (``0 <= k <= m``)."""

    limit: int
    rows: Tuple[Tuple[int, ...], ...]
    distinct: bool = False

    def get(self, k: int, m: int) -> int:
        if m < 0 or m > self.limit:
            raise DomainError(f"m={m} outside table range 0..{self.limit}")
        if k < 0 or k > m:
            return 0
        return self.rows[m][k]

    def row(self, m: int) -> Tuple[int, ...]:
        """Counts for ``k = 1..m``."""
        return self.rows[m][1:]

    def total(self, m: int) -> int:
        return sum(self.rows[m])


_CACHE: Dict[bool, PartitionTable] = {}


def _build(n: int, distinct: bool) -> PartitionTable:
    if n < 1:
        raise DomainError(f"table size must be >= 1, got {n}")
    cached = _CACHE.get(distinct)
    if cached is not None and cached.limit >= n:
        return cached if cached.limit == n else PartitionTable(n, cached.rows[: n + 1], distinct)
    rows: List[List[int]] = [[1]]
    for m in range(1, n + 1):
        row = [0] * (m + 1)
        for k in range(1, m + 1):
            prev = rows[m - k]
            if distinct:
                # remove 1 from every part; the part equal to 1 disappears or not
                a = prev[k] if k < len(prev) else 0
                b = prev[k - 1] if k - 1 < len(prev) else 0
            else:
                # either no part equals 1 (subtract 1 from each) or drop one 1
                a = prev[k] if k < len(prev) else 0
                b = rows[m - 1][k - 1]
            row[k] = a + b
        rows.append(row)
    table = PartitionTable(n, tuple(tuple(r) for r in rows), distinct)
    _CACHE[distinct] = table
    return table


def build_pk_table(n: int) -> PartitionTable:
    """``p_k(m)`` for ``1 <= k <= m <= n`` from ``p_k(m) = p_k(m-k) + p_{k-1}(m-1)``."""
    return _build(n, distinct=False)


def build_qk_table(n: int) -> PartitionTable:
    """``q_k(m)`` from ``q_k(m) = q_k(m-k) + q_{k-1}(m-k)``."""
    return _build(n, distinct=True)


def _pentagonal_offsets(n: int) -> List[Tuple[int, int]]:
    out = []
    i = 1
    while True:
        a = i * (3 * i - 1) // 2
        if a > n:
            break
        sign = 1 if i % 2 else -1
        out.append((a, sign))
        b = i * (3 * i + 1) // 2
        if b <= n:
            out.append((b, sign))
        i += 1
    return out


def p_pentagonal(n: int) -> List[int]:
    """``[p(0), ..., p(n)]`` by the pentagonal-number recurrence."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    offsets = _pentagonal_offsets(n)
    p = [1] + [0] * n
    for m in range(1, n + 1):
        s = 0
        for off, sign in offsets:
            if off > m:
                break
            s += p[m - off] if sign > 0 else -p[m - off]
        p[m] = s
    return p


def partition_count(n: int) -> int:
    if n < 0:
        return 0
    return p_pentagonal(n)[n]


def q_list(n: int) -> List[int]:
    """``[q(0), ..., q(n)]``, distinct-part partitions."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    q = [1] + [0] * n
    for k in range(1, n + 1):
        for t in range(n, k - 1, -1):
            q[t] += q[t - k]
    return q


def p_sigma_recurrence(n: int) -> int:
    """``p(n) = (1/n) sum_i sigma(i) p(n-i)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    sigma = [0] + [divisor_sums(i)[1] for i in range(1, n + 1)]
    p = [1] + [0] * n
    for m in range(1, n + 1):
        s = sum(sigma[i] * p[m - i] for i in range(1, m + 1))
        if s % m:
            raise ConsistencyError(f"sigma recurrence not divisible at m={m}")
        p[m] = s // m
    return p[n]


def _variant_table(n: int, variant: str) -> PartitionTable:
    if variant == "P":
        return build_pk_table(n)
    if variant == "Q":
        return build_qk_table(n)
    raise DomainError(f"variant must be 'P' or 'Q', got {variant!r}")


def weighted_parts_sum(g: Callable[[int], int], n: int, variant: str = "P") -> int:
    """``sum_k g(k) p_k(n)`` (variant P) or ``sum_k g(k) q_k(n)`` (variant Q); ``g`` must be positive."""
    table = _variant_table(n, variant)
    total = 0
    for k in range(1, n + 1):
        w = g(k)
        if w < 1:
            raise DomainError(f"g({k}) = {w} is not positive")
        total += w * table.get(k, n)
    return total


def total_parts_divisor_form(n: int, variant: str = "P") -> int:
    """Total number of parts over all (distinct-part) partitions of ``n``, via divisor counts."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if variant == "P":
        base = p_pentagonal(n)
        return sum(divisor_sums(i)[0] * base[n - i] for i in range(1, n + 1))
    if variant == "Q":
        base = q_list(n)
        return sum(divisor_sums(i)[2] * base[n - i] for i in range(1, n + 1))
    raise DomainError(f"variant must be 'P' or 'Q', got {variant!r}")


def compositions_distinct_parts(n: int) -> int:
    """Compositions of ``n`` with no repeated part: ``sum_k k! q_k(n)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    t = build_qk_table(n)
    return sum(math.factorial(k) * t.get(k, n) for k in range(1, n + 1))


def subset_lower_bound_exponent(n: int) -> int:
    """Largest ``m`` with ``m(m+1)/2 <= n/2 - 1``; distinct subsets of ``[m]`` give ``2**m`` partitions into distinct parts."""
    if n < 4:
        raise DomainError("needs n >= 4")
    m = 0
    while (m + 1) * (m + 2) <= n - 2:
        m += 1
    return m
