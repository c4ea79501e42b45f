"""Brute-force reference counts by exhaustive enumeration.

These routines are deliberately naive. They serve as ground truth for the
fast counters on small inputs and refuse inputs past a configurable limit.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional

from .numutil import DomainError, isqrt

DEFAULT_LIMIT = 60
DIOPHANTINE_LIMIT = 10_000


class OracleLimitError(RuntimeError):
    """The requested size is past the oracle guardrail."""


@dataclass(frozen=True)
class Partition:
    """A partition stored as a weakly decreasing tuple of positive parts."""

    parts: tuple

    def __post_init__(self):
        ps = self.parts
        if any(p < 1 for p in ps) or any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"not a partition: {ps}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def has_distinct_parts(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def has_distinct_multiplicities(self) -> bool:
        m = self.multiplicities.values()
        return len(set(m)) == len(m)


def _gen(n: int, max_part: int) -> Iterator[tuple]:
    # ascending lexicographic order of the decreasing part lists
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, filter: Optional[Callable[[Partition], bool]] = None,
                         limit: int = DEFAULT_LIMIT) -> List[Partition]:
    """Every partition of ``n`` once, in lexicographic order of part lists."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > limit:
        raise OracleLimitError(f"oracle refuses n={n} (limit {limit})")
    out = []
    for parts in _gen(n, n):
        lam = Partition(parts)
        if filter is None or filter(lam):
            out.append(lam)
    return out


def oracle_count(n: int, filter: Optional[Callable[[Partition], bool]] = None,
                 weight: Optional[Callable[[Partition], int]] = None,
                 limit: int = DEFAULT_LIMIT) -> int:
    """Sum of ``weight`` over the partitions of ``n`` passing ``filter``."""
    lams = enumerate_partitions(n, filter, limit)
    if weight is None:
        return len(lams)
    return sum(weight(lam) for lam in lams)


def oracle_lrs(coeffs, initials, n: int) -> int:
    """Term ``f(n)`` of ``f(t+k) = sum a_i f(t+i)`` by forward iteration."""
    k = len(coeffs)
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if k == 0:
        return 0
    window = list(initials)
    if n <= k:
        return window[n - 1]
    for _ in range(n - k):
        window = window[1:] + [sum(a * f for a, f in zip(coeffs, window))]
    return window[-1]


def _subset_sums(n: int, values: List[int], distinct: bool) -> int:
    # count multisets (or sets) drawn from ``values`` summing to n, by recursion
    def rec(rem: int, idx: int) -> int:
        if rem == 0:
            return 1
        total = 0
        for i in range(idx, len(values)):
            v = values[i]
            if v > rem:
                break
            total += rec(rem - v, i + 1 if distinct else i)
        return total
    return rec(n, 0)


def oracle_diophantine(n: int, form: str) -> int:
    """Exhaustive count for one of the forms ``x+2y^2``, ``x^2+2y^2``,
    ``distinct-squares`` and ``squares``."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if form == "x+2y^2":
        if n > DIOPHANTINE_LIMIT:
            raise OracleLimitError(f"oracle refuses n={n}")
        # every y with 2y^2 <= n leaves exactly one x = n - 2y^2 >= 0
        count, y = 0, 0
        while 2 * y * y <= n:
            count += 1
            y += 1
        return count
    if form == "x^2+2y^2":
        if n > DIOPHANTINE_LIMIT:
            raise OracleLimitError(f"oracle refuses n={n}")
        r = isqrt(n)
        return sum(1 for x in range(r + 1) for y in range(r + 1) if x * x + 2 * y * y == n)
    if form in ("distinct-squares", "squares"):
        if n > 2 * DEFAULT_LIMIT * DEFAULT_LIMIT:
            raise OracleLimitError(f"oracle refuses n={n}")
        sq = [k * k for k in range(1, isqrt(n) + 1)]
        return _subset_sums(n, sq, distinct=form == "distinct-squares")
    raise DomainError(f"unsupported form {form!r}")


def oracle_parts_in(A, n: int, limit: int = 500) -> int:
    """Partitions of ``n`` with every part in the finite set ``A``, one leaf per partition.

    The recursion is as deep as the number of parts, hence the small default limit.
    """
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > limit:
        raise OracleLimitError(f"oracle refuses n={n} (limit {limit})")
    values = sorted(set(A))
    if not values or values[0] < 1:
        raise DomainError("A must be a nonempty set of positive integers")
    return _subset_sums(n, values, distinct=False)
