"""Catalan numbers ``c_1 = 1, 1, 2, 5, 14, ...`` (indexed so that ``c_n`` counts
the bracketings of ``n`` factors)."""
from __future__ import annotations

from typing import List

from .lrs import ConsistencyError
from .numutil import DomainError, is_power_of_two

_CROSS_CHECK_LIMIT = 64


class CatalanCache:
    """Append-only prefix ``c_1..c_N`` from the convolution recurrence."""

    def __init__(self) -> None:
        self._c: List[int] = [0, 1]  # index 0 unused

    def __len__(self) -> int:
        return len(self._c) - 1

    def extend_to(self, n: int) -> None:
        c = self._c
        for m in range(len(c), n + 1):
            c.append(sum(c[k] * c[m - k] for k in range(1, m)))

    def get(self, n: int) -> int:
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        self.extend_to(n)
        return self._c[n]

    def prefix(self) -> List[int]:
        return self._c[1:]


_CACHE = CatalanCache()


def catalan_convolution(n: int) -> int:
    """``c_n = sum_{k<n} c_k c_{n-k}``, cached."""
    return _CACHE.get(n)


def catalan(n: int) -> int:
    """``c_n`` from ``c_{m+1} = (4m - 2) c_m / (m + 1)``; small ``n`` are also checked by convolution."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c = 1
    for m in range(1, n):
        num = (4 * m - 2) * c
        c, r = divmod(num, m + 1)
        if r:
            raise ConsistencyError(f"inexact division at m={m}")
    if n <= _CROSS_CHECK_LIMIT and c != catalan_convolution(n):
        raise ConsistencyError(f"holonomic and convolution values differ at n={n}")
    return c


def catalan_parity_aware(n: int) -> int:
    """1 when ``c_n`` is odd (exactly when ``n`` is a power of two), otherwise ``c_n``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if is_power_of_two(n):
        return 1
    return catalan(n)


def catalan_parity_prefix(n: int) -> List[int]:
    """``c_1 mod 2, ..., c_n mod 2`` from the convolution recurrence over GF(2).

    Bit ``k`` of ``fwd`` holds ``c_k`` and bit ``n - k`` of ``rev`` holds
    ``c_k``, so the parity of ``sum c_k c_{m-k}`` is a popcount of their AND
    after shifting ``rev``.
    """
    if n < 1:
        return []
    fwd, rev = 0b10, 1 << (n - 1)
    out = [1]
    for m in range(2, n + 1):
        bit = (fwd & (rev >> (n - m))).bit_count() & 1
        out.append(bit)
        if bit:
            fwd |= 1 << m
            rev |= 1 << (n - m)
    return out
