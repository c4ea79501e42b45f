"""Signed partition counts and coefficients of powers of ``prod (1 - q^k)``.

Closed forms are used where they exist (pentagonal numbers, Jacobi's cubes,
Glaisher's multiplicative function for the square) and truncated products
everywhere else.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

from .genfun import TruncatedSeries, mul_sparse, series_pow
from .lrs import ConsistencyError
from .numutil import (DomainError, divisor_sums, factorize, is_square, isqrt,
                      pentagonal_index, triangular_index)


def _check_n(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")


def q_pm(n: int) -> int:
    """``[q^n] prod_k (1 - q^k)``: ``(-1)^i`` at pentagonal numbers ``i(3i -+ 1)/2``, else 0."""
    _check_n(n)
    i = pentagonal_index(n)
    if i is None:
        return 0
    return -1 if i % 2 else 1


def pentagonal_series(order: int) -> List[int]:
    cs = [0] * (order + 1)
    i = 0
    while True:
        a = i * (3 * i - 1) // 2
        if a > order:
            break
        sign = -1 if i % 2 else 1
        cs[a] = sign
        b = i * (3 * i + 1) // 2
        if i and b <= order:
            cs[b] = sign
        i += 1
    return cs


def distinct_odd_series(order: int) -> List[int]:
    """``[q^t] prod_k (1 + q^(2k-1))`` for ``t <= order``."""
    cs = [1] + [0] * order
    for part in range(1, order + 1, 2):
        cs = mul_sparse(cs, [(0, 1), (part, 1)])
    return cs


def p_pm(n: int) -> int:
    """``[q^n] prod_k 1/(1 + q^k)``, equal to ``(-1)^n`` times the distinct-odd-part count."""
    _check_n(n)
    qo = distinct_odd_series(n)[n]
    return -qo if n % 2 else qo


def eta_power_coeffs(l: int, n: int) -> List[int]:
    """Coefficients of ``prod_k (1 - q^k)^l`` up to ``q^n``."""
    if l < 1:
        raise DomainError(f"l must be positive, got {l}")
    _check_n(n)
    return series_pow(TruncatedSeries(pentagonal_series(n)), l).coeffs


# --- Glaisher's function ----------------------------------------------------

def glaisher_prime_power(p: int, r: int) -> int:
    """``G(p^r)`` from the case table keyed on ``p mod 12`` and the parity of ``r``."""
    if r < 1:
        raise DomainError("exponent must be positive")
    c = p % 12
    if c in (7, 11):
        return 1 if r % 2 == 0 else 0
    if c == 5:
        return (-1) ** (r // 2) if r % 2 == 0 else 0
    if c == 1:
        t = pow(-3 % p, (p - 1) // 4, p)
        if t == 1:
            return r + 1
        if t == p - 1:
            return -(r + 1) if r % 2 else r + 1
        raise ConsistencyError(f"(-3)^((p-1)/4) mod {p} is neither 1 nor -1")
    return 0


def glaisher_g(m: int) -> int:
    """Glaisher's multiplicative ``G``; needs the factorization of ``m``."""
    if m < 1:
        raise DomainError(f"G is defined on positive integers, got {m}")
    out = 1
    for p, r in factorize(m):
        out *= glaisher_prime_power(p, r)
        if not out:
            return 0
    return out


def glaisher_q2(n: int) -> int:
    """``[q^n] prod_k (1 - q^k)^2`` as ``G(12n + 1)``.

    Fast only as far as ``12n + 1`` can be factored; no bound polynomial in
    ``log n`` is known without a factoring oracle.
    """
    _check_n(n)
    return glaisher_g(12 * n + 1)


def jacobi_q3(n: int) -> int:
    """``[q^n] prod_k (1 - q^k)^3``: ``(-1)^i (2i+1)`` at ``n = i(i+1)/2``, else 0."""
    _check_n(n)
    i = triangular_index(n)
    if i is None:
        return 0
    return -(2 * i + 1) if i % 2 else 2 * i + 1


def tau_series(count: int) -> List[int]:
    """``[tau(1), ..., tau(count)]``."""
    if count < 1:
        return []
    return eta_power_coeffs(24, count - 1)


def ramanujan_tau(n: int) -> int:
    if n < 1:
        raise DomainError(f"tau is defined for n >= 1, got {n}")
    return tau_series(n)[n - 1]


# --- sorted signed products --------------------------------------------------

@dataclass(frozen=True)
class SortedSignedSpec:
    """Part ``i`` comes in ``sorts(i)`` kinds; kind ``k`` may be used ``j`` times
    when ``admit(i, j, k)`` is 1, contributing the sign ``(-1)^j``."""

    sorts: Callable[[int], int]
    admit: Callable[[int, int, int], int]


def signed_sorted_series(spec: SortedSignedSpec, order: int) -> List[int]:
    """``prod_i prod_{k <= a_i} sum_j b(i,j,k) (-1)^j q^(i j)`` up to ``q^order``."""
    _check_n(order)
    cs = [1] + [0] * order
    for i in range(1, order + 1):
        for k in range(1, spec.sorts(i) + 1):
            terms = [(i * j, -1 if j % 2 else 1) for j in range(order // i + 1) if spec.admit(i, j, k)]
            if terms == [(0, 1)]:
                continue
            cs = mul_sparse(cs, terms)
    return cs


def signed_sorted_count(spec: SortedSignedSpec, n: int) -> int:
    return signed_sorted_series(spec, n)[n]


def distinct_spec(l: int = 1) -> SortedSignedSpec:
    """``l`` sorts, each used at most once: gives ``prod (1 - q^k)^l``."""
    return SortedSignedSpec(lambda i: l, lambda i, j, k: int(j <= 1))


def repeated_spec(l: int = 1) -> SortedSignedSpec:
    """``l`` sorts with any multiplicity: gives ``prod 1/(1 + q^k)^l``."""
    return SortedSignedSpec(lambda i: l, lambda i, j, k: 1)


def p_pm2_series(order: int) -> List[int]:
    """Coefficients of ``prod_k 1/(1 + q^k)^2``."""
    return signed_sorted_series(repeated_spec(2), order)


# --- squares ------------------------------------------------------------------

def signed_square_series(kind: str, n: int) -> List[int]:
    """``s``: ``prod_k (1 - q^(k^2))``; ``t``: ``prod_k 1/(1 + q^(k^2))``; both up to ``q^n``."""
    _check_n(n)
    squares = [k * k for k in range(1, isqrt(n) + 1)]
    if kind == "s":
        cs = [1] + [0] * n
        for s in squares:
            cs = mul_sparse(cs, [(0, 1), (s, -1)])
        return cs
    if kind == "t":
        # divide by each unit-constant factor 1 + q^s in turn
        cs = [1] + [0] * n
        for s in squares:
            for t in range(s, n + 1):
                cs[t] -= cs[t - s]
        return cs
    raise DomainError(f"kind must be 's' or 't', got {kind!r}")


def two_square_forms(n: int, form: str) -> int:
    """Number of ``(x, y)`` in nonnegative integers with ``x + 2y^2 = n`` or ``x^2 + 2y^2 = n``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if form == "x+2y^2":
        return isqrt(n // 2) + 1
    if form == "x^2+2y^2":
        _, _, _, tm = divisor_sums(n, [(1, 8), (3, 8), (5, 8), (7, 8)])
        delta = int(is_square(n) or (n % 2 == 0 and is_square(n // 2)))
        total = tm[(1, 8)] + tm[(3, 8)] - tm[(5, 8)] - tm[(7, 8)] + delta
        if total % 2:
            raise ConsistencyError(f"odd numerator {total} at n={n}")
        return total // 2
    raise DomainError(f"unsupported form {form!r}")
