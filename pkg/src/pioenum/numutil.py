"""Exact integer helpers and elementary arithmetic functions.

Everything here works on Python ints; nothing touches floating point.
"""
from __future__ import annotations

import math
import random
from collections import Counter
from functools import reduce
from typing import Dict, Iterable, List, Optional, Tuple


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


def isqrt(n: int) -> int:
    """Integral square root built bit by bit.

    Starting from ``m = 0`` the largest power of two keeping ``m*m <= n``
    is added until no power of two fits; the result is ``floor(sqrt(n))``.
    """
    if n < 0:
        raise DomainError(f"isqrt of negative number {n}")
    if n < 2:
        return n
    m = 0
    # the highest useful bit of the root is about half the bit length of n
    for r in range((n.bit_length() + 1) // 2, -1, -1):
        cand = m + (1 << r)
        if cand * cand <= n:
            m = cand
    return m


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def divisors(n: int) -> List[int]:
    """Sorted divisors of ``n`` found by trial up to sqrt(n)."""
    if n <= 0:
        raise DomainError(f"divisors need n >= 1, got {n}")
    small, large = [], []
    r = isqrt(n)
    for d in range(1, r + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def divisor_sums(n: int, moduli: Iterable[Tuple[int, int]] = ()) -> Tuple[int, int, int, Dict[Tuple[int, int], int]]:
    """Return ``(tau, sigma, tau_pm, tau_mod)`` for ``n``.

    ``tau_pm`` counts odd divisors minus even divisors.  ``tau_mod`` maps each
    requested ``(i, m)`` to the number of divisors congruent to ``i`` mod ``m``.
    """
    if n <= 0:
        raise DomainError(f"divisor_sums needs n >= 1, got {n}")
    ds = divisors(n)
    tau = len(ds)
    sigma = sum(ds)
    odd = sum(d & 1 for d in ds)
    tau_pm = odd - (tau - odd)
    tau_mod = {(i, m): sum(1 for d in ds if d % m == i % m) for i, m in moduli}
    return tau, sigma, tau_pm, tau_mod


# --- primality and factorization -------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# These bases make Miller-Rabin deterministic below 3.3e24 (Sorenson-Webster).
_MR_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_TRIAL_CUTOFF = 1000
_EXTRA_ROUNDS = 20


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin test.

    Deterministic for ``n < 3.3e24`` (which covers every 64-bit input); above
    that, the fixed bases are followed by 20 rounds with seeded random bases,
    so a composite slips through with probability below ``4**-20``.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, a, d, s) for a in _SMALL_PRIMES):
        return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(_mr_round(n, rng.randrange(2, n - 1), d, s) for _ in range(_EXTRA_ROUNDS))


def _pollard_brent(n: int, seed: int) -> int:
    """A nontrivial factor of the odd composite ``n``."""
    rng = random.Random(seed)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> List[Tuple[int, int]]:
    """Prime factorization as a sorted list of ``(prime, exponent)``."""
    if n <= 0:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    counts: Counter = Counter()
    for p in range(2, _TRIAL_CUTOFF):
        if p * p > n:
            break
        while n % p == 0:
            counts[p] += 1
            n //= p
    stack = [n] if n > 1 else []
    seed = 1
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] += 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _pollard_brent(m, seed)
        seed += 1
        stack += [f, m // f]
    return sorted(counts.items())


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def legendre_nu(p: int, n: int) -> int:
    """Exponent of the prime ``p`` in ``n!``."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError(f"legendre_nu needs n >= 1, got {n}")
    k, q = 0, p
    while q <= n:
        k += n // q
        q *= p
    return k


def frobenius_threshold(gens: Iterable[int]) -> int:
    """Least ``n0`` such that every ``n > n0`` is a nonnegative combination of ``gens``.

    Reachability is tabulated up to the explicit bound from the Bezout
    construction (``n0 <= a1 * max|b_i| * sum(a_i) - 1``), capped by the
    classical two-generator bound ``(a-1)(b-1)`` computed from the two
    smallest coprime generators when those exist.
    """
    B = sorted(set(gens))
    if not B or B[0] <= 0:
        raise DomainError("generators must be a nonempty set of positive integers")
    if reduce(math.gcd, B) != 1:
        raise DomainError(f"gcd of {B} is not 1")
    if B[0] == 1:
        return 0
    bound = _bezout_bound(B)
    for i, a in enumerate(B):
        for b in B[i + 1:]:
            if math.gcd(a, b) == 1:
                bound = min(bound, (a - 1) * (b - 1))
    reach = bytearray(bound + 1)
    reach[0] = 1
    for n in range(1, bound + 1):
        reach[n] = any(n >= a and reach[n - a] for a in B)
    last = max((n for n in range(bound + 1) if not reach[n]), default=0)
    return last


def _bezout_bound(B: List[int]) -> int:
    # extended gcd folded over the generators gives 1 = sum b_i a_i
    coeffs = [1]
    g = B[0]
    for a in B[1:]:
        g2, s, t = _ext_gcd(g, a)
        coeffs = [c * s for c in coeffs] + [t]
        g = g2
    c = B[0] * max(abs(x) for x in coeffs)
    return max(sum(a * c for a in B) - 1, 0)


def _ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def triangular_index(n: int) -> Optional[int]:
    """The ``i >= 0`` with ``i(i+1)/2 == n``, or None."""
    if n < 0:
        return None
    r = isqrt(8 * n + 1)
    if r * r != 8 * n + 1:
        return None
    return (r - 1) // 2


def pentagonal_index(n: int) -> Optional[int]:
    """Signed ``i`` with ``n == i(3i-1)/2`` (negative ``i`` covers ``i(3i+1)/2``), or None."""
    if n < 0:
        return None
    disc = 24 * n + 1
    r = isqrt(disc)
    if r * r != disc:
        return None
    # i(3i-1)/2 = n  <=>  6i - 1 = +-r
    if (r + 1) % 6 == 0:
        return (r + 1) // 6
    if (r - 1) % 6 == 0:
        return -((r - 1) // 6)
    return None
