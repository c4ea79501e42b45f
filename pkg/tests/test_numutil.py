import math
import random

import pytest
from hypothesis import given, strategies as st

from pioenum.numutil import (DomainError, divisor_sums, divisors, euler_phi, factorize,
                             frobenius_threshold, is_power_of_two, is_prime, isqrt,
                             legendre_nu, pentagonal_index, triangular_index)


@pytest.mark.parametrize("n, root", [(0, 0), (15, 3), (10**18, 10**9), (1, 1), (2, 1), (99, 9)])
def test_isqrt_examples(n, root):
    assert isqrt(n) == root


def test_isqrt_rejects_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


@given(st.integers(min_value=0, max_value=2**512))
def test_isqrt_brackets_root(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) ** 2
    assert r == math.isqrt(n)


def test_divisor_sums_examples():
    assert divisor_sums(1)[:3] == (1, 1, 1)
    assert divisor_sums(6)[:3] == (4, 12, 0)
    tm = divisor_sums(12, [(1, 8), (3, 8), (5, 8), (7, 8)])[3]
    assert tm == {(1, 8): 1, (3, 8): 1, (5, 8): 0, (7, 8): 0}
    with pytest.raises(DomainError):
        divisor_sums(0)


def _multiplicative(n):
    tau = sigma = tau_pm = 1
    for p, e in factorize(n):
        tau *= e + 1
        sigma *= (p ** (e + 1) - 1) // (p - 1)
        # odd divisors minus even divisors
        tau_pm *= (1 - e) if p == 2 else e + 1
    return tau, sigma, tau_pm


def test_divisor_sums_match_factorization():
    for n in list(range(1, 3000)) + random.Random(5).sample(range(3000, 10**5), 1500):
        assert divisor_sums(n)[:3] == _multiplicative(n), n


@pytest.mark.parametrize("n, expected", [(1, []), (697, [(17, 1), (41, 1)]), (709, [(709, 1)]),
                                         (2**10 * 3**4, [(2, 10), (3, 4)])])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_rejects_nonpositive():
    with pytest.raises(DomainError):
        factorize(0)


@given(st.integers(min_value=1, max_value=10**30))
def test_factorize_product_and_primality(n):
    fs = factorize(n)
    assert math.prod(p ** e for p, e in fs) == n
    assert [p for p, _ in fs] == sorted({p for p, _ in fs})
    assert all(is_prime(p) for p, _ in fs)


def test_factorize_semiprime_beyond_trial_division():
    p, q = 1_000_000_007, 998_244_353
    assert factorize(p * q) == [(q, 1), (p, 1)]


def test_is_prime_against_sieve():
    N = 20000
    sieve = bytearray([1]) * N
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(N) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    assert all(is_prime(n) == bool(sieve[n]) for n in range(N))
    # strong pseudoprime to several small bases
    assert not is_prime(3215031751)
    assert is_prime(2**127 - 1)


@pytest.mark.parametrize("p, n, k", [(2, 4, 3), (5, 4, 0), (2, 10, 8), (3, 100, 48)])
def test_legendre_nu(p, n, k):
    assert legendre_nu(p, n) == k


def test_legendre_nu_matches_factorial():
    for n in range(1, 60):
        f = math.factorial(n)
        for p in (2, 3, 5, 7):
            k = legendre_nu(p, n)
            assert f % p**k == 0 and f % p ** (k + 1) != 0


def test_legendre_nu_rejects_composite():
    with pytest.raises(DomainError):
        legendre_nu(4, 10)


@pytest.mark.parametrize("B, n0", [([1], 0), ([2, 3], 1), ([3, 5], 7), ([6, 10, 15], 29), ([4, 9], 23)])
def test_frobenius_examples(B, n0):
    assert frobenius_threshold(B) == n0


def test_frobenius_rejects_non_coprime():
    with pytest.raises(DomainError):
        frobenius_threshold([4, 6])


def _representable(n, B):
    reach = [True] + [False] * n
    for t in range(1, n + 1):
        reach[t] = any(t >= b and reach[t - b] for b in B)
    return reach[n]


@given(st.lists(st.integers(2, 15), min_size=1, max_size=4).filter(
    lambda B: math.gcd(*B) == 1))
def test_frobenius_property(B):
    n0 = frobenius_threshold(B)
    for n in range(n0 + 1, n0 + max(B) * len(B) + 1):
        assert _representable(n, B)
    if n0 > 0:
        assert not _representable(n0, B)


def test_euler_phi_and_divisors():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


def test_shape_indices():
    assert [n for n in range(60) if triangular_index(n) is not None] == [0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55]
    pent = {i * (3 * i - 1) // 2: i for i in range(-8, 9)}
    for n in range(100):
        assert pentagonal_index(n) == pent.get(n)
    assert is_power_of_two(2**40) and not is_power_of_two(6) and not is_power_of_two(0)
