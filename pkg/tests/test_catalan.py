import math

import pytest

from pioenum import catalan as K
from pioenum.lrs import holonomic_eval, catalan_holonomic_spec
from pioenum.numutil import DomainError, is_power_of_two


def test_examples():
    assert K.catalan(1) == 1
    assert K.catalan(6) == 42
    assert K.catalan(10) == 4862


def test_parity_aware_examples():
    assert K.catalan_parity_aware(8) == 1
    assert K.catalan(8) == 429
    assert K.catalan_parity_aware(6) == 42
    assert K.catalan_parity_aware(7) == 132
    assert K.catalan_parity_aware(2**40) == 1


def test_domain():
    for f in (K.catalan, K.catalan_parity_aware, K.catalan_convolution):
        with pytest.raises(DomainError):
            f(0)


def test_paths_agree():
    for n in range(1, 65):
        assert K.catalan(n) == K.catalan_convolution(n) == math.comb(2 * n - 2, n - 1) // n
    assert holonomic_eval(catalan_holonomic_spec(), 30) == K.catalan(30)


def test_parity_rule_to_4096():
    bits = K.catalan_parity_prefix(4096)
    assert len(bits) == 4096
    assert all(bit == int(is_power_of_two(n)) for n, bit in enumerate(bits, start=1))


def test_parity_prefix_against_exact_values():
    cache = K.CatalanCache()
    cache.extend_to(200)
    assert K.catalan_parity_prefix(200) == [c % 2 for c in cache.prefix()]


def test_growth_bounds():
    c = [0] + [K.catalan(n) for n in range(1, 201)]
    for n in range(3, 201):
        assert c[n] >= 2 * c[n - 1]
    for n in range(1, 201):
        assert c[n] <= n**n


def test_cache_invariant():
    cache = K.CatalanCache()
    assert cache.get(5) == 14 and len(cache) == 5
    pre = cache.prefix()
    for n in range(2, 6):
        assert pre[n - 1] == sum(pre[k - 1] * pre[n - k - 1] for k in range(1, n))
