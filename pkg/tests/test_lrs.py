import random
from fractions import Fraction

import pytest

from pioenum import lrs
from pioenum.lrs import HolonomicSpec, LrsSpec
from pioenum.numutil import DomainError
from pioenum.oracle import oracle_lrs
from pioenum.poly import PolyQ, cyclotomic

X = PolyQ.x()


def test_minimal_polynomial_of_identity():
    spec = LrsSpec((-1, 2), (1, 2))
    assert lrs.minimal_polynomial(spec) == X**2 - 2 * X + 1


def test_minimal_polynomial_drops_redundant_roots():
    # 2^n written with a redundant order-2 recurrence
    spec = LrsSpec((-6, 5), (2, 4))
    assert lrs.minimal_polynomial(spec) == X - 2
    assert lrs.minimal_polynomial(LrsSpec((), ())) == PolyQ([1])


def test_berlekamp_massey_fibonacci():
    assert lrs.berlekamp_massey([1, 1, 2, 3, 5, 8, 13, 21]) == X**2 - X - 1


def test_zero_a0_rejected():
    with pytest.raises(DomainError):
        LrsSpec((0, 1), (1, 1))
    with pytest.raises(DomainError):
        LrsSpec((1,), (1, 2))


def test_degenerate_power_sum():
    spec = LrsSpec((4, 0), (0, 8))  # 2^n + (-2)^n
    cls = lrs.classify(spec)
    assert cls.modulus == 2
    assert cls.verdicts[1].is_polynomial and cls.verdicts[1].poly.is_zero()
    assert not cls.verdicts[2].is_polynomial
    assert lrs.eval(spec, cls, 10**9 + 1) == 0
    assert lrs.eval(spec, cls, 20) == 2 * 2**20


def test_square_sequence_far_out():
    spec = lrs.lrs_from_charpoly((X - 1) ** 3, (1, 4, 9))
    cls = lrs.classify(spec)
    assert cls.modulus == 1 and cls.verdicts[1].is_polynomial
    assert lrs.eval(spec, cls, 10**6) == 10**12


def test_fibonacci_exponential():
    spec = LrsSpec((1, 1), (1, 1))
    cls = lrs.classify(spec)
    assert cls.modulus == 1 and not cls.verdicts[1].is_polynomial
    assert lrs.eval(spec, cls, 100) == 354224848179261915075


def test_ratio_modulus_detects_equal_moduli():
    # roots 1+i and 1-i have ratio i, of order 4
    assert lrs.ratio_unity_modulus(X**2 - 2 * X + 2) == 4
    assert lrs.ratio_unity_modulus(X**2 - X - 1) == 1


def _quasipoly_spec(rng):
    while True:
        e = rng.randint(0, 3)
        p = (X - 1) ** e
        for _ in range(rng.randint(0, 2)):
            p = p * cyclotomic(rng.choice([2, 3, 4, 6]))
        if 1 <= p.degree <= 6:
            break
    return lrs.lrs_from_charpoly(p, [rng.randint(-20, 20) for _ in range(p.degree)])


def test_quasipolynomial_specs_classify_polynomial():
    rng = random.Random(11)
    for _ in range(40):
        spec = _quasipoly_spec(rng)
        cls = lrs.classify(spec)
        assert all(v.is_polynomial for v in cls.verdicts.values()), spec
        for n in [rng.randint(1, 400) for _ in range(5)]:
            assert lrs.eval(spec, cls, n) == lrs.eval_by_recurrence(spec, n)


def test_random_specs_match_oracle():
    rng = random.Random(3)
    for _ in range(200):
        k = rng.randint(1, 4)
        coeffs = [rng.randint(-3, 3) for _ in range(k)]
        coeffs[0] = coeffs[0] or 1
        init = [rng.randint(-5, 5) for _ in range(k)]
        spec = LrsSpec(tuple(coeffs), tuple(init))
        cls = lrs.classify(spec)
        for n in range(1, 61):
            assert lrs.eval(spec, cls, n) == oracle_lrs(coeffs, init, n)


def test_companion_power_matches_iteration():
    spec = LrsSpec((2, -1, 3), (1, 0, -2))
    for n in range(1, 80):
        assert lrs.companion_power_term(spec, n) == lrs.eval_by_recurrence(spec, n)


def test_holonomic_examples():
    fact = HolonomicSpec(((PolyQ([1, 1]), PolyQ([1])),), (1,))
    assert lrs.holonomic_eval(fact, 5) == 120
    const = HolonomicSpec(((PolyQ([1]), PolyQ([1])),), (7,))
    assert lrs.holonomic_eval(const, 50) == 7
    cat = lrs.catalan_holonomic_spec()
    assert [lrs.holonomic_eval(cat, n) for n in range(1, 8)] == [1, 1, 2, 5, 14, 42, 132]
    assert isinstance(lrs.holonomic_eval(cat, 3), Fraction)


def test_holonomic_vanishing_denominator():
    bad = HolonomicSpec(((PolyQ([1]), PolyQ([-3, 1])),), (1,))
    with pytest.raises(DomainError):
        lrs.holonomic_eval(bad, 10)
