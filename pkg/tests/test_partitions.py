from collections import Counter

import pytest

from pioenum import partitions as P
from pioenum.lrs import ConsistencyError
from pioenum.numutil import DomainError
from pioenum.oracle import enumerate_partitions


def test_table_examples():
    pk, qk = P.build_pk_table(10), P.build_qk_table(10)
    assert pk.get(2, 5) == 2 and pk.get(5, 5) == 1
    assert pk.total(10) == 42
    assert qk.get(2, 5) == 2 and qk.get(3, 6) == 1
    assert qk.total(7) == 5
    assert pk.get(11, 10) == 0 and pk.row(4) == (1, 2, 1, 1)
    with pytest.raises(DomainError):
        pk.get(1, 11)


def test_table_invariants():
    pk = P.build_pk_table(120)
    for m in range(1, 121):
        assert pk.get(1, m) == 1 and pk.get(m, m) == 1
        assert min(pk.row(m)) >= 0


def test_table_cache_reuse():
    big = P.build_pk_table(60)
    small = P.build_pk_table(20)
    assert small.limit == 20 and small.rows == big.rows[:21]


def test_pentagonal_examples():
    assert P.p_pentagonal(6) == [1, 1, 2, 3, 5, 7, 11]
    assert P.partition_count(14) == 135
    assert P.partition_count(1) == 1
    assert P.partition_count(100) == 190569292


def test_sigma_recurrence_examples():
    assert P.p_sigma_recurrence(4) == 5
    assert P.p_sigma_recurrence(1) == 1
    assert P.p_sigma_recurrence(12) == 77


def test_three_routes_agree_to_500():
    n = 500
    pk = P.build_pk_table(n)
    pent = P.p_pentagonal(n)
    assert [pk.total(m) for m in range(1, n + 1)] == pent[1:]
    assert P.p_sigma_recurrence(n) == pent[n]
    assert P.q_list(n)[n] == P.build_qk_table(n).total(n)


def test_weighted_sum_examples():
    assert P.weighted_parts_sum(lambda k: 1, 8, "P") == 22
    assert P.weighted_parts_sum(lambda k: k, 6, "P") == 35
    # distinct-part totals: 5, 41, 32 at n=5 and 6, 51, 42, 321 at n=6
    assert P.weighted_parts_sum(lambda k: k, 5, "Q") == 5
    assert P.weighted_parts_sum(lambda k: k, 6, "Q") == 8


def test_weighted_sum_errors():
    with pytest.raises(DomainError):
        P.weighted_parts_sum(lambda k: k - 1, 5)
    with pytest.raises(DomainError):
        P.weighted_parts_sum(lambda k: 1, 5, "R")


def test_divisor_form_examples():
    assert P.total_parts_divisor_form(4, "P") == 12
    assert P.total_parts_divisor_form(1, "P") == 1
    assert P.total_parts_divisor_form(7, "Q") == 10


def test_divisor_form_matches_weighted_sum():
    for n in range(1, 201):
        for v in "PQ":
            assert P.total_parts_divisor_form(n, v) == P.weighted_parts_sum(lambda k: k, n, v)


def test_tables_match_oracle():
    pk, qk = P.build_pk_table(40), P.build_qk_table(40)
    for n in range(1, 41):
        by_len, by_len_distinct = Counter(), Counter()
        for lam in enumerate_partitions(n):
            by_len[lam.length] += 1
            if lam.has_distinct_parts():
                by_len_distinct[lam.length] += 1
        assert list(pk.row(n)) == [by_len[k] for k in range(1, n + 1)]
        assert list(qk.row(n)) == [by_len_distinct[k] for k in range(1, n + 1)]


def test_compositions_distinct_parts():
    assert [P.compositions_distinct_parts(n) for n in range(1, 10)] == [1, 1, 3, 3, 5, 11, 13, 19, 27]
    with pytest.raises(DomainError):
        P.compositions_distinct_parts(0)


def test_subset_lower_bound():
    q = P.q_list(300)
    for n in range(4, 301):
        m = P.subset_lower_bound_exponent(n)
        assert m * (m + 1) <= n - 2 < (m + 1) * (m + 2)
        assert q[n] >= 2**m


def test_consistency_error_is_assertion():
    assert issubclass(ConsistencyError, AssertionError)
