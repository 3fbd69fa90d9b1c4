from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from agrec.errors import DivergenceError
from agrec.progressions import (
    Kind, ProgressionSpec, agp_sum, agp_sum_limit, agp_term, arith_sum, arith_term, gap_sum,
    gap_term, geo_limit, geo_sum, geo_term, rec1_term, rec2_term,
)

from conftest import small_rats

F = Fraction


def iterate(a, n, step):
    x = F(a)
    for _ in range(n):
        x = step(x)
    return x


def test_arith():
    assert arith_term(1, 1, 5) == 5
    assert arith_term(3, 0, 100) == 3
    assert arith_term(F(1, 2), F(1, 3), 4) == iterate(F(1, 2), 3, lambda x: x + F(1, 3)) == F(3, 2)
    assert arith_sum(1, 1, 10) == 55
    assert arith_sum(F(7, 3), F(-2), 1) == F(7, 3)
    assert arith_sum(2, 3, 4) == 2 + 5 + 8 + 11 == 26
    with pytest.raises(ValueError):
        arith_term(1, 1, 0)


def test_geo():
    assert geo_term(3, 3, 4) == 81
    assert [geo_term(3, 3, i) for i in range(1, 5)] == [3, 9, 27, 81]
    assert geo_sum(1, F(1, 2), 3) == 1 + F(1, 2) + F(1, 4) == F(7, 4)
    assert geo_sum(5, 1, 4) == 20
    assert geo_limit(1, F(1, 2)) == 2
    for r in (1, -1, 2, F(-3, 2)):
        with pytest.raises(DivergenceError):
            geo_limit(1, r)


def test_agp_terms():
    assert agp_term(0, F(5, 2), F(1, 2), 1) == F(5, 4)
    assert agp_term(F(7), F(2), F(3), 0) == 7
    assert agp_term(F(7), F(2), F(0), 0) == 7  # 0**0 = 1
    assert agp_term(0, F(5, 2), F(1, 2), 3) == F(15, 16)


def test_agp_sum_examples():
    assert agp_sum(1, 1, F(1, 2), 2) == 1 + 1 + F(3, 4) == F(11, 4)
    assert agp_sum(F(2, 3), 5, 7, 0) == F(2, 3)
    assert agp_sum(1, 1, 1, 3) == 1 + 2 + 3 + 4 == 10


def test_agp_sum_limit():
    # sum (k+1) x^k = 1/(1-x)^2 at x = 1/2
    assert agp_sum_limit(1, 1, F(1, 2)) == 1 / (1 - F(1, 2)) ** 2 == 4
    assert agp_sum_limit(3, 0, F(1, 3)) == geo_limit(3, F(1, 3))
    assert agp_sum_limit(0, 1, F(1, 2)) == F(1, 2) / F(1, 4) == 2
    with pytest.raises(DivergenceError):
        agp_sum_limit(1, 1, -1)


def test_gap():
    assert gap_term(1, 2, 3, 3) == 8 + 9 == 17
    assert gap_term(F(4, 5), 9, 9, 0) == F(4, 5)
    assert gap_term(2, 1, 5, 4) == 2 + 20 == 22
    assert gap_sum(1, 2, 3, 4) == 1 + 5 + 10 + 17 == 33
    assert gap_sum(F(5, 7), 2, 3, 1) == F(5, 7)
    assert gap_sum(1, 1, 1, 4) == 1 + 2 + 3 + 4 == 10


def test_first_order_recurrences():
    assert rec1_term(1, 2, 3, 2) == iterate(1, 2, lambda x: 2 * x + 3) == 13
    assert rec1_term(F(2, 9), 5, 5, 0) == F(2, 9)
    assert rec1_term(7, 1, 2, 5) == 17
    assert rec2_term(1, 2, 3, 1) == (1 + 3) * 2 == 8
    assert rec2_term(F(2, 9), 5, 5, 0) == F(2, 9)
    assert rec2_term(1, 2, 3, 2) == iterate(1, 2, lambda x: (x + 3) * 2) == 22


@settings(max_examples=60, deadline=None)
@given(small_rats(), small_rats(), small_rats(), st.integers(0, 100))
def test_sums_match_term_addition(a, d, r, n):
    assert agp_sum(a, d, r, n) == sum((agp_term(a, d, r, k) for k in range(n + 1)), F(0))
    if n >= 1:
        assert gap_sum(a, r, d, n) == sum((gap_term(a, r, d, k) for k in range(n)), F(0))


@given(small_rats(), small_rats(), small_rats().filter(lambda r: r != 1), st.integers(0, 60))
def test_agp_telescoping(a, d, r, n):
    lhs = (1 - r) * agp_sum(a, d, r, n) + (a + n * d) * r ** (n + 1) - a
    assert lhs == d * r * (1 - r ** n) / (1 - r)


@settings(max_examples=40, deadline=None)
@given(small_rats(), st.sampled_from([F(1), F(0), F(-1), F(1, 2), F(3)]) | small_rats(), small_rats(),
       st.integers(0, 200))
def test_recurrence_closed_forms_match_iteration(a, r, d, n):
    assert rec1_term(a, r, d, n) == iterate(a, n, lambda x: x * r + d)
    assert rec2_term(a, r, d, n) == iterate(a, n, lambda x: (x + d) * r)


@given(small_rats(10).filter(lambda v: v > 0), small_rats(10).filter(lambda v: v > 0),
       st.integers(1, 9).map(lambda k: F(k, 10)))
def test_partial_sums_approach_limit_monotonically(a, d, r):
    limit = agp_sum_limit(a, d, r)
    gaps = [abs(agp_sum(a, d, r, n) - limit) for n in range(40)]
    assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))


@pytest.mark.parametrize("kind", list(Kind))
def test_spec_summary_consistent(kind):
    spec = ProgressionSpec(kind, F(2, 3), F(-1, 2), F(3, 2))
    for n in (1, 2, 7):
        assert spec.summary(n).consistent
    spec1 = ProgressionSpec(kind, 1, 1, 1)
    assert spec1.summary(5).consistent


def test_spec_index_conventions():
    assert len(ProgressionSpec("agp", 1, 1, 2).terms(3)) == 4
    assert len(ProgressionSpec("gap", 1, 1, 2).terms(3)) == 3
    assert ProgressionSpec("rec1", 1, 3, 2).terms(2) == [1, 5, 13]
