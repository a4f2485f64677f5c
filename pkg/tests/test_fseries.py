import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from rootheights.errors import DomainError, PreconditionError, TruncationError
from rootheights.fseries import ExpSeries, coefficient, geometric_factor, series_mul, xi_series
from rootheights.rootsys import root_system
from rootheights.tpoly import ONE, TPoly
from rootheights.vecpart import xi_coefficient_comb

TM1 = TPoly([-1, 1])


def test_mul_two_factors():
    a = ExpSeries(2, 2, {(0, 0): ONE, (1, 0): TM1})
    b = ExpSeries(2, 2, {(0, 0): ONE, (0, 1): TM1})
    assert series_mul(a, b).terms == {(0, 0): ONE, (1, 0): TM1, (0, 1): TM1, (1, 1): TM1 * TM1}
    assert series_mul(a, ExpSeries.one(2, 2)) == a


def test_mul_truncates():
    e = ExpSeries(1, 1, {(1,): ONE})
    assert series_mul(e, e).terms == {}


def test_mul_mismatch():
    with pytest.raises(PreconditionError):
        series_mul(ExpSeries.one(2, 2), ExpSeries.one(2, 3))
    with pytest.raises(PreconditionError):
        series_mul(ExpSeries.one(2, 2), ExpSeries.one(3, 2))


def test_series_rejects_bad_keys():
    with pytest.raises(DomainError):
        ExpSeries(2, 2, {(-1, 0): ONE})
    with pytest.raises(TruncationError):
        ExpSeries(2, 2, {(2, 1): ONE})
    assert ExpSeries(2, 2, {(1, 0): TPoly()}).terms == {}


def test_geometric_factor_height_one():
    f = geometric_factor((1, 0), 3)
    assert f.terms == {
        (0, 0): ONE,
        (1, 0): TPoly([-1, 1]),
        (2, 0): TPoly([0, -1, 1]),
        (3, 0): TPoly([0, 0, -1, 1]),
    }


def test_geometric_factor_truncation():
    assert geometric_factor((1, 1), 3).terms == {(0, 0): ONE, (1, 1): TM1}
    assert geometric_factor((1, 1), 0).terms == {(0, 0): ONE}


def test_xi_a2_examples():
    xi = xi_series(root_system("A", 2), 2)
    assert coefficient(xi, (1, 0)) == TM1
    assert coefficient(xi, (1, 1)) == TPoly([0, -1, 1])
    assert coefficient(xi, (0, 0)) == ONE
    with pytest.raises(TruncationError):
        coefficient(xi, (3, 0))


def test_default_truncation():
    s = root_system("B", 2)
    assert xi_series(s).trunc_height == s.theta.height + 1


@pytest.mark.parametrize("name, height", [(("A", 2), 4), (("B", 2), 4), (("G", 2), 6), (("A", 3), 3), (("C", 3), 3)])
def test_xi_matches_sympy_expansion(name, height):
    s = root_system(*name)
    expected = oracles.brute_force_xi(s.positive_roots, height)
    got = {k: v.to_list() for k, v in xi_series(s, height).terms.items()}
    assert got == expected


@pytest.mark.parametrize("name", [("B", 3), ("G", 2), ("D", 4)])
def test_truncation_coherence(name):
    s = root_system(*name)
    big = xi_series(s, s.theta.height + 1)
    for h in range(s.theta.height + 1):
        assert big.restrict(h) == xi_series(s, h)


@pytest.mark.parametrize("name", [("B", 3), ("G", 2)])
def test_factor_order_irrelevant(name):
    s = root_system(*name)
    order = list(s.positive_roots)
    random.Random(11).shuffle(order)
    assert xi_series(s, order=order) == xi_series(s)


@pytest.mark.parametrize("name", [("A", 3), ("B", 3), ("G", 2)])
def test_series_equals_partition_sum(name):
    s = root_system(*name)
    xi = xi_series(s, s.theta.height)
    for gamma, coeff in xi.terms.items():
        assert coeff == xi_coefficient_comb(gamma, s)


def test_serialization_order():
    xi = xi_series(root_system("A", 2), 2)
    data = xi.to_json()
    assert data[0] == {"exponent": [0, 0], "coeff": [1]}
    assert [sum(d["exponent"]) for d in data] == sorted(sum(d["exponent"]) for d in data)


keys = st.tuples(st.integers(0, 2), st.integers(0, 2))
small_poly = st.lists(st.integers(-3, 3), max_size=3).map(TPoly)
series = st.dictionaries(keys, small_poly, max_size=5).map(
    lambda d: ExpSeries(2, 3, {k: v for k, v in d.items() if sum(k) <= 3})
)


@settings(max_examples=60)
@given(series, series, series)
def test_truncated_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
