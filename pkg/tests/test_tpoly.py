import pytest
from hypothesis import given, strategies as st

from rootheights.errors import DomainError
from rootheights.tpoly import ONE, ZERO, TPoly, monomial_gap, poly_add, poly_mul

polys = st.lists(st.integers(-50, 50), max_size=6).map(TPoly)


def test_add_examples():
    assert poly_add(TPoly([-1, 1]), TPoly([1, -2, 1])) == TPoly([0, -1, 1])
    p = TPoly([3, 0, 2])
    assert poly_add(p, ZERO) == p
    assert poly_add(TPoly([0, 1]), TPoly([0, -1])).coeffs == ()


def test_mul_examples():
    assert poly_mul(TPoly([-1, 1]), TPoly([-1, 1])) == TPoly([1, -2, 1])
    p = TPoly([5, -7, 0, 1])
    assert poly_mul(p, ONE) == p
    assert poly_mul(TPoly([0, 1]), TPoly([-1, 1])) == TPoly([0, -1, 1])


@pytest.mark.parametrize("h, expected", [(1, [-1, 1]), (2, [0, -1, 1]), (5, [0, 0, 0, 0, -1, 1])])
def test_monomial_gap(h, expected):
    assert monomial_gap(h).to_list() == expected


@pytest.mark.parametrize("h", [0, -3])
def test_monomial_gap_rejects_nonpositive(h):
    with pytest.raises(DomainError):
        monomial_gap(h)


def test_canonical_form_and_serialization():
    p = TPoly([0, -1, 1, 0, 0])
    assert p.coeffs == (0, -1, 1)
    assert p.degree == 2
    assert TPoly.from_list(p.to_list()) == p
    assert ZERO.degree == -1
    assert p.pretty() == "t^2 - t"


def test_rejects_non_integer_coefficients():
    with pytest.raises(DomainError):
        TPoly([1, 0.5])


def test_big_coefficients_do_not_overflow():
    p = TPoly([2**70, 1])
    assert (p * p)[0] == 2**140


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a * b)(x) == a(x) * b(x)
