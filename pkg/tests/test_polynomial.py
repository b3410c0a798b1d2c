from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hsskernel.polynomial import RatPoly, forward_difference

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_fracs, max_size=7).map(RatPoly)


def test_trimming_and_degree():
    assert RatPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert RatPoly([1, 2]).degree == 1
    assert RatPoly([0, 0]).degree == float("-inf")
    assert RatPoly().is_zero()


def test_rejects_floats():
    with pytest.raises(TypeError):
        RatPoly([0.5])


def test_rising_factorial():
    # (x+1)(x+2)(x+3)
    assert RatPoly.rising(1, 3) == RatPoly([6, 11, 6, 1])
    assert RatPoly.rising(5, 0) == 1


def test_exact_evaluation():
    p = RatPoly([F(1, 2), 0, 3])
    assert p(F(1, 3)) == F(1, 2) + F(1, 3)
    assert p(2) == F(25, 2)
    assert p(2.0) == pytest.approx(12.5)


def test_divmod_exact():
    q, r = RatPoly([-1, 0, 0, 1]).divmod(RatPoly([-1, 1]))
    assert q == RatPoly([1, 1, 1])
    assert r.is_zero()


def test_format():
    assert RatPoly([2, -3, 1]).format("nu") == "nu^2 - 3*nu + 2"
    assert RatPoly().format() == "0"


def test_forward_difference():
    assert forward_difference([1, 4, 9, 16, 25], 2) == [2, 2, 2]
    assert forward_difference([1, 2, 4, 8, 16], 2) == [1, 2, 4]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)


@given(polys, polys, small_fracs)
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)
    assert a.compose(b)(x) == a(b(x))


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_division_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, st.integers(1, 4))
def test_scale_variable(p, mu):
    assert p.scale_variable(mu) == p.compose(RatPoly([0, mu]))
