from math import comb

import pytest

from hsskernel.polynomial import RatPoly
from hsskernel.topology import (
    euler_specialization, gaussian_binomial, hh_condition, int_coeffs, is_palindromic, is_unimodal,
    lens_cohomology, lens_obstruction, sweep,
)


def brute_gaussian(l, k):
    """Oracle: count k-subsets of {0..l-1} by inversion number sum(S) - k(k-1)/2."""
    from itertools import combinations
    c = [0] * (k * (l - k) + 1)
    for S in combinations(range(l), k):
        c[sum(S) - k * (k - 1) // 2] += 1
    return c


def test_gaussian_binomial_examples():
    assert int_coeffs(gaussian_binomial(4, 2)) == [1, 1, 2, 1, 1]
    assert gaussian_binomial(4, 2) == RatPoly([1, 1, 1]) * RatPoly([1, 0, 1])
    for l in range(1, 9):
        assert int_coeffs(gaussian_binomial(l, 1)) == [1] * l
    assert euler_specialization(gaussian_binomial(4, 2)) == 6


@pytest.mark.parametrize("l", range(0, 13))
def test_gaussian_binomial_properties(l):
    for k in range(l + 1):
        g = gaussian_binomial(l, k)
        assert int_coeffs(g) == brute_gaussian(l, k)
        assert g == gaussian_binomial(l, l - k)
        assert is_palindromic(g)
        assert is_unimodal(g)
        assert euler_specialization(g) == comb(l, k)
        assert g.degree == k * (l - k)
        assert all(c >= 0 for c in g.coeffs)


def test_gaussian_binomial_guard():
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4)


def test_unimodal_helper():
    assert is_unimodal(RatPoly([1, 2, 2, 1]))
    assert not is_unimodal(RatPoly([1, 2, 1, 2]))


def test_lens_cohomology():
    assert lens_cohomology(2, 3) == {0: "Z", 1: "0", 2: "Z_3", 3: "0", 4: "Z_3", 5: "Z"}
    assert lens_cohomology(1, 1) == {0: "Z", 1: "0", 2: "0", 3: "Z"}
    assert lens_cohomology(1, 2) == {0: "Z", 1: "0", 2: "Z_2", 3: "Z"}
    with pytest.raises(ValueError):
        lens_cohomology(0, 2)


def test_lens_spaces_distinguished_from_sphere():
    for n in range(1, 6):
        for m in range(2, 6):
            assert lens_cohomology(n, m) != lens_cohomology(n, 1)


def test_hh_condition():
    assert hh_condition(RatPoly([1, 1, 1, 1]), 3)
    assert not hh_condition(RatPoly([1, 1, 2, 1, 1]), 4)
    assert hh_condition(RatPoly([1]), 0)
    with pytest.raises(ValueError):
        hh_condition(RatPoly([1, 1]), 3)


def test_lens_obstruction():
    v = lens_obstruction(1, 5)
    assert v.lens_candidate and v.n == 4
    v = lens_obstruction(2, 4)
    assert not v.lens_candidate and v.n == 4 and v.real_dimension == 9
    v = lens_obstruction(3, 6)
    assert not v.lens_candidate
    assert v.poincare[:5] == (1, 1, 2, 3, 3)
    with pytest.raises(ValueError):
        lens_obstruction(3, 5)


def test_sweep():
    verdicts = sweep(12)
    assert all(v.lens_candidate == (v.k == 1) for v in verdicts)
    assert len(sweep(8)) == 16
