"""Betti-number obstructions for circle bundles over Grassmannians.

Poincaré polynomials are written in ``q = t^2``; Grassmannians have no odd
cohomology, so nothing is lost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomial import RatPoly, product

# Poincaré polynomials are integral; RatPoly carries them exactly.
IntPoly = RatPoly


def _one_minus_q_pow(i: int) -> RatPoly:
    c = [0] * (i + 1)
    c[0], c[i] = 1, -1
    return RatPoly(c)


def _q_factorial(k: int) -> RatPoly:
    return product([_one_minus_q_pow(i) for i in range(1, k + 1)])


def gaussian_binomial(l: int, k: int) -> IntPoly:
    """``[l choose k]_q`` by exact division of ``(1-q)...(1-q^l)``."""
    if not 0 <= k <= l:
        raise ValueError(f"need 0 <= k <= l, got k={k}, l={l}")
    quot, rem = _q_factorial(l).divmod(_q_factorial(k) * _q_factorial(l - k))
    if not rem.is_zero():
        raise AssertionError(f"inexact division computing [{l} choose {k}]_q")
    if any(c.denominator != 1 for c in quot.coeffs):
        raise AssertionError("non-integral Gaussian binomial coefficient")
    assert quot.degree == k * (l - k)
    return quot


def int_coeffs(p: IntPoly) -> list[int]:
    return [int(c) for c in p.coeffs]


def lens_cohomology(n: int, m: int) -> dict[int, str]:
    """Integral cohomology of ``S^(2n+1)/Z_m`` as descriptors ``"Z"``, ``"Z_m"``, ``"0"``."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    torsion = "0" if m == 1 else f"Z_{m}"
    table = {}
    for j in range(2 * n + 2):
        if j in (0, 2 * n + 1):
            table[j] = "Z"
        elif j % 2 == 0:
            table[j] = torsion
        else:
            table[j] = "0"
    return table


def hh_condition(poincare: IntPoly, n: int) -> bool:
    """Consecutive even Betti numbers equal up to degree ``2n``."""
    if poincare.degree != n:
        raise ValueError(f"Poincaré polynomial has degree {poincare.degree}, expected {n}")
    return all(poincare.coeff(j - 1) == poincare.coeff(j) for j in range(1, n + 1))


@dataclass(frozen=True)
class LensVerdict:
    k: int
    l: int
    n: int
    lens_candidate: bool
    poincare: tuple[int, ...]

    @property
    def real_dimension(self) -> int:
        """Real dimension of the circle bundle, ``2n + 1``."""
        return 2 * self.n + 1


def lens_obstruction(k: int, l: int) -> LensVerdict:
    if not 1 <= k <= l - k:
        raise ValueError(f"need 1 <= k <= l-k, got k={k}, l={l}")
    P = gaussian_binomial(l, k)
    n = k * (l - k)
    return LensVerdict(k, l, n, hh_condition(P, n), tuple(int_coeffs(P)))


def sweep(max_l: int) -> list[LensVerdict]:
    return [lens_obstruction(k, l) for l in range(2, max_l + 1) for k in range(1, l // 2 + 1)]


def is_palindromic(p: IntPoly) -> bool:
    c = p.coeffs
    return c == c[::-1]


def is_unimodal(p: IntPoly) -> bool:
    c = p.coeffs
    i = 0
    while i + 1 < len(c) and c[i] <= c[i + 1]:
        i += 1
    while i + 1 < len(c) and c[i] >= c[i + 1]:
        i += 1
    return i == len(c) - 1


def euler_specialization(p: IntPoly) -> Fraction:
    return p(1)

