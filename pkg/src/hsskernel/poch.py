"""Gindikin Gamma function and the generalized Pochhammer symbol.

    Gamma_M(c) = prod_{j=1}^r Gamma(c - (a/2)(j-1))
    poch(c)_s  = Gamma_M(c+s) / Gamma_M(c)

The exact route writes ``nu -> poch(nu + c0)_s`` as a product of rising
factorials by pairing numerator and denominator Gamma arguments that differ
by non-negative integers.  Floating point never enters it; ``math.lgamma`` is
only used for the numeric cross-check.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction

from .polynomial import RatPoly, _frac, product


class PoleError(ValueError):
    """A Gamma argument is a non-positive number."""


class NonPolynomial(ValueError):
    """``nu -> poch(nu + c0)_s`` is not a polynomial for these parameters."""


def gamma_arguments(c, r: int, a: int) -> list:
    """The ``r`` arguments ``c - (a/2)(j-1)`` of Gamma_M(c)."""
    if r < 1:
        raise ValueError("rank must be >= 1")
    half_a = Fraction(a, 2)
    return [c - half_a * j for j in range(r)]


def gindikin_log_gamma(c: float, r: int, a: int) -> float:
    """``log Gamma_M(c)`` for real ``c`` with every Gamma argument positive."""
    total = 0.0
    for x in gamma_arguments(c, r, a):
        x = float(x)
        if x <= 0:
            raise PoleError(f"Gamma argument {x} is not positive")
        total += math.lgamma(x)
    return total


def log_poch_numeric(c: float, s: float, r: int, a: int) -> float:
    """``log poch(c)_s`` through log-Gamma (oracle side)."""
    return gindikin_log_gamma(c + s, r, a) - gindikin_log_gamma(c, r, a)


def _pair_arguments(r: int, a: int, s: Fraction, c0: Fraction) -> list[tuple[Fraction, int]]:
    """Pair up Gamma arguments; returns ``(denominator offset, length)`` pairs.

    Each pair ``Gamma(nu + d + m) / Gamma(nu + d)`` is the rising factorial
    ``(nu+d)_m``.  Offsets are grouped by their class modulo 1 and paired
    after sorting both sides.
    """
    num = defaultdict(list)
    den = defaultdict(list)
    for x in gamma_arguments(c0 + s, r, a):
        num[x - math.floor(x)].append(x)
    for x in gamma_arguments(c0, r, a):
        den[x - math.floor(x)].append(x)
    if set(num) != set(den) or any(len(num[k]) != len(den[k]) for k in num):
        raise NonPolynomial(
            f"Gamma arguments do not pair up for r={r}, a={a}, s={s}, c0={c0}"
        )
    pairs = []
    for cls in sorted(num):
        for top, bottom in zip(sorted(num[cls]), sorted(den[cls])):
            m = top - bottom
            if m < 0 or m.denominator != 1:
                raise NonPolynomial(f"pair {top} / {bottom} differs by {m}")
            pairs.append((bottom, int(m)))
    return pairs


def poch_polynomial(r: int, a: int, s, c0) -> RatPoly:
    """Exact polynomial ``P(nu) = poch(nu + c0)_s``.

    Raises
    ------
    NonPolynomial
        If the Gamma ratio is not a product of rising factorials.
    """
    s = _frac(s)
    c0 = _frac(c0)
    if s < 0:
        raise ValueError("s must be non-negative")
    if (2 * s).denominator != 1:
        raise ValueError("2s must be an integer")
    return product([RatPoly.rising(d, m) for d, m in _pair_arguments(r, a, s, c0)])


def poch_value(c, s, r: int, a: int) -> Fraction:
    """Exact ``poch(c)_s``; raises :class:`NonPolynomial` where callers should
    fall back to ``exp`` of :func:`log_poch_numeric`."""
    return poch_polynomial(r, a, s, c)(0)
