"""Exact Szegő and Bergman coefficient polynomials and their Laurent profiles.

With ``t = alpha * conj(beta) * h(x,-y)**mu`` and ``rho = t - 1`` both kernels
are power series ``sum_nu c(nu) t**nu`` whose coefficient ``c`` is a
polynomial in ``nu``.  Expanding ``c`` in the basis ``C(nu+k, k)`` and using

    sum_nu C(nu+k, k) t**nu = (1 - t)**(-k-1) = (-rho)**(-k-1)

turns the series into a finite Laurent polynomial in ``rho``, so no log term
can occur.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import SpaceParams
from .poch import poch_polynomial, poch_value
from .polynomial import RatPoly, forward_difference


class Kind(str, enum.Enum):
    SZEGO = "szego"
    BERGMAN = "bergman"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        t = text.strip().lower().replace("ő", "o").replace("ö", "o")
        try:
            return cls(t)
        except ValueError:
            raise ValueError(f"kernel kind must be 'szego' or 'bergman', got {text!r}") from None


class Prefactor(str, enum.Enum):
    ONE = "1"
    ONE_OVER_PI = "1/pi"


@dataclass(frozen=True)
class KernelSpec:
    kind: Kind
    mu: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not isinstance(self.mu, int) or self.mu < 1:
            raise ValueError(f"bundle power mu must be an integer >= 1, got {self.mu!r}")


@dataclass(frozen=True)
class LaurentProfile:
    """``K = prefactor * sum_j coeffs[j] * rho**(j - depth)``.

    ``coeffs[0]`` multiplies the most singular power ``rho**(-depth)``; zeros
    are kept so every power down to ``rho**-1`` has an entry.
    """

    coeffs: tuple[Fraction, ...]
    prefactor: Prefactor = Prefactor.ONE

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    def evaluate(self, rho):
        """Value of the sum without the prefactor; exact for rational ``rho``."""
        if isinstance(rho, (int, Fraction)):
            rho = Fraction(rho)
            return sum((c * rho ** (j - self.depth) for j, c in enumerate(self.coeffs)), Fraction(0))
        inv = 1.0 / rho
        acc = 0.0 * rho
        # Horner in 1/rho, from the least singular term upward
        for c in self.coeffs:
            acc = (acc + float(c)) * inv
        return acc if self.depth else 0.0 * rho

    def format(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*rho^{j - self.depth}")
        body = " + ".join(parts) if parts else "0"
        return body if self.prefactor is Prefactor.ONE else f"(1/pi)*[{body}]"


def _normalizer(space: SpaceParams) -> Fraction:
    return poch_value(space.c0, space.s, space.r, space.a)


def szego_coeff_poly(space: SpaceParams, mu: int = 1) -> RatPoly:
    """``P_mu(nu) = poch(mu*nu + p - n/r)_{n/r} / poch(p - n/r)_{n/r}``."""
    KernelSpec(Kind.SZEGO, mu)
    base = poch_polynomial(space.r, space.a, space.s, space.c0)
    return base.scale_variable(mu) / _normalizer(space)


def bergman_coeff_poly(space: SpaceParams, mu: int = 1) -> RatPoly:
    """``Q_mu(nu) = (nu+1) poch(mu*nu + 1 + p - n/r)_{n/r} / poch(p - n/r)_{n/r}``.

    The overall ``1/pi`` is not included.  The shift by one inside the
    Pochhammer symbol comes from the fiber integral
    ``int |lambda|^(2 nu) = pi h^(-nu-1) / (nu+1)``; dropping it gives
    :func:`bergman_coeff_poly_unshifted`.
    """
    KernelSpec(Kind.BERGMAN, mu)
    base = poch_polynomial(space.r, space.a, space.s, space.c0)
    inner = RatPoly([1, mu])
    return RatPoly.linear(1) * base.compose(inner) / _normalizer(space)


def bergman_coeff_poly_unshifted(space: SpaceParams, mu: int = 1) -> RatPoly:
    """``(nu+1) poch(mu*nu + p - n/r)_{n/r} / poch(p - n/r)_{n/r}``.

    Kept for comparison only; the slice-norm quadrature rejects it.
    """
    return RatPoly.linear(1) * szego_coeff_poly(space, mu)


def coeff_poly(space: SpaceParams, spec: KernelSpec) -> RatPoly:
    if spec.kind is Kind.SZEGO:
        return szego_coeff_poly(space, spec.mu)
    return bergman_coeff_poly(space, spec.mu)


def binomial_basis_poly(k: int) -> RatPoly:
    """``C(nu+k, k) = (nu+1)...(nu+k)/k!`` as a polynomial in ``nu``."""
    return RatPoly.rising(1, k) / math.factorial(k)


def to_binomial_basis(P: RatPoly) -> list[Fraction]:
    """Coordinates ``d`` with ``P(nu) = sum_k d[k] * C(nu+k, k)``.

    The basis is triangular in degree: peel off the top coefficient, which
    must be ``d[deg] / deg!``, and repeat on the remainder.
    """
    if P.is_zero():
        return []
    deg = int(P.degree)
    d = [Fraction(0)] * (deg + 1)
    rest = P
    for k in range(deg, -1, -1):
        top = rest.coeff(k)
        if top:
            d[k] = top * math.factorial(k)
            rest = rest - binomial_basis_poly(k) * d[k]
    assert rest.is_zero()
    return d


def from_binomial_basis(d: Sequence) -> RatPoly:
    out = RatPoly()
    for k, dk in enumerate(d):
        if dk:
            out = out + binomial_basis_poly(k) * Fraction(dk)
    return out


def laurent_profile(d: Sequence, prefactor: Prefactor = Prefactor.ONE) -> LaurentProfile:
    """Reindex ``K = sum_k d[k] (-1)**(k+1) rho**(-k-1)`` by descending order."""
    deg = len(d) - 1
    coeffs = tuple(Fraction((-1) ** (deg - j + 1)) * Fraction(d[deg - j]) for j in range(deg + 1))
    return LaurentProfile(coeffs, Prefactor(prefactor))


def expand(space: SpaceParams, spec: KernelSpec) -> tuple[RatPoly, list[Fraction], LaurentProfile]:
    """Coefficient polynomial, its binomial coordinates and the Laurent profile."""
    P = coeff_poly(space, spec)
    d = to_binomial_basis(P)
    pref = Prefactor.ONE if spec.kind is Kind.SZEGO else Prefactor.ONE_OVER_PI
    return P, d, laurent_profile(d, pref)


def expected_c0(space: SpaceParams, spec: KernelSpec) -> Fraction:
    """Closed form of the leading Laurent coefficient (without the 1/pi)."""
    n, mu = space.n, spec.mu
    norm = _normalizer(space)
    if spec.kind is Kind.SZEGO:
        return Fraction((-1) ** (n + 1) * math.factorial(n) * mu**n) / norm
    return Fraction((-1) ** (n + 2) * math.factorial(n + 1) * mu**n) / norm


def check_c0(profile: LaurentProfile, space: SpaceParams, spec: KernelSpec) -> bool:
    want_pref = Prefactor.ONE if spec.kind is Kind.SZEGO else Prefactor.ONE_OVER_PI
    if profile.prefactor is not want_pref or not profile.coeffs:
        return False
    return profile.coeffs[0] == expected_c0(space, spec)


def log_term_detector(samples: Sequence, n: int) -> bool:
    """True when the samples look polynomial of degree <= n (no log term).

    Checks that the ``(n+1)``-th forward difference vanishes on every window.
    Bergman callers pass ``n + 1`` since their coefficients have degree n+1.
    """
    if len(samples) < n + 2:
        raise ValueError(f"need at least {n + 2} samples for order {n + 1}, got {len(samples)}")
    return all(x == 0 for x in forward_difference(samples, n + 1))


def series_partial_sum(values: Sequence[Fraction], t) -> Fraction:
    """Exact ``sum_nu values[nu] * t**nu`` over one common denominator.

    ``values`` are the coefficients ``P(0), P(1), ...``, so callers sweeping
    many ``t`` evaluate the polynomial once.
    """
    t = Fraction(t)
    num, den = t.numerator, t.denominator
    D = 1
    for v in values:
        D = D * v.denominator // math.gcd(D, v.denominator)
    top = len(values) - 1
    total = 0
    npow = 1
    dpow = den**top
    for v in values:
        total += (v.numerator * (D // v.denominator)) * npow * dpow
        npow *= num
        dpow //= den
    return Fraction(total, D * den**top)


def series_tail_bound(P: RatPoly, t: Fraction, terms: int) -> Fraction:
    """Rigorous bound on ``|sum_{nu >= terms} P(nu) t**nu|``.

    Uses ``|P(nu)| <= A nu^d`` with ``A`` the sum of absolute coefficients,
    and the term ratio ``(1 + 1/N)^d |t|`` for ``nu >= N = terms``.
    """
    t = abs(Fraction(t))
    if P.is_zero() or t == 0:
        return Fraction(0)
    d = int(P.degree)
    A = sum(abs(c) for c in P.coeffs)
    N = terms
    q = (1 + Fraction(1, N)) ** d * t
    if q >= 1:
        raise ValueError("truncation too short for a geometric tail bound")
    return A * Fraction(N) ** d * t**N / (1 - q)
