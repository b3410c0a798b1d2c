"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"refusing to convert {type(x).__name__} into an exact rational")


class RatPoly:
    """Polynomial ``sum(c[i] * x**i)`` over the rationals.

    Coefficients are stored lowest degree first with trailing zeros trimmed,
    so ``coeffs == ()`` is the zero polynomial.  Instances are immutable and
    hashable.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    # construction helpers
    @classmethod
    def const(cls, value) -> "RatPoly":
        return cls([value])

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def linear(cls, shift) -> "RatPoly":
        """The monic linear factor ``x + shift``."""
        return cls([shift, 1])

    @classmethod
    def rising(cls, shift, m: int) -> "RatPoly":
        """Rising factorial ``(x+shift)(x+shift+1)...(x+shift+m-1)``."""
        if m < 0:
            raise ValueError("rising factorial length must be non-negative")
        out = cls.const(1)
        shift = _frac(shift)
        for i in range(m):
            out = out * cls.linear(shift + i)
        return out

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> float | int:
        """Index of the top nonzero coefficient; ``-inf`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else float("-inf")

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def coeff(self, i: int) -> Fraction:
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    # arithmetic
    def __add__(self, other) -> "RatPoly":
        other = _coerce(other)
        n = max(len(self._c), len(other._c))
        return RatPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self._c)

    def __sub__(self, other) -> "RatPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatPoly":
        other = _coerce(other)
        if not self._c or not other._c:
            return RatPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "RatPoly":
        s = _frac(scalar)
        if s == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return RatPoly(c / s for c in self._c)

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = RatPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        """Euclidean division; returns ``(quotient, remainder)``."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self._c)
        dd = len(other._c) - 1
        lead = other._c[-1]
        if len(rem) - 1 < dd:
            return RatPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / lead
            quot[i - dd] = q
            if q:
                for j, b in enumerate(other._c):
                    rem[i - dd + j] -= q * b
        return RatPoly(quot), RatPoly(rem[:dd])

    def __floordiv__(self, other) -> "RatPoly":
        return self.divmod(other)[0]

    def __mod__(self, other) -> "RatPoly":
        return self.divmod(other)[1]

    # evaluation / composition
    def __call__(self, x):
        """Horner evaluation.  Exact for rational input, also works on floats
        and complex numbers (the coefficients are then converted)."""
        if isinstance(x, (int, Rational)):
            acc = Fraction(0)
            for c in reversed(self._c):
                acc = acc * x + c
            return acc
        acc = 0.0 * x
        for c in reversed(self._c):
            acc = acc * x + float(c)
        return acc

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """``self(inner(x))``."""
        inner = _coerce(inner)
        acc = RatPoly()
        for c in reversed(self._c):
            acc = acc * inner + c
        return acc

    def scale_variable(self, mu) -> "RatPoly":
        """``self(mu * x)``."""
        mu = _frac(mu)
        return RatPoly(c * mu**i for i, c in enumerate(self._c))

    # comparison / display
    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self._c == other._c
        if isinstance(other, (int, Rational)):
            return self._c == RatPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"RatPoly([{', '.join(str(c) for c in self._c)}])"

    def format(self, var: str = "x") -> str:
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(p) -> RatPoly:
    return p if isinstance(p, RatPoly) else RatPoly.const(p)


def product(polys: Sequence[RatPoly]) -> RatPoly:
    out = RatPoly.const(1)
    for p in polys:
        out = out * p
    return out


def forward_difference(seq: Sequence, order: int) -> list:
    """The ``order``-th forward difference of a sequence (exact for rationals)."""
    out = list(seq)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out
