"""Irreducible compact Hermitian symmetric spaces as (rank, a, b) triples.

Every space is summarized by its rank ``r`` and the two root multiplicities
``a`` and ``b``; the complex dimension and the genus follow from

    n = r + r(r-1)a/2 + rb,        p = (r-1)a + 2 + b.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator


class LabelError(ValueError):
    """Malformed or out-of-range family label."""


@dataclass(frozen=True)
class SpaceParams:
    r: int
    a: int
    b: int
    n: int = field(init=False)
    p: int = field(init=False)

    def __post_init__(self):
        for name in ("r", "a", "b"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an integer, got {v!r}")
        if self.r < 1:
            raise ValueError(f"rank must be >= 1, got {self.r}")
        if self.a < 0 or self.b < 0:
            raise ValueError("root multiplicities must be non-negative")
        twice_n = 2 * self.r + self.r * (self.r - 1) * self.a + 2 * self.r * self.b
        # r(r-1) is even so this always divides
        object.__setattr__(self, "n", twice_n // 2)
        object.__setattr__(self, "p", (self.r - 1) * self.a + 2 + self.b)

    @property
    def s(self) -> Fraction:
        """``n/r``, an integer or a half-integer."""
        return Fraction(self.n, self.r)

    @property
    def c0(self) -> Fraction:
        """``p - n/r``, the base argument of the Pochhammer symbol."""
        return self.p - self.s


def space_from_params(r: int, a: int, b: int) -> SpaceParams:
    return SpaceParams(r, a, b)


_FAMILY_ARITY = {"I": 2, "II": 1, "III": 1, "IV": 1, "EIII": 0, "EVII": 0}


@dataclass(frozen=True)
class SpaceLabel:
    family: str
    args: tuple[int, ...] = ()

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "args", tuple(int(x) for x in self.args))
        if fam not in _FAMILY_ARITY:
            raise LabelError(f"unknown family {self.family!r}")
        if len(self.args) != _FAMILY_ARITY[fam]:
            raise LabelError(f"{fam} takes {_FAMILY_ARITY[fam]} parameter(s), got {len(self.args)}")
        if fam == "I":
            k, m = self.args
            if not 1 <= k <= m:
                raise LabelError(f"I(k,m) needs 1 <= k <= m, got I({k},{m})")
        elif fam == "II" and self.args[0] < 5:
            raise LabelError("II(m) needs m >= 5")
        elif fam == "III" and self.args[0] < 1:
            raise LabelError("III(m) needs m >= 1")
        elif fam == "IV" and self.args[0] < 3:
            raise LabelError("IV(m) needs m >= 3")

    def __str__(self) -> str:
        if not self.args:
            return self.family
        return f"{self.family}({','.join(map(str, self.args))})"

    @classmethod
    def parse(cls, text: str) -> "SpaceLabel":
        """Parse ``"I(2,4)"``, ``"iii(3)"``, ``"EVII"`` and the like."""
        s = re.sub(r"\s+", "", text).upper()
        m = re.fullmatch(r"(EIII|EVII|IV|III|II|I)(?:\(([0-9,]*)\))?", s)
        if m is None:
            raise LabelError(f"cannot parse space label {text!r}")
        fam, body = m.group(1), m.group(2)
        args: tuple[int, ...] = ()
        if body:
            try:
                args = tuple(int(x) for x in body.split(","))
            except ValueError:
                raise LabelError(f"bad parameters in {text!r}") from None
        return cls(fam, args)


def space_from_label(label: SpaceLabel | str) -> SpaceParams:
    if isinstance(label, str):
        label = SpaceLabel.parse(label)
    fam, args = label.family, label.args
    if fam == "I":
        k, m = args
        # for k = 1 the multiplicity a is vacuous; keep a = 2 like the rest of the row
        return SpaceParams(min(k, m), 2, abs(m - k))
    if fam == "II":
        (m,) = args
        return SpaceParams(m // 2, 4, 0 if m % 2 == 0 else 2)
    if fam == "III":
        (m,) = args
        return SpaceParams(m, 1, 0)
    if fam == "IV":
        (m,) = args
        return SpaceParams(2, m - 2, 0)
    if fam == "EIII":
        return SpaceParams(2, 6, 4)
    if fam == "EVII":
        return SpaceParams(3, 8, 0)
    raise LabelError(f"unknown family {fam}")  # pragma: no cover


def known_dimension(label: SpaceLabel) -> int:
    """Complex dimension from the classical description of each family."""
    fam, args = label.family, label.args
    if fam == "I":
        return args[0] * args[1]
    if fam == "II":
        return args[0] * (args[0] - 1) // 2
    if fam == "III":
        return args[0] * (args[0] + 1) // 2
    if fam == "IV":
        return args[0]
    return {"EIII": 16, "EVII": 27}[fam]


def catalog(family: str | None = None, max_l: int | None = 8, max_n: int = 27) -> Iterator[SpaceLabel]:
    """Enumerate labels, ordered by family then parameters.

    ``max_l`` bounds ``k + m`` for the Grassmannians I(k,m) (``None`` lifts
    that bound); every family is additionally cut at complex dimension
    ``max_n``.
    """
    fam = family.upper() if family else None
    if fam is not None and fam not in _FAMILY_ARITY:
        raise LabelError(f"unknown family filter {family!r}")

    def want(f):
        return fam is None or fam == f

    if want("I"):
        l = 2
        while max_l is None or l <= max_l:
            found = False
            for k in range(1, l // 2 + 1):
                if k * (l - k) <= max_n:
                    found = True
                    yield SpaceLabel("I", (k, l - k))
            if not found:
                break
            l += 1
    if want("II"):
        m = 5
        while m * (m - 1) // 2 <= max_n:
            yield SpaceLabel("II", (m,))
            m += 1
    if want("III"):
        m = 1
        while m * (m + 1) // 2 <= max_n:
            yield SpaceLabel("III", (m,))
            m += 1
    if want("IV"):
        for m in range(3, max_n + 1):
            yield SpaceLabel("IV", (m,))
    if want("EIII") and 16 <= max_n:
        yield SpaceLabel("EIII")
    if want("EVII") and 27 <= max_n:
        yield SpaceLabel("EVII")


def check_invariants(label: SpaceLabel) -> dict[str, bool]:
    sp = space_from_label(label)
    return {
        "dimension": sp.n == known_dimension(label),
        "dimension_formula": 2 * sp.n == 2 * sp.r + sp.r * (sp.r - 1) * sp.a + 2 * sp.r * sp.b,
        "genus_formula": sp.p == (sp.r - 1) * sp.a + 2 + sp.b,
        "roundtrip": space_from_params(sp.r, sp.a, sp.b) == sp,
        "rank_one": sp.r != 1 or (sp.n == 1 + sp.b and sp.p == sp.n + 1),
    }
