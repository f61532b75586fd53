"""Besse Reeb flows on Seifert fibered 3-manifolds.

A Seifert fibration of a closed orientable 3-manifold is induced by a
Besse contact form exactly when its Euler number is nonzero; equivalently,
when it is not finitely covered by a product ``S1 x Sigma``.  For such a
form, rescaled so the generic period is ``2*pi``, the prime periods are
``2*pi`` and ``2*pi/a`` for every exceptional multiplicity ``a``.
Periods here are measured in units of ``2*pi``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Iterable

from .seifert import SeifertInvariants, equivalent, euler_number, normalize

__all__ = [
    "NotRealizable",
    "PeriodSpectrum",
    "Verdict",
    "Side",
    "ClassificationResult",
    "is_besse_realizable",
    "finitely_covered_by_trivial",
    "prime_period_spectrum",
    "spectra_match",
    "classify",
]


class NotRealizable(ValueError):
    """The fibration has Euler number zero, so no Besse form induces it."""


@dataclass(frozen=True)
class PeriodSpectrum:
    values: frozenset[Fraction]

    def __post_init__(self):
        vals = frozenset(Fraction(v) for v in self.values)
        if Fraction(1) not in vals:
            raise ValueError("a prime period spectrum always contains 1")
        for v in vals:
            if v <= 0 or v.numerator != 1:
                raise ValueError(f"{v} is not of the form 1/a")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_multiplicities(cls, multiplicities: Iterable[int]) -> PeriodSpectrum:
        return cls(frozenset([Fraction(1)] + [Fraction(1, a) for a in multiplicities]))

    def sorted(self) -> list[Fraction]:
        return sorted(self.values, reverse=True)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.sorted()) + "}"


class Verdict(enum.Enum):
    STRICTLY_CONTACTOMORPHIC = "StrictlyContactomorphic"
    DISTINCT = "Distinct"
    NOT_REALIZABLE = "NotRealizable"


class Side(enum.Enum):
    FIRST = "first"
    SECOND = "second"
    BOTH = "both"


@dataclass(frozen=True)
class ClassificationResult:
    verdict: Verdict
    side: Side | None = None
    witness: dict[str, Any] = field(default_factory=dict, compare=False)


def is_besse_realizable(s: SeifertInvariants) -> bool:
    return euler_number(s) != 0


def finitely_covered_by_trivial(s: SeifertInvariants) -> bool:
    """Whether some finite cover of the fibration is a product ``S1 x Sigma``.

    Decided through the Euler number, which scales by the (nonzero) degree
    of the base cover and fiber cover and vanishes on products.  Computed
    over a common denominator in integers, independently of
    :func:`euler_number`.
    """
    common = lcm(*(a for a, _ in s.pairs)) if s.pairs else 1
    return sum(b * (common // a) for a, b in s.pairs) == 0


def prime_period_spectrum(s: SeifertInvariants) -> PeriodSpectrum:
    if not is_besse_realizable(s):
        raise NotRealizable(f"Euler number of {s} is 0; no Besse form induces it")
    return PeriodSpectrum.from_multiplicities(a for a, _ in s.exceptional)


def spectra_match(p1: PeriodSpectrum, p2: PeriodSpectrum) -> bool:
    return p1.values == p2.values


def _witness_side(s: SeifertInvariants) -> dict[str, Any]:
    e = euler_number(s)
    return {
        "normal_form": normalize(s),
        "euler_number": e,
        "spectrum": prime_period_spectrum(s) if e != 0 else None,
    }


def classify(
    s1: SeifertInvariants, s2: SeifertInvariants, allow_reversal: bool = False
) -> ClassificationResult:
    """Compare two Seifert fibrations as Besse contact 3-manifolds.

    Realizable fibrations are strictly contactomorphic exactly when the
    fibrations are equivalent; this compares fibrations, not underlying
    manifolds.
    """
    w1, w2 = _witness_side(s1), _witness_side(s2)
    witness = {"first": w1, "second": w2, "allow_reversal": allow_reversal}
    bad1, bad2 = w1["euler_number"] == 0, w2["euler_number"] == 0
    if bad1 or bad2:
        side = Side.BOTH if bad1 and bad2 else (Side.FIRST if bad1 else Side.SECOND)
        return ClassificationResult(Verdict.NOT_REALIZABLE, side, witness)
    witness["spectra_match"] = spectra_match(w1["spectrum"], w2["spectrum"])
    if equivalent(s1, s2, allow_reversal):
        return ClassificationResult(Verdict.STRICTLY_CONTACTOMORPHIC, None, witness)
    return ClassificationResult(Verdict.DISTINCT, None, witness)
