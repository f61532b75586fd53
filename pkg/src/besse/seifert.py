"""Seifert invariants of closed 3-manifolds.

A Seifert fibration is written ``(g; (a1, b1), ..., (an, bn))``.  A
nonnegative ``g`` is the genus of an orientable base; a negative ``g``
means a nonorientable base with ``|g|`` crosscaps.  Pairs with ``a = 1``
are allowed and act as integer corrections to the Euler number.

All arithmetic is exact; rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

__all__ = [
    "Rational",
    "SeifertError",
    "NonPositiveMultiplicity",
    "NotCoprime",
    "SeifertInvariants",
    "validate",
    "parse_seifert",
    "euler_number",
    "normalize",
    "reverse_orientation",
    "equivalent",
]

Rational = Fraction

Pair = tuple[int, int]


class SeifertError(ValueError):
    """Malformed Seifert data."""


class NonPositiveMultiplicity(SeifertError):
    pass


class NotCoprime(SeifertError):
    pass


def _check_pair(a, b) -> Pair:
    if isinstance(a, bool) or isinstance(b, bool):
        raise TypeError("Seifert pair entries must be integers")
    a, b = int(a), int(b)
    if a <= 0:
        raise NonPositiveMultiplicity(f"multiplicity must be >= 1, got ({a},{b})")
    if a >= 2 and gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) = {gcd(a, b)} for pair ({a},{b})")
    return a, b


@dataclass(frozen=True)
class SeifertInvariants:
    genus: int
    pairs: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "genus", int(self.genus))
        object.__setattr__(
            self, "pairs", tuple(_check_pair(a, b) for a, b in self.pairs)
        )

    @property
    def orientable_base(self) -> bool:
        return self.genus >= 0

    @property
    def exceptional(self) -> tuple[Pair, ...]:
        """Pairs with multiplicity at least 2, in input order."""
        return tuple(p for p in self.pairs if p[0] >= 2)

    def __str__(self) -> str:
        return f"{self.genus};" + ",".join(f"({a},{b})" for a, b in self.pairs)


def validate(genus: int, pairs: Iterable[Iterable[int]]) -> SeifertInvariants:
    """Build checked invariants from raw integer data.

    Raises NonPositiveMultiplicity or NotCoprime on bad pairs.
    """
    return SeifertInvariants(genus, tuple(tuple(p) for p in pairs))


_GENUS_RE = re.compile(r"\s*([+-]?\d+)\s*(?:;(.*))?$", re.S)
_PAIR_RE = re.compile(r"\s*\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*")


def parse_seifert(text: str) -> SeifertInvariants:
    """Parse ``"g;(a1,b1),(a2,b2),..."``; ``"g;"`` and ``"g"`` give no pairs."""
    m = _GENUS_RE.match(text)
    if m is None:
        raise SeifertError(f"cannot read genus from {text!r}; expected 'g;(a1,b1),...'")
    genus = int(m.group(1))
    rest = m.group(2) or ""
    pairs = []
    if rest.strip():
        for chunk in _split_pairs(rest):
            pm = _PAIR_RE.fullmatch(chunk)
            if pm is None:
                raise SeifertError(f"bad pair {chunk.strip()!r}; expected '(a,b)'")
            pairs.append((int(pm.group(1)), int(pm.group(2))))
    return validate(genus, pairs)


def _split_pairs(rest: str) -> list[str]:
    # split on commas at parenthesis depth 0
    chunks, depth, cur = [], 0, []
    for ch in rest:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    chunks.append("".join(cur))
    return chunks


def euler_number(s: SeifertInvariants) -> Fraction:
    """Return ``-sum(b/a)`` over all pairs."""
    return -sum((Fraction(b, a) for a, b in s.pairs), Fraction(0))


def normalize(s: SeifertInvariants) -> SeifertInvariants:
    """Canonical form ``(g; (1, b0), (a1, b1), ...)`` with ``0 < bi < ai``.

    Every exceptional pair is reduced into ``(0, a)`` and the integer parts
    are collected, together with all ``a = 1`` pairs, into one leading pair
    ``(1, b0)``.  Exceptional pairs are sorted by ``(a, b)``.  The Euler
    number is unchanged.
    """
    b0 = 0
    reduced = []
    for a, b in s.pairs:
        q, r = divmod(b, a)
        b0 += q
        if a >= 2:
            reduced.append((a, r))
    return SeifertInvariants(s.genus, ((1, b0), *sorted(reduced)))


def reverse_orientation(s: SeifertInvariants) -> SeifertInvariants:
    return SeifertInvariants(s.genus, tuple((a, -b) for a, b in s.pairs))


def equivalent(
    s1: SeifertInvariants, s2: SeifertInvariants, allow_reversal: bool = False
) -> bool:
    """Fiber-preserving equivalence by comparison of normal forms.

    With ``allow_reversal`` an orientation-reversing identification is
    also accepted.
    """
    n1 = normalize(s1)
    if n1 == normalize(s2):
        return True
    return allow_reversal and n1 == normalize(reverse_orientation(s2))
