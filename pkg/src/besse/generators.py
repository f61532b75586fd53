"""Seifert data for standard Besse examples.

* weighted Hopf fibrations of ``S^3`` from the circle action
  ``z.(z0, z1) = (z^p z0, z^q z1)``;
* boundaries of rational symplectic ellipsoids ``E(a, b)``, which carry
  the same fibration as the weighted action with ``b/a = q/p``;
* trivial fibrations ``S1 x Sigma``.

The invariants of the weighted Hopf fibration are built from a Bezout
identity ``beta1 * q + beta2 * p = 1``, which pins the Euler number at
``-1/(p q)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .classify import PeriodSpectrum, prime_period_spectrum
from .seifert import NotCoprime, SeifertInvariants

__all__ = [
    "NonPositiveAxis",
    "WeightedHopfSpec",
    "extended_gcd",
    "weighted_hopf",
    "ellipsoid_boundary",
    "trivial_fibration",
]


class NonPositiveAxis(ValueError):
    pass


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a x + b y = g = gcd(a, b)``."""
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return r0, s0, t0


@dataclass(frozen=True)
class WeightedHopfSpec:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 1 or q < 1:
            raise ValueError(f"weights must be positive, got ({p},{q})")
        if gcd(p, q) != 1:
            raise NotCoprime(f"weights ({p},{q}) are not coprime")
        if p > q:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def weighted_hopf(
    p: int, q: int, bezout: tuple[int, int] | None = None
) -> tuple[SeifertInvariants, PeriodSpectrum]:
    """Invariants ``(0; (p, beta1), (q, beta2))`` and their period spectrum.

    ``bezout`` may fix another solution ``(beta1, beta2)`` of
    ``beta1 * q + beta2 * p = 1``; any two give equivalent fibrations.
    """
    spec = WeightedHopfSpec(p, q)
    p, q = spec.p, spec.q
    if bezout is None:
        _, beta1, beta2 = extended_gcd(q, p)
    else:
        beta1, beta2 = bezout
        if beta1 * q + beta2 * p != 1:
            raise ValueError(f"{bezout} does not solve beta1*{q} + beta2*{p} = 1")
    s = SeifertInvariants(0, ((p, beta1), (q, beta2)))
    return s, prime_period_spectrum(s)


def ellipsoid_boundary(
    a: Fraction | int | str, b: Fraction | int | str
) -> tuple[SeifertInvariants, PeriodSpectrum]:
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise NonPositiveAxis(f"ellipsoid axes must be positive, got a={a}, b={b}")
    ratio = b / a
    return weighted_hopf(ratio.denominator, ratio.numerator)


def trivial_fibration(g: int) -> SeifertInvariants:
    return SeifertInvariants(g, ((1, 0),))
