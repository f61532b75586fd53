"""Closed 2-orbifolds arising as bases of Seifert fibrations."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .seifert import SeifertInvariants

__all__ = [
    "Geometry",
    "TwoOrbifold",
    "base_of",
    "orbifold_euler_characteristic",
    "is_developable",
    "geometry_type",
]


class Geometry(enum.Enum):
    SPHERICAL = "Spherical"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"
    BAD = "Bad"


@dataclass(frozen=True)
class TwoOrbifold:
    """Closed 2-orbifold with cone points only.

    ``genus`` is the orientable genus, or the number of crosscaps when the
    underlying surface is nonorientable.
    """

    orientable: bool
    genus: int
    cone_orders: tuple[int, ...] = ()

    def __post_init__(self):
        cones = tuple(sorted(int(a) for a in self.cone_orders))
        if any(a < 2 for a in cones):
            raise ValueError(f"cone orders must be >= 2, got {cones}")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a nonorientable surface needs at least one crosscap")
        object.__setattr__(self, "cone_orders", cones)

    def surface_euler_characteristic(self) -> int:
        if self.orientable:
            return 2 - 2 * self.genus
        return 2 - self.genus

    def __str__(self) -> str:
        if self.orientable:
            name = {0: "S2", 1: "T2"}.get(self.genus, f"Sigma_{self.genus}")
        else:
            name = {1: "RP2", 2: "K"}.get(self.genus, f"N_{self.genus}")
        if self.cone_orders:
            name += "(" + ",".join(map(str, self.cone_orders)) + ")"
        return name


def base_of(s: SeifertInvariants) -> TwoOrbifold:
    return TwoOrbifold(
        orientable=s.genus >= 0,
        genus=abs(s.genus),
        cone_orders=tuple(a for a, _ in s.pairs if a >= 2),
    )


def orbifold_euler_characteristic(o: TwoOrbifold) -> Fraction:
    """``chi(|O|) - sum(1 - 1/a)`` over the cone points."""
    chi = Fraction(o.surface_euler_characteristic())
    for a in o.cone_orders:
        chi -= 1 - Fraction(1, a)
    return chi


def is_developable(o: TwoOrbifold) -> bool:
    # the only bad closed 2-orbifolds: teardrop S2(p) and spindle S2(p,q), p != q
    if not o.orientable or o.genus != 0:
        return True
    cones = o.cone_orders
    if len(cones) == 1:
        return False
    if len(cones) == 2 and cones[0] != cones[1]:
        return False
    return True


def geometry_type(o: TwoOrbifold) -> Geometry:
    if not is_developable(o):
        return Geometry.BAD
    chi = orbifold_euler_characteristic(o)
    if chi > 0:
        return Geometry.SPHERICAL
    if chi == 0:
        return Geometry.EUCLIDEAN
    return Geometry.HYPERBOLIC
