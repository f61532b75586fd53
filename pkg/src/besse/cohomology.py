"""Cyclic orbifold cohomology rings ``Z[u] / <m u^d>`` with ``deg u = 2``.

This family covers weighted projective spaces (``d = n + 1`` and
``m = a0 * ... * an``) and the cyclic quotients ``C / Z_k`` (``d = 1``,
``m = k``).  Principal circle orbibundles over the orbifold are classified
by their Euler class ``e = k u`` in degree 2, and the total space is a
manifold iff cup product with ``e`` is an isomorphism in all large degrees.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd, prod
from typing import Sequence

from .errors import InconsistencyError

__all__ = [
    "EmptyWeights",
    "CyclicGradedRing",
    "EulerClassCoeff",
    "GroupKind",
    "GroupDescriptor",
    "BundleClassCount",
    "weighted_projective_ring",
    "cyclic_quotient_ring",
    "cohomology_group",
    "cup_is_isomorphism",
    "multiplication_is_bijective",
    "euler_condition_holds",
    "orbifold_is_manifold",
    "total_space_is_manifold",
    "count_bundle_classes",
]


class EmptyWeights(ValueError):
    pass


@dataclass(frozen=True)
class CyclicGradedRing:
    d: int
    m: int

    def __post_init__(self):
        if self.d < 1 or self.m < 1:
            raise ValueError(f"need d >= 1 and m >= 1, got d={self.d}, m={self.m}")

    @property
    def stable_degree(self) -> int:
        """First degree from which the graded pieces repeat."""
        return 2 * self.d

    def __str__(self) -> str:
        return f"Z[u]/<{self.m}u^{self.d}>"


@dataclass(frozen=True)
class EulerClassCoeff:
    """Degree-2 class ``k u``; reduced mod ``m`` when ``H^2`` is ``Z/m``."""

    k: int

    @classmethod
    def in_ring(cls, r: CyclicGradedRing, k: int) -> EulerClassCoeff:
        return cls(k % r.m if r.d == 1 else k)


class GroupKind(enum.Enum):
    FREE_RANK_1 = "FreeRank1"
    CYCLIC = "CyclicOfOrder"
    ZERO = "Zero"


@dataclass(frozen=True)
class GroupDescriptor:
    kind: GroupKind
    order: int | None = None

    def __post_init__(self):
        if self.kind is GroupKind.CYCLIC and self.order == 1:
            object.__setattr__(self, "kind", GroupKind.ZERO)
            object.__setattr__(self, "order", None)

    def __str__(self) -> str:
        if self.kind is GroupKind.FREE_RANK_1:
            return "Z"
        if self.kind is GroupKind.ZERO:
            return "0"
        return f"Z/{self.order}"


@dataclass(frozen=True)
class BundleClassCount:
    """Cardinality of ``H^2``: ``count`` when finite, ``None`` for ``Z``."""

    count: int | None

    @property
    def infinite(self) -> bool:
        return self.count is None

    def __str__(self) -> str:
        return "InfiniteCyclic" if self.count is None else f"Finite({self.count})"


def weighted_projective_ring(weights: Sequence[int]) -> CyclicGradedRing:
    weights = list(weights)
    if not weights:
        raise EmptyWeights("weighted projective space needs at least one weight")
    if any(w < 1 for w in weights):
        raise ValueError(f"weights must be positive, got {weights}")
    return CyclicGradedRing(d=len(weights), m=prod(weights))


def cyclic_quotient_ring(k: int) -> CyclicGradedRing:
    return CyclicGradedRing(d=1, m=k)


def cohomology_group(r: CyclicGradedRing, i: int) -> GroupDescriptor:
    if i < 0 or i % 2:
        return GroupDescriptor(GroupKind.ZERO)
    if i // 2 < r.d:
        return GroupDescriptor(GroupKind.FREE_RANK_1)
    return GroupDescriptor(GroupKind.CYCLIC, r.m)


def multiplication_is_bijective(k: int, m: int) -> bool:
    """Brute-force check that ``x -> k x`` permutes ``Z/m``."""
    return len({(k * x) % m for x in range(m)}) == m


def _coeff(e) -> int:
    return e.k if isinstance(e, EulerClassCoeff) else int(e)


def cup_is_isomorphism(r: CyclicGradedRing, e, i: int) -> bool:
    """Whether ``e cup . : H^i -> H^(i+2)`` is an isomorphism.

    Decided from the generators: ``u^j`` maps to ``k u^(j+1)``.
    """
    k = _coeff(e)
    src, dst = cohomology_group(r, i), cohomology_group(r, i + 2)
    if src.kind is GroupKind.ZERO or dst.kind is GroupKind.ZERO:
        return src.kind is dst.kind
    if src.kind is GroupKind.FREE_RANK_1 and dst.kind is GroupKind.FREE_RANK_1:
        return abs(k) == 1
    if src.kind is not dst.kind:
        return False
    return multiplication_is_bijective(k, r.m)


def euler_condition_holds(r: CyclicGradedRing, e) -> bool:
    """Cup product with ``e`` is an isomorphism in every degree ``>= 2d``.

    Past ``2d`` the map is multiplication by ``k`` on ``Z/m`` in even
    degrees and zero-to-zero in odd ones, so two consecutive degrees
    decide all of them.  The gcd criterion and the explicit map must agree.
    """
    k = _coeff(e)
    by_gcd = gcd(k, r.m) == 1
    explicit = all(cup_is_isomorphism(r, k, i) for i in (r.stable_degree, r.stable_degree + 1))
    if by_gcd != explicit:
        raise InconsistencyError(f"gcd and explicit cup checks disagree for {r}, k={k}")
    return by_gcd


def orbifold_is_manifold(r: CyclicGradedRing) -> bool:
    # H^i vanishes for all large i exactly when the torsion order is 1
    return r.m == 1


def total_space_is_manifold(r: CyclicGradedRing, e) -> bool:
    return euler_condition_holds(r, e)


def count_bundle_classes(r: CyclicGradedRing) -> BundleClassCount:
    g = cohomology_group(r, 2)
    if g.kind is GroupKind.FREE_RANK_1:
        return BundleClassCount(None)
    return BundleClassCount(g.order or 1)
