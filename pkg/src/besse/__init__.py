"""Exact classification of Besse Reeb flows on Seifert fibered 3-manifolds."""

from .classify import (
    ClassificationResult,
    NotRealizable,
    PeriodSpectrum,
    Side,
    Verdict,
    classify,
    finitely_covered_by_trivial,
    is_besse_realizable,
    prime_period_spectrum,
    spectra_match,
)
from .cohomology import (
    BundleClassCount,
    CyclicGradedRing,
    EmptyWeights,
    EulerClassCoeff,
    GroupDescriptor,
    GroupKind,
    cohomology_group,
    count_bundle_classes,
    cyclic_quotient_ring,
    euler_condition_holds,
    orbifold_is_manifold,
    total_space_is_manifold,
    weighted_projective_ring,
)
from .errors import InconsistencyError
from .generators import (
    NonPositiveAxis,
    WeightedHopfSpec,
    ellipsoid_boundary,
    trivial_fibration,
    weighted_hopf,
)
from .orbifold import (
    Geometry,
    TwoOrbifold,
    base_of,
    geometry_type,
    is_developable,
    orbifold_euler_characteristic,
)
from .seifert import (
    NonPositiveMultiplicity,
    NotCoprime,
    Rational,
    SeifertError,
    SeifertInvariants,
    equivalent,
    euler_number,
    normalize,
    parse_seifert,
    reverse_orientation,
    validate,
)

__version__ = "0.1.0"
