"""Exact toolkit for rational polyhedral cones, affine monoids, fans, monoid
algebras, and glued scheme models over a described base.

All arithmetic is exact: unbounded ints and fractions.Fraction throughout.
"""

from .cones import (
    FaceLattice,
    Polycone,
    cone_from_rays,
    contains_point,
    dual_cone,
    faces,
    intersect_cones,
)
from .fans import (
    BadIntersectionError,
    Fan,
    FanError,
    FullificationResult,
    MissingFaceError,
    NonPointedConeError,
    RegularityReport,
    complete_under_faces,
    fullify,
    is_complete,
    is_full,
    is_regular,
    validate_fan,
)
from .lattice import IntMatrix
from .monoid_algebra import (
    AlgebraElement,
    CoeffRing,
    RingMorphism,
    augmentation,
    base_change,
    coefficient_morphism,
    exp_map,
    localization_image,
)
from .monoids import (
    AffineMonoid,
    DifferenceExtension,
    ImmersionCheck,
    LocalizationCertificate,
    check_openly_immersive_pair,
    dual_monoid,
    find_localizing_element,
    hilbert_basis,
    is_integrally_closed,
    localization_certificate,
    monoid_contains,
    monoid_of_differences,
    monoid_sum,
)
from .scheme import (
    AugmentationSection,
    BaseDescriptor,
    DimRange,
    GluingAtlas,
    MonoidSystem,
    PropertyRecord,
    ReductionReport,
    SeparationReport,
    SystemImmersionReport,
    build_atlas,
    check_separation_condition,
    component_transport,
    dimension_bounds,
    evaluate_atom,
    is_openly_immersive,
    property_report,
    reduction_report,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMonoid",
    "AlgebraElement",
    "AugmentationSection",
    "BadIntersectionError",
    "BaseDescriptor",
    "CoeffRing",
    "DifferenceExtension",
    "DimRange",
    "FaceLattice",
    "Fan",
    "FanError",
    "FullificationResult",
    "GluingAtlas",
    "ImmersionCheck",
    "IntMatrix",
    "LocalizationCertificate",
    "MissingFaceError",
    "MonoidSystem",
    "NonPointedConeError",
    "Polycone",
    "PropertyRecord",
    "ReductionReport",
    "RegularityReport",
    "RingMorphism",
    "SeparationReport",
    "SystemImmersionReport",
    "augmentation",
    "base_change",
    "build_atlas",
    "check_openly_immersive_pair",
    "check_separation_condition",
    "coefficient_morphism",
    "complete_under_faces",
    "component_transport",
    "cone_from_rays",
    "contains_point",
    "dimension_bounds",
    "dual_cone",
    "dual_monoid",
    "evaluate_atom",
    "exp_map",
    "faces",
    "find_localizing_element",
    "fullify",
    "hilbert_basis",
    "intersect_cones",
    "is_complete",
    "is_full",
    "is_integrally_closed",
    "is_openly_immersive",
    "is_regular",
    "localization_certificate",
    "localization_image",
    "monoid_contains",
    "monoid_of_differences",
    "monoid_sum",
    "property_report",
    "reduction_report",
    "validate_fan",
]
