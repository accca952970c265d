"""Exact classification of Legendrian linear curves on the 3-torus.

The tight contact structures on the 3-torus form a single integer family
indexed by a twisting parameter n >= 1, and every linear curve type is
named by a primitive integer vector.  This package decides Legendrian
isotopy for such curves with exact integer arithmetic:

* maximal Thurston-Bennequin numbers and dividing-set profiles of convex
  linear tori (legtorus.contact);
* canonical forms, realizability, and class counts per invariant pair
  (legtorus.classes);
* the stabilisation calculus, stable-merge queries, and the quotient by
  negative stabilisation (legtorus.stable);
* an independent brute-force verifier that closes stabilisation words
  under local moves only (legtorus.oracle);
* a deterministic command-line interface (legtorus.cli).
"""

from .classes import (
    LegendrianClass,
    NonVertical,
    Presentation,
    VerticalMax,
    VerticalMixed,
    VerticalPure,
    canonicalize,
    count_classes,
    enumerate_range,
    is_isotopic,
    is_realizable,
)
from .contact import (
    ContactStructure,
    DividingSetProfile,
    HorizontalDividingStructure,
    Slope,
    TorusSpan,
    dividing_profile,
    horizontal_structure,
    shared_region,
    tb_max,
)
from .lattice import (
    Direction,
    KnotKind,
    UnimodularMatrix,
    extend_to_sl2,
    is_primitive,
    knot_type_kind,
    normalize_horizontal_knot_type,
)
from .oracle import (
    MergeRelationSet,
    Quotient,
    VerificationReport,
    WordNode,
    build_quotient,
    quotient_count,
    verify_against_closed_form,
)
from .stable import (
    NegativeStableClassKey,
    StableQuery,
    becomes_isotopic_after,
    destabilize_parents,
    is_transversally_simple,
    minimal_mixed_merge,
    negative_stable_class_count,
    negative_stable_class_keys,
    stabilize,
)

__version__ = "0.1.0"

__all__ = [
    "ContactStructure",
    "Direction",
    "DividingSetProfile",
    "HorizontalDividingStructure",
    "KnotKind",
    "LegendrianClass",
    "MergeRelationSet",
    "NegativeStableClassKey",
    "NonVertical",
    "Presentation",
    "Quotient",
    "Slope",
    "StableQuery",
    "TorusSpan",
    "UnimodularMatrix",
    "VerificationReport",
    "VerticalMax",
    "VerticalMixed",
    "VerticalPure",
    "WordNode",
    "becomes_isotopic_after",
    "build_quotient",
    "canonicalize",
    "count_classes",
    "destabilize_parents",
    "dividing_profile",
    "enumerate_range",
    "extend_to_sl2",
    "horizontal_structure",
    "is_isotopic",
    "is_primitive",
    "is_realizable",
    "is_transversally_simple",
    "knot_type_kind",
    "minimal_mixed_merge",
    "negative_stable_class_count",
    "negative_stable_class_keys",
    "normalize_horizontal_knot_type",
    "quotient_count",
    "shared_region",
    "stabilize",
    "tb_max",
    "verify_against_closed_form",
]
