"""Finite Blaschke products of the unit disk: invariants and decomposition.

The package constructs disk automorphisms M with B ∘ M = B, builds explicit
compositions B = outer ∘ inner, solves the unimodular-constant equations that
close an orbit of the origin, and computes the inscribed Poncelet ellipse of
degree-4 products.
"""

from .decompose import (
    Decomposition,
    DecompositionSource,
    StructuredZeroConditions,
    check_paired_conditions_2n,
    check_tripled_conditions_3n,
    decompose_auto,
    decompose_paired_2n,
    decompose_tripled_3n,
    decompose_via_invariants,
    roundtrip_residual,
)
from .errors import (
    BadShape,
    BlaschkeError,
    ConditionsUnsatisfied,
    DecompositionError,
    DomainError,
    NoConcurrentPairing,
    NoInteriorFixedPoint,
    NoIntersection,
    NondegeneracyError,
    NonConvergence,
    NormalizationError,
    NoSolution,
    OrbitClusterError,
    OrbitDegenerate,
    OrbitNotClosed,
)
from .figures import FigureSpec, render_svg
from .invariants import (
    InvariantGroup,
    construct_invariant_product,
    find_invariant_group,
    verify_invariance,
)
from .moebius import (
    IDENTITY,
    MoebiusTransform,
    OrbitReport,
    closure_polynomial,
    moebius_compose,
    moebius_eval,
    moebius_fixed_point_in_disk,
    moebius_inverse,
    moebius_iterate_zero,
    moebius_order,
    moebius_power,
    solve_unimodular_c,
)
from .numerics import ComplexPolynomial, filter_unimodular, poly_eval, poly_roots
from .poncelet import (
    ChordConcurrencyReport,
    PonceletEllipse,
    chord_concurrency,
    circle_through_pole_property,
    line_through_a1_property,
    poncelet_ellipse,
)
from .products import (
    BlaschkeProduct,
    CanonicalForm,
    blaschke_compose,
    blaschke_equal,
    blaschke_eval,
    blaschke_preimages,
    canonical_form,
)

__version__ = "0.1.0"

__all__ = [
    "BadShape",
    "BlaschkeError",
    "BlaschkeProduct",
    "CanonicalForm",
    "ChordConcurrencyReport",
    "ComplexPolynomial",
    "ConditionsUnsatisfied",
    "Decomposition",
    "DecompositionError",
    "DecompositionSource",
    "DomainError",
    "FigureSpec",
    "IDENTITY",
    "InvariantGroup",
    "MoebiusTransform",
    "NoConcurrentPairing",
    "NoInteriorFixedPoint",
    "NoIntersection",
    "NondegeneracyError",
    "NonConvergence",
    "NormalizationError",
    "NoSolution",
    "OrbitClusterError",
    "OrbitDegenerate",
    "OrbitNotClosed",
    "OrbitReport",
    "PonceletEllipse",
    "StructuredZeroConditions",
    "blaschke_compose",
    "blaschke_equal",
    "blaschke_eval",
    "blaschke_preimages",
    "canonical_form",
    "check_paired_conditions_2n",
    "check_tripled_conditions_3n",
    "chord_concurrency",
    "circle_through_pole_property",
    "closure_polynomial",
    "construct_invariant_product",
    "decompose_auto",
    "decompose_paired_2n",
    "decompose_tripled_3n",
    "decompose_via_invariants",
    "filter_unimodular",
    "find_invariant_group",
    "line_through_a1_property",
    "moebius_compose",
    "moebius_eval",
    "moebius_fixed_point_in_disk",
    "moebius_inverse",
    "moebius_iterate_zero",
    "moebius_order",
    "moebius_power",
    "poly_eval",
    "poly_roots",
    "poncelet_ellipse",
    "render_svg",
    "roundtrip_residual",
    "solve_unimodular_c",
    "verify_invariance",
]
