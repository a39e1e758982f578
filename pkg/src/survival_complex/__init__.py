"""Survival complexes of Artinian monomial quotient rings."""

from .builder import (
    SocleSpec,
    build_general,
    build_planar,
    build_slab,
    realizes_exactly,
    uniqueness_search,
    validate_spec,
)
from .complex import (
    ComponentKind,
    SurvivalComplex,
    VertexKind,
    build_complex,
    classify_vertex,
    connected_components,
    facets,
    is_face,
    zero_divisor_graph,
)
from .errors import (
    CapExceeded,
    ContextMismatch,
    InvalidGenerator,
    InvariantViolation,
    NotArtinian,
    SpecViolation,
    SurvivalError,
)
from .fibre import (
    FibreFactorization,
    Refusal,
    check_pairwise_products,
    decompose,
    fibre_product,
    pure_power_factorization,
)
from .monomial import (
    Monomial,
    MonomialIdeal,
    QuotientRing,
    VarContext,
    contains,
    divides,
    enumerate_survivors,
    ideal_equals,
    is_artinian,
    minimalize,
    multiply,
)
from .socle import (
    SocleReport,
    is_complete_intersection,
    is_gorenstein,
    is_pure_power,
    socle_dimension,
    socle_generators,
    socle_report,
)
from .textio import emit_dot, emit_report, parse_ideal, parse_socle_spec

__version__ = "0.1.0"
