"""Exact workbench for 2-colourability of non-uniform hypergraphs.

The central quantity is the dyadic weight q(H) = sum over edges of
2**(-|e|).  The package builds the known small extremal hypergraphs, the
16-vertex example of weight 95/64, and randomized constructions whose weight
grows like n**2; every reported number is exact integer or dyadic/rational
arithmetic, checked by exhaustive enumeration where feasible.
"""

from propb.alteration import (
    AlterationParams,
    AlterationReport,
    ExpectationBounds,
    RetriesExhaustedError,
    asymptotic_q,
    balanced_probability,
    derive_seed,
    erdos_edge_count,
    expected_proper_upper_bound,
    halved_edge_count,
    mono_probability,
    run_alteration,
    sample_uniform_edges,
)
from propb.analysis import (
    CheckEntry,
    DesignCheckResult,
    VerificationReport,
    design_check,
    is_edge_critical,
    verify_paper_example,
)
from propb.colouring import (
    DEFAULT_ENUM_LIMIT,
    ENUM_LIMIT_ENV,
    Colouring,
    EnumerationReport,
    enumerate_proper,
    enumeration_limit,
    is_proper,
    is_two_colourable,
    monochromatic_edges,
    pair_opposites,
)
from propb.constructions import (
    FANO_LINES,
    affine_plane_gf4,
    derive_h8,
    fano,
    gf4_add,
    gf4_mul,
    paper_example,
    seymour_toft,
    triangle,
)
from propb.core import (
    DyadicValue,
    Hypergraph,
    binomial,
    make_hypergraph,
    min_edge_size,
    q_value,
    union,
)
from propb.formats import DocumentError, check_line, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "AlterationParams",
    "AlterationReport",
    "CheckEntry",
    "Colouring",
    "DEFAULT_ENUM_LIMIT",
    "DesignCheckResult",
    "DocumentError",
    "DyadicValue",
    "ENUM_LIMIT_ENV",
    "EnumerationReport",
    "ExpectationBounds",
    "FANO_LINES",
    "Hypergraph",
    "RetriesExhaustedError",
    "VerificationReport",
    "affine_plane_gf4",
    "asymptotic_q",
    "balanced_probability",
    "check_line",
    "binomial",
    "derive_h8",
    "derive_seed",
    "design_check",
    "enumerate_proper",
    "enumeration_limit",
    "erdos_edge_count",
    "expected_proper_upper_bound",
    "fano",
    "gf4_add",
    "gf4_mul",
    "halved_edge_count",
    "is_edge_critical",
    "is_proper",
    "is_two_colourable",
    "make_hypergraph",
    "min_edge_size",
    "mono_probability",
    "monochromatic_edges",
    "paper_example",
    "pair_opposites",
    "parse",
    "q_value",
    "run_alteration",
    "sample_uniform_edges",
    "serialize",
    "seymour_toft",
    "triangle",
    "union",
    "verify_paper_example",
]
