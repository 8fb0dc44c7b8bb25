"""Exact census of isomorphism classes of d-in/d-out regular directed multigraphs."""

from .canonical import (
    CanonicalResult,
    are_isomorphic,
    automorphism_order,
    canonical_form,
)
from .census import (
    Catalog,
    CatalogRecord,
    CensusDiff,
    CensusEntry,
    CensusInvariantError,
    CensusReport,
    VerificationReport,
    build_census,
    class_lookup,
    compare_census,
    load_catalog,
    oracle_census,
    verify_against_catalog,
)
from .cli import emit_dot, run_cli
from .core import (
    COUNT_BUDGET,
    NODE_CAP,
    ArcMatrix,
    ClassId,
    CountBudgetError,
    DimensionError,
    NodeCapError,
    Permutation,
    RegularityError,
    ResourceLimitError,
    apply_permutation,
    is_regular,
    total_configurations,
    weight,
)
from .generate import (
    count_regular_matrices,
    enumerate_regular_matrices,
    enumerate_words,
    word_to_matrix,
)
from .monomial import (
    DegreeError,
    Monomial,
    MonomialParseError,
    StyleError,
    matrix_to_monomial,
    monomial_to_matrix,
    parse_monomial,
    print_monomial,
)

__version__ = "0.1.0"

__all__ = [
    "ArcMatrix",
    "CanonicalResult",
    "Catalog",
    "CatalogRecord",
    "CensusDiff",
    "CensusEntry",
    "CensusInvariantError",
    "CensusReport",
    "ClassId",
    "CountBudgetError",
    "COUNT_BUDGET",
    "DegreeError",
    "DimensionError",
    "Monomial",
    "MonomialParseError",
    "NodeCapError",
    "NODE_CAP",
    "Permutation",
    "RegularityError",
    "ResourceLimitError",
    "StyleError",
    "VerificationReport",
    "apply_permutation",
    "are_isomorphic",
    "automorphism_order",
    "build_census",
    "canonical_form",
    "class_lookup",
    "compare_census",
    "count_regular_matrices",
    "emit_dot",
    "enumerate_regular_matrices",
    "enumerate_words",
    "is_regular",
    "load_catalog",
    "matrix_to_monomial",
    "monomial_to_matrix",
    "oracle_census",
    "parse_monomial",
    "print_monomial",
    "run_cli",
    "total_configurations",
    "verify_against_catalog",
    "weight",
    "word_to_matrix",
]
