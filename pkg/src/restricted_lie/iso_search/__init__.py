"""Automorphism, isomorphism and conjugacy searches."""

from .parameterizations import (
    PARAMETERIZATIONS,
    Parameterization,
    ParameterizationReport,
    compare_parameterization,
    get_parameterization,
    verify_parameterization,
)
from .scalar import conjugate_up_to_scalar
from .search import (
    DEFAULT_BUDGET,
    Automorphism,
    LadderResult,
    SearchBudget,
    automorphisms,
    is_restricted_isomorphism,
    ladder_search,
    lie_isomorphism,
    pmaps_conjugate,
    restricted_isomorphic,
)

__all__ = [
    "SearchBudget",
    "DEFAULT_BUDGET",
    "Automorphism",
    "automorphisms",
    "lie_isomorphism",
    "pmaps_conjugate",
    "restricted_isomorphic",
    "is_restricted_isomorphism",
    "ladder_search",
    "LadderResult",
    "conjugate_up_to_scalar",
    "Parameterization",
    "ParameterizationReport",
    "PARAMETERIZATIONS",
    "get_parameterization",
    "compare_parameterization",
    "verify_parameterization",
]
