"""Exact arithmetic for 4-dimensional restricted Lie algebras in characteristic p.

Finite fields and linear algebra (``substrate``), Lie algebras by structure
constants (``lie_core``), p-maps (``restricted``), isomorphism searches
(``iso_search``) and the classification as checkable data (``catalog``).
"""

from .config import Settings, load_settings
from .errors import (
    BudgetExhaustedError,
    CharacteristicError,
    CheckFailure,
    GuardrailError,
    NotAnAutomorphismError,
    ParseError,
    RestrictedLieError,
    UsageError,
    ValidationError,
)
from .lie_core import LieAlgebra, check_jacobi, parse_algebra, parse_document
from .restricted import PSemilinearMap, RestrictedLieAlgebra, is_p_map, solve_pmaps
from .substrate.fields import FieldElement, FiniteField, field_make

__version__ = "0.1.0"
__all__ = [
    "FiniteField",
    "FieldElement",
    "field_make",
    "LieAlgebra",
    "check_jacobi",
    "parse_algebra",
    "parse_document",
    "PSemilinearMap",
    "RestrictedLieAlgebra",
    "is_p_map",
    "solve_pmaps",
    "Settings",
    "load_settings",
    "RestrictedLieError",
    "UsageError",
    "ValidationError",
    "CharacteristicError",
    "NotAnAutomorphismError",
    "ParseError",
    "GuardrailError",
    "BudgetExhaustedError",
    "CheckFailure",
]
