"""Lie algebras by structure constants and the algebra file format."""

from .algebra import LieAlgebra, LieElement, ad_matrix, bracket
from .parser import AlgebraDocument, format_algebra, parse_algebra, parse_document
from .structure import (
    JacobiViolation,
    center,
    check_jacobi,
    derived,
    derived_series,
    is_automorphism,
    is_homomorphism,
    is_ideal,
    is_isomorphism,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    nilradical,
)

__all__ = [
    "LieAlgebra",
    "LieElement",
    "bracket",
    "ad_matrix",
    "AlgebraDocument",
    "parse_algebra",
    "parse_document",
    "format_algebra",
    "JacobiViolation",
    "check_jacobi",
    "center",
    "derived",
    "is_ideal",
    "lower_central_series",
    "derived_series",
    "is_nilpotent",
    "is_solvable",
    "nilradical",
    "is_homomorphism",
    "is_isomorphism",
    "is_automorphism",
]
