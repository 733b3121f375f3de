"""Exact arithmetic: finite fields, matrices, subspaces and polynomials."""

from .fields import (
    ExtensionField,
    FieldElement,
    FiniteField,
    PrimeField,
    field_make,
    field_of_order,
    is_quadratic_residue,
    nth_root,
    primitive_root_mod,
    pth_root,
    quadratic_residues,
)
from .linalg import (
    Matrix,
    Subspace,
    all_subspaces,
    det,
    inverse,
    kernel,
    matrix_power,
    rank,
    row_space,
    rref,
    solve,
    solve_affine,
)
from .mpoly import RatMPoly
from .similarity import invariant_factors, is_similar
from .vecpoly import VecPoly

__all__ = [
    "FiniteField",
    "PrimeField",
    "ExtensionField",
    "FieldElement",
    "field_make",
    "field_of_order",
    "pth_root",
    "nth_root",
    "is_quadratic_residue",
    "quadratic_residues",
    "primitive_root_mod",
    "Matrix",
    "Subspace",
    "rref",
    "kernel",
    "row_space",
    "solve",
    "solve_affine",
    "matrix_power",
    "inverse",
    "det",
    "rank",
    "all_subspaces",
    "invariant_factors",
    "is_similar",
    "VecPoly",
    "RatMPoly",
]
