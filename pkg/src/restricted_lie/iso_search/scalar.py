"""Conjugacy of matrices up to a nonzero scalar.

Two algebras L = F^3 x| F w, where w acts on the abelian ideal F^3 by A
and B respectively, are isomorphic exactly when A and kB are similar for
some k in F^x. Similarity is decided by invariant factors; the conjugating
matrix is then read off the kernel of P A - k B P.
"""

from __future__ import annotations

import itertools
import random

from ..errors import CheckFailure, ValidationError
from ..logging import get_logger
from ..substrate.fields import MAX_SCAN_ORDER, FieldElement, Vector
from ..substrate.linalg import Matrix, Subspace, kernel, rank
from ..substrate.similarity import is_similar

logger = get_logger(__name__)

_RANDOM_TRIES = 10_000


def _intertwiner_space(a: Matrix, b: Matrix, k: int) -> Subspace:
    """All P (flattened row-major) with P A = k B P."""
    lie_field = a.field
    n = a.nrows
    rows = []
    for r in range(n):
        for c in range(n):
            row = [0] * (n * n)
            for m in range(n):
                row[r * n + m] = lie_field.add(row[r * n + m], a.rows[m][c])
                scaled = lie_field.mul(k, b.rows[r][m])
                row[m * n + c] = lie_field.sub(row[m * n + c], scaled)
            rows.append(tuple(row))
    return kernel(Matrix(lie_field, n * n, n * n, tuple(rows)))


def _as_matrix(a: Matrix, flat: Vector) -> Matrix:
    n = a.nrows
    return Matrix(a.field, n, n, tuple(flat[r * n : (r + 1) * n] for r in range(n)))


def _invertible_member(a: Matrix, space: Subspace) -> Matrix | None:
    lie_field = a.field
    n = a.nrows
    basis = space.basis
    candidates: list[Vector] = list(basis)
    if basis:
        candidates.append(lie_field.combine([1] * len(basis), basis, n * n))
    for flat in candidates:
        matrix = _as_matrix(a, flat)
        if rank(matrix) == n:
            return matrix

    if lie_field.q ** len(basis) <= MAX_SCAN_ORDER:
        for coefficients in itertools.product(lie_field.elements(), repeat=len(basis)):
            matrix = _as_matrix(a, lie_field.combine(coefficients, basis, n * n))
            if rank(matrix) == n:
                return matrix
        return None

    rng = random.Random(0)
    for _ in range(_RANDOM_TRIES):
        coefficients = [rng.randrange(lie_field.q) for _ in basis]
        matrix = _as_matrix(a, lie_field.combine(coefficients, basis, n * n))
        if rank(matrix) == n:
            return matrix
    return None


def conjugate_up_to_scalar(a: Matrix, b: Matrix) -> tuple[Matrix, FieldElement] | None:
    """The first k in F^x (canonical order) with P A P^-1 = k B, and such a P.

    Raises:
        ValidationError: If the matrices are not square of equal size over one field
        CheckFailure: If A and kB are similar but no invertible intertwiner is found
    """
    if not a.is_square or (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValidationError("Scalar conjugacy needs square matrices of equal size")
    if a.field != b.field:
        raise ValidationError(f"Field mismatch: {a.field} vs {b.field}")
    lie_field = a.field
    for k in lie_field.units():
        scaled = b.scale(k)
        if not is_similar(a, scaled):
            continue
        p = _invertible_member(a, _intertwiner_space(a, b, k))
        if p is None:
            raise CheckFailure(
                f"A and {k}B are similar but no invertible intertwiner was found"
            )
        logger.debug("scalar conjugacy found", scalar=k)
        return p, FieldElement(lie_field, k)
    return None
