"""Matrix similarity over F_q through the invariant factors of xI - A."""

from __future__ import annotations

import galois
import numpy as np

from ..errors import ValidationError
from .fields import FiniteField
from .linalg import Matrix

PolyMatrix = list[list[galois.Poly]]


def _is_zero(poly: galois.Poly) -> bool:
    return not np.any(poly.coeffs)


def _constant(field: FiniteField, value: int) -> galois.Poly:
    return galois.Poly([value], field=field.gf)


def _monic(field: FiniteField, poly: galois.Poly) -> galois.Poly:
    lead = int(poly.coeffs[0])
    return poly * _constant(field, field.inv(lead))


def characteristic_matrix(matrix: Matrix) -> PolyMatrix:
    """xI - A as a matrix of polynomials."""
    field = matrix.field
    result: PolyMatrix = []
    for i, row in enumerate(matrix.rows):
        entries = []
        for j, value in enumerate(row):
            if i == j:
                entries.append(galois.Poly([1, field.neg(value)], field=field.gf))
            else:
                entries.append(_constant(field, field.neg(value)))
        result.append(entries)
    return result


def _min_degree_entry(m: PolyMatrix, t: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_degree = -1
    n = len(m)
    for i in range(t, n):
        for j in range(t, n):
            if _is_zero(m[i][j]):
                continue
            if best is None or m[i][j].degree < best_degree:
                best, best_degree = (i, j), m[i][j].degree
    return best


def invariant_factors(matrix: Matrix) -> tuple[tuple[int, ...], ...]:
    """Non-unit invariant factors of xI - A as monic coefficient tuples.

    Diagonalizes xI - A over F_q[x] by Euclidean row and column operations
    (Smith normal form); two matrices are similar exactly when these agree.
    """
    if not matrix.is_square:
        raise ValidationError("Invariant factors need a square matrix")
    field = matrix.field
    m = characteristic_matrix(matrix)
    n = matrix.nrows

    for t in range(n):
        while True:
            position = _min_degree_entry(m, t)
            if position is None:
                break
            i, j = position
            m[t], m[i] = m[i], m[t]
            for row in m:
                row[t], row[j] = row[j], row[t]
            pivot = m[t][t]

            clean = True
            for i in range(t + 1, n):
                quotient, remainder = divmod(m[i][t], pivot)
                if not _is_zero(quotient):
                    m[i] = [a - quotient * b for a, b in zip(m[i], m[t], strict=True)]
                if not _is_zero(remainder):
                    clean = False
            for j in range(t + 1, n):
                quotient, remainder = divmod(m[t][j], pivot)
                if not _is_zero(quotient):
                    for row in m:
                        row[j] = row[j] - quotient * row[t]
                if not _is_zero(remainder):
                    clean = False
            if not clean:
                continue

            # pivot must divide the remaining block
            offender = next(
                (
                    i
                    for i in range(t + 1, n)
                    for j in range(t + 1, n)
                    if not _is_zero(m[i][j] % pivot)
                ),
                None,
            )
            if offender is None:
                break
            m[t] = [a + b for a, b in zip(m[t], m[offender], strict=True)]

    factors = []
    for t in range(n):
        entry = m[t][t]
        if _is_zero(entry) or entry.degree == 0:
            continue
        monic = _monic(field, entry)
        factors.append(tuple(int(c) for c in monic.coeffs))
    return tuple(sorted(factors, key=lambda f: (len(f), f)))


def is_similar(a: Matrix, b: Matrix) -> bool:
    """True iff P A P^-1 = B for some invertible P."""
    if (a.nrows, a.ncols) != (b.nrows, b.ncols):
        raise ValidationError("Similarity test needs matrices of equal shape")
    if a.field != b.field:
        raise ValidationError(f"Field mismatch: {a.field} vs {b.field}")
    return invariant_factors(a) == invariant_factors(b)
