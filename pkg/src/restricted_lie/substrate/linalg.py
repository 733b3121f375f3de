"""Dense matrices and subspaces over a finite field.

Matrices hold integer-encoded entries (see ``fields``); the heavy lifting
(row reduction, null spaces, inverses, determinants) is delegated to galois
field arrays.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import GuardrailError, ValidationError
from .fields import MAX_SCAN_ORDER, FiniteField, Vector

Rows = tuple[Vector, ...]


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix over a finite field."""

    field: FiniteField
    nrows: int
    ncols: int
    rows: Rows

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise ValidationError(
                f"Matrix rows do not match declared shape {self.nrows}x{self.ncols}"
            )

    @classmethod
    def from_rows(
        cls, field: FiniteField, rows: Iterable[Sequence[int]], ncols: int | None = None
    ) -> Matrix:
        materialized = tuple(
            tuple(field.from_int(v) if v < 0 else v for v in r) for r in rows
        )
        if ncols is None:
            ncols = len(materialized[0]) if materialized else 0
        return cls(field, len(materialized), ncols, materialized)

    @classmethod
    def from_columns(
        cls, field: FiniteField, columns: Sequence[Sequence[int]]
    ) -> Matrix:
        """Matrix whose j-th column is ``columns[j]``."""
        if not columns:
            return cls(field, 0, 0, ())
        return cls.from_rows(field, zip(*columns, strict=True), ncols=len(columns))

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> Matrix:
        return cls(field, n, n, tuple(field.basis_vector(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, field: FiniteField, nrows: int, ncols: int) -> Matrix:
        return cls(field, nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, field: FiniteField, entries: Sequence[int]) -> Matrix:
        n = len(entries)
        rows = ((entries[i] if i == j else 0 for j in range(n)) for i in range(n))
        return cls.from_rows(field, rows, n)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> Rows:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.ncols, self.nrows, self.columns())

    def apply(self, vector: Sequence[int]) -> Vector:
        """Matrix-vector product ``M v``."""
        if len(vector) != self.ncols:
            raise ValidationError(
                f"Dimension mismatch: {self.nrows}x{self.ncols} matrix, "
                f"vector of length {len(vector)}"
            )
        return tuple(self.field.dot(row, vector) for row in self.rows)

    def scale(self, c: int) -> Matrix:
        rows = tuple(self.field.vec_scale(c, r) for r in self.rows)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __add__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        pairs = zip(self.rows, other.rows, strict=True)
        rows = tuple(self.field.vec_add(a, b) for a, b in pairs)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        pairs = zip(self.rows, other.rows, strict=True)
        rows = tuple(self.field.vec_sub(a, b) for a, b in pairs)
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValidationError(
                f"Dimension mismatch: {self.nrows}x{self.ncols} @ "
                f"{other.nrows}x{other.ncols}"
            )
        columns = other.columns()
        rows = tuple(
            tuple(self.field.dot(row, col) for col in columns) for row in self.rows
        )
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def to_galois(self) -> np.ndarray:
        values = np.array(self.rows, dtype=np.int64).reshape(self.nrows, self.ncols)
        return self.field.gf(values)

    @classmethod
    def from_galois(cls, field: FiniteField, array: np.ndarray) -> Matrix:
        values = array.view(np.ndarray).tolist()
        nrows, ncols = array.shape
        return cls(field, nrows, ncols, tuple(tuple(row) for row in values))

    def flat(self) -> Vector:
        return tuple(v for row in self.rows for v in row)

    def _require_same_shape(self, other: Matrix) -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValidationError(
                f"Dimension mismatch: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}"
            )

    def __str__(self) -> str:
        rendered = ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows)
        return f"[{rendered}]"


def _pivot(row: Sequence[int]) -> int | None:
    for index, value in enumerate(row):
        if value:
            return index
    return None


def rref(matrix: Matrix) -> Matrix:
    """Reduced row echelon form (zero rows kept at the bottom)."""
    if matrix.nrows == 0 or matrix.ncols == 0:
        return matrix
    return Matrix.from_galois(matrix.field, matrix.to_galois().row_reduce())


def rank(matrix: Matrix) -> int:
    if matrix.nrows == 0 or matrix.ncols == 0:
        return 0
    return int(np.linalg.matrix_rank(matrix.to_galois()))


def det(matrix: Matrix) -> int:
    if not matrix.is_square:
        raise ValidationError(
            f"Determinant of a non-square {matrix.nrows}x{matrix.ncols} matrix"
        )
    if matrix.nrows == 0:
        return 1
    return int(np.linalg.det(matrix.to_galois()))


def inverse(matrix: Matrix) -> Matrix:
    """Inverse of a square matrix.

    Raises:
        ValidationError: If the matrix is not square or singular
    """
    if not matrix.is_square:
        raise ValidationError(
            f"Inverse of a non-square {matrix.nrows}x{matrix.ncols} matrix"
        )
    if rank(matrix) < matrix.nrows:
        raise ValidationError("Matrix is singular")
    return Matrix.from_galois(matrix.field, np.linalg.inv(matrix.to_galois()))


def matrix_power(matrix: Matrix, e: int) -> Matrix:
    if not matrix.is_square:
        raise ValidationError(
            f"Power of a non-square {matrix.nrows}x{matrix.ncols} matrix"
        )
    if e < 0:
        raise ValidationError(f"Exponent must be nonnegative, got {e}")
    if e == 0 or matrix.nrows == 0:
        return Matrix.identity(matrix.field, matrix.nrows)
    return Matrix.from_galois(
        matrix.field, np.linalg.matrix_power(matrix.to_galois(), e)
    )


def kernel(matrix: Matrix) -> Subspace:
    """Canonical basis of {v : M v = 0}."""
    if matrix.nrows == 0:
        return Subspace.full(matrix.field, matrix.ncols)
    if matrix.ncols == 0:
        return Subspace.zero(matrix.field, 0)
    null = matrix.to_galois().null_space()
    vectors = null.view(np.ndarray).tolist()
    return Subspace.span(matrix.field, matrix.ncols, vectors)


def row_space(matrix: Matrix) -> Subspace:
    return Subspace.span(matrix.field, matrix.ncols, matrix.rows)


def solve(matrix: Matrix, b: Sequence[int]) -> Vector | None:
    """A particular solution of ``M x = b`` (free variables zero), or None."""
    if len(b) != matrix.nrows:
        raise ValidationError(
            f"Dimension mismatch: {matrix.nrows} equations, "
            f"right-hand side of length {len(b)}"
        )
    if matrix.nrows == 0:
        return (0,) * matrix.ncols
    augmented = Matrix(
        matrix.field,
        matrix.nrows,
        matrix.ncols + 1,
        tuple(row + (value,) for row, value in zip(matrix.rows, b, strict=True)),
    )
    solution = [0] * matrix.ncols
    for row in rref(augmented).rows:
        pivot = _pivot(row)
        if pivot is None:
            break
        if pivot == matrix.ncols:
            return None
        solution[pivot] = row[-1]
    return tuple(solution)


def solve_affine(matrix: Matrix, b: Sequence[int]) -> tuple[Vector, Subspace] | None:
    """Full solution set of ``M x = b`` as (particular solution, kernel)."""
    particular = solve(matrix, b)
    if particular is None:
        return None
    return particular, kernel(matrix)


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n held by its reduced row echelon basis."""

    field: FiniteField
    n: int
    basis: Rows

    @classmethod
    def span(
        cls, field: FiniteField, n: int, vectors: Iterable[Sequence[int]]
    ) -> Subspace:
        rows = [tuple(v) for v in vectors]
        if not rows:
            return cls.zero(field, n)
        reduced = rref(Matrix(field, len(rows), n, tuple(rows)))
        return cls(field, n, tuple(r for r in reduced.rows if any(r)))

    @classmethod
    def zero(cls, field: FiniteField, n: int) -> Subspace:
        return cls(field, n, ())

    @classmethod
    def full(cls, field: FiniteField, n: int) -> Subspace:
        return cls(field, n, tuple(field.basis_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(r) or 0 for r in self.basis)

    def reduce(self, vector: Sequence[int]) -> Vector:
        """Remainder of ``vector`` after clearing the pivot columns."""
        field = self.field
        current = tuple(vector)
        for row, pivot in zip(self.basis, self.pivots, strict=True):
            coefficient = current[pivot]
            if coefficient:
                current = field.vec_sub(current, field.vec_scale(coefficient, row))
        return current

    def contains(self, vector: Sequence[int]) -> bool:
        return not any(self.reduce(vector))

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.basis)

    def join(self, other: Subspace) -> Subspace:
        return Subspace.span(self.field, self.n, self.basis + other.basis)

    def annihilator(self) -> Subspace:
        """{u : u . v = 0 for all v in the subspace}."""
        if not self.basis:
            return Subspace.full(self.field, self.n)
        return kernel(self.matrix())

    def intersect(self, other: Subspace) -> Subspace:
        constraints = self.annihilator().basis + other.annihilator().basis
        if not constraints:
            return Subspace.full(self.field, self.n)
        return kernel(Matrix(self.field, len(constraints), self.n, constraints))

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.n, self.basis)

    def elements(self) -> Iterator[Vector]:
        """Every vector of the subspace, in coefficient order.

        Raises:
            GuardrailError: If q^dim exceeds 2^16
        """
        if self.field.q**self.dim > MAX_SCAN_ORDER:
            raise GuardrailError(
                f"Enumerating {self.field.q}^{self.dim} vectors exceeds the bound 2^16"
            )
        for coefficients in itertools.product(self.field.elements(), repeat=self.dim):
            yield self.field.combine(coefficients, self.basis, self.n)

    def __contains__(self, vector: object) -> bool:
        return isinstance(vector, tuple) and self.contains(vector)


def affine_elements(particular: Vector, directions: Subspace) -> Iterator[Vector]:
    """Every point of ``particular + directions``."""
    field = directions.field
    for offset in directions.elements():
        yield field.vec_add(particular, offset)


def all_subspaces(field: FiniteField, n: int) -> Iterator[Subspace]:
    """Every subspace of F_q^n, by dimension then pivot pattern.

    Raises:
        GuardrailError: If q^n exceeds 2^16
    """
    if field.q**n > MAX_SCAN_ORDER:
        raise GuardrailError(
            f"Subspace enumeration of F_{field.q}^{n} exceeds the bound 2^16"
        )
    for dim in range(n + 1):
        for pivots in itertools.combinations(range(n), dim):
            free = [
                (r, c)
                for r, pivot in enumerate(pivots)
                for c in range(pivot + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(field.elements(), repeat=len(free)):
                rows = [[0] * n for _ in range(dim)]
                for r, pivot in enumerate(pivots):
                    rows[r][pivot] = 1
                for (r, c), value in zip(free, values, strict=True):
                    rows[r][c] = value
                yield Subspace(field, n, tuple(tuple(row) for row in rows))
