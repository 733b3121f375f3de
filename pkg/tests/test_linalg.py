"""Tests for matrices, subspaces and similarity over finite fields."""

import pytest

from restricted_lie.errors import GuardrailError, ValidationError
from restricted_lie.substrate.fields import field_make
from restricted_lie.substrate.linalg import (
    Matrix,
    Subspace,
    all_subspaces,
    det,
    inverse,
    kernel,
    matrix_power,
    rank,
    rref,
    solve,
    solve_affine,
)
from restricted_lie.substrate.similarity import invariant_factors, is_similar

# Matrix tests


def test_from_rows_embeds_negatives(f5):
    """Test negative entries are reduced into the field."""
    m = Matrix.from_rows(f5, [[1, -1], [-2, 0]])
    assert m.rows == ((1, 4), (3, 0))


def test_columns_are_images(f3):
    """Test from_columns places each vector in a column."""
    m = Matrix.from_columns(f3, [(1, 2), (0, 1)])
    assert m.rows == ((1, 0), (2, 1))
    assert m.column(0) == (1, 2)
    assert m.apply((1, 1)) == (1, 0)


def test_shape_mismatch(f3):
    """Test products of incompatible shapes fail."""
    with pytest.raises(ValidationError, match="Dimension mismatch"):
        Matrix.identity(f3, 2) @ Matrix.identity(f3, 3)

    with pytest.raises(ValidationError, match="declared shape"):
        Matrix(f3, 2, 2, ((1, 0),))


def test_fibonacci_power(f5):
    """Test the fifth power of the Fibonacci matrix over F_5."""
    fib = Matrix.from_rows(f5, [[1, 1], [1, 0]])
    assert matrix_power(fib, 5) == Matrix.from_rows(f5, [[3, 0], [0, 3]])
    assert matrix_power(fib, 0) == Matrix.identity(f5, 2)

    with pytest.raises(ValidationError, match="nonnegative"):
        matrix_power(fib, -1)


def test_det_and_inverse(f5):
    """Test determinant and inverse agree with the identity."""
    m = Matrix.from_rows(f5, [[1, 2], [3, 4]])
    assert det(m) == 3
    assert m @ inverse(m) == Matrix.identity(f5, 2)


def test_inverse_of_singular_matrix(f3):
    """Test inverting a singular matrix fails."""
    with pytest.raises(ValidationError, match="Matrix is singular"):
        inverse(Matrix.from_rows(f3, [[1, 2], [2, 1]]))


def test_extension_field_arithmetic(f4):
    """Test products over F_4 use field multiplication."""
    m = Matrix.diagonal(f4, [2, 3])
    assert (m @ m).rows == ((3, 0), (0, 2))
    assert m @ inverse(m) == Matrix.identity(f4, 2)


# Elimination tests


def test_rref_is_idempotent(f5):
    """Test row reduction of a reduced matrix is unchanged."""
    m = Matrix.from_rows(f5, [[2, 4, 1], [1, 2, 3], [0, 0, 1]])
    reduced = rref(m)
    assert rref(reduced) == reduced


@pytest.mark.parametrize(
    "rows,expected_rank",
    [
        ([[1, 2, 0], [2, 4, 0]], 1),
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[0, 0, 0], [0, 0, 0]], 0),
    ],
)
def test_rank_nullity(f5, rows, expected_rank):
    """Test rank plus nullity equals the column count."""
    m = Matrix.from_rows(f5, rows)
    assert rank(m) == expected_rank
    assert rank(m) + kernel(m).dim == m.ncols


def test_kernel_of_zero_map_is_everything(f3):
    """Test the zero map kills the whole space."""
    assert kernel(Matrix.zeros(f3, 4, 4)) == Subspace.full(f3, 4)


def test_kernel_vectors_are_killed(f5):
    """Test every kernel basis vector maps to zero."""
    m = Matrix.from_rows(f5, [[1, 2, 3, 4], [2, 4, 1, 3]])
    for v in kernel(m).basis:
        assert m.apply(v) == (0, 0)


def test_solve(f3):
    """Test particular solutions and inconsistent systems."""
    m = Matrix.from_rows(f3, [[1, 1], [0, 0]])
    assert solve(m, (1, 0)) == (1, 0)
    assert solve(m, (1, 1)) is None


def test_solve_affine(f3):
    """Test the solution set is particular solution plus kernel."""
    m = Matrix.from_rows(f3, [[1, 1, 0]])
    particular, directions = solve_affine(m, (2,))
    assert m.apply(particular) == (2,)
    assert directions.dim == 2


# Subspace tests


def test_subspace_lattice(f3):
    """Test intersection and join of coordinate planes."""
    first = Subspace.span(f3, 3, [(1, 0, 0), (0, 1, 0)])
    second = Subspace.span(f3, 3, [(0, 1, 0), (0, 0, 1)])
    assert first.intersect(second) == Subspace.span(f3, 3, [(0, 1, 0)])
    assert first.join(second) == Subspace.full(f3, 3)
    assert (0, 1, 0) in first
    assert (0, 0, 1) not in first


def test_annihilator(f2):
    """Test the annihilator of a line in F_2^3."""
    line = Subspace.span(f2, 3, [(1, 1, 0)])
    assert line.annihilator() == Subspace.span(f2, 3, [(1, 1, 0), (0, 0, 1)])
    assert line.is_subspace_of(line.annihilator())


def test_span_is_canonical(f5):
    """Test different spanning sets give equal subspaces."""
    assert Subspace.span(f5, 2, [(1, 1), (2, 2)]) == Subspace.span(f5, 2, [(3, 3)])


def test_elements(f3):
    """Test a line over F_3 has three vectors."""
    line = Subspace.span(f3, 2, [(1, 1)])
    assert sorted(line.elements()) == [(0, 0), (1, 1), (2, 2)]


@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 16)])
def test_all_subspaces_count(f2, n, count):
    """Test the number of subspaces of F_2^n."""
    assert len(list(all_subspaces(f2, n))) == count


def test_all_subspaces_guardrail():
    """Test subspace enumeration refuses large spaces."""
    with pytest.raises(GuardrailError, match="exceeds the bound 2\\^16"):
        list(all_subspaces(field_make(5), 7))


# Similarity tests


def test_invariant_factors(f5):
    """Test invariant factors of diagonal and Jordan matrices."""
    assert invariant_factors(Matrix.identity(f5, 2)) == ((1, 4), (1, 4))
    assert invariant_factors(Matrix.diagonal(f5, [1, 2])) == ((1, 2, 2),)
    jordan = Matrix.from_rows(f5, [[1, 0], [1, 1]])
    assert invariant_factors(jordan) == ((1, 3, 1),)


def test_is_similar(f5):
    """Test similarity ignores the order of eigenvalues."""
    assert is_similar(Matrix.diagonal(f5, [1, 2]), Matrix.diagonal(f5, [2, 1]))
    jordan = Matrix.from_rows(f5, [[1, 0], [1, 1]])
    assert not is_similar(jordan, Matrix.identity(f5, 2))


def test_is_similar_shape_mismatch(f5):
    """Test matrices of different shapes are refused."""
    with pytest.raises(ValidationError, match="equal shape"):
        is_similar(Matrix.identity(f5, 2), Matrix.identity(f5, 3))
