"""Structural invariants: Jacobi check, center, derived algebra, series, nilradical."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import CheckFailure, ValidationError
from ..logging import get_logger
from ..substrate.fields import Vector
from ..substrate.linalg import Matrix, Subspace, all_subspaces, kernel, rank
from .algebra import LieAlgebra, LieElement

logger = get_logger(__name__)


@dataclass(frozen=True)
class JacobiViolation:
    """A basis triple i < j < k with nonzero Jacobiator.

    ``value`` is ``[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]``.
    """

    indices: tuple[int, int, int]
    value: LieElement

    def oriented(self, i: int, j: int, k: int) -> LieElement:
        """Jacobiator of the triple taken in the order (i, j, k)."""
        if sorted((i, j, k)) != list(self.indices):
            raise ValidationError(
                f"Triple {(i, j, k)} is not a permutation of {self.indices}"
            )
        inversions = sum(1 for a, b in ((i, j), (i, k), (j, k)) if a > b)
        return self.value if inversions % 2 == 0 else -self.value

    def describe(self) -> str:
        names = self.value.algebra.basis_names
        i, j, k = self.indices
        return f"J({names[i]},{names[j]},{names[k]}) = {self.value}"


def jacobiator(algebra: LieAlgebra, a: Vector, b: Vector, c: Vector) -> Vector:
    br = algebra.bracket_vectors
    lie_field = algebra.field
    total = br(a, br(b, c))
    total = lie_field.vec_add(total, br(b, br(c, a)))
    return lie_field.vec_add(total, br(c, br(a, b)))


def check_jacobi(algebra: LieAlgebra) -> list[JacobiViolation]:
    """Every basis triple violating the Jacobi identity (empty when it holds)."""
    n = algebra.dim
    basis = [algebra.structure_basis(i) for i in range(n)]
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                value = jacobiator(algebra, basis[i], basis[j], basis[k])
                if any(value):
                    element = LieElement(algebra, value)
                    violations.append(JacobiViolation((i, j, k), element))
    return violations


def bracket_spaces(algebra: LieAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """span{[u, v] : u in left, v in right}."""
    products = [algebra.bracket_vectors(u, v) for u in left.basis for v in right.basis]
    return Subspace.span(algebra.field, algebra.dim, products)


def center(algebra: LieAlgebra) -> Subspace:
    """Z(L) as the common kernel of ad(e_j)."""
    n = algebra.dim
    rows: list[Vector] = []
    for j in range(n):
        rows.extend(algebra.ad_columns(algebra.structure_basis(j)).rows)
    return kernel(Matrix(algebra.field, len(rows), n, tuple(rows)))


def derived(algebra: LieAlgebra) -> Subspace:
    """[L, L] spanned by all basis brackets."""
    return Subspace.span(
        algebra.field,
        algebra.dim,
        (algebra.structure[i][j] for i in range(algebra.dim) for j in range(i)),
    )


def is_ideal(algebra: LieAlgebra, subspace: Subspace) -> bool:
    return all(
        subspace.contains(algebra.bracket_vectors(algebra.structure_basis(i), v))
        for i in range(algebra.dim)
        for v in subspace.basis
    )


def lower_central_series(
    algebra: LieAlgebra, ideal: Subspace | None = None
) -> list[Subspace]:
    """I, [I, I], [I, [I, I]], ... until the terms stabilize."""
    current = ideal if ideal is not None else Subspace.full(algebra.field, algebra.dim)
    base = current
    series = [current]
    while True:
        following = bracket_spaces(algebra, base, current)
        if following == current:
            return series
        series.append(following)
        current = following


def derived_series(algebra: LieAlgebra) -> list[Subspace]:
    current = Subspace.full(algebra.field, algebra.dim)
    series = [current]
    while True:
        following = bracket_spaces(algebra, current, current)
        if following == current:
            return series
        series.append(following)
        current = following


def is_nilpotent(algebra: LieAlgebra, ideal: Subspace | None = None) -> bool:
    return lower_central_series(algebra, ideal)[-1].dim == 0


def is_solvable(algebra: LieAlgebra) -> bool:
    return derived_series(algebra)[-1].dim == 0


def nilradical(algebra: LieAlgebra) -> Subspace:
    """The unique maximal nilpotent ideal, by exhausting every subspace.

    Raises:
        GuardrailError: If q^n exceeds the subspace enumeration bound
        CheckFailure: If the nilpotent ideals have no unique maximum
    """
    candidates = [
        s
        for s in all_subspaces(algebra.field, algebra.dim)
        if is_ideal(algebra, s) and is_nilpotent(algebra, s)
    ]
    top = max(candidates, key=lambda s: s.dim)
    if not all(s.is_subspace_of(top) for s in candidates):
        raise CheckFailure(f"Nilpotent ideals of {algebra!r} have no unique maximum")
    logger.debug(
        "nilradical computed", algebra=algebra.name, ideals=len(candidates), dim=top.dim
    )
    return top


def is_homomorphism(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> bool:
    """True iff the linear map with columns ``matrix`` preserves brackets."""
    if (matrix.nrows, matrix.ncols) != (target.dim, source.dim):
        return False
    images = matrix.columns()
    for i in range(source.dim):
        for j in range(i + 1, source.dim):
            lhs = matrix.apply(source.structure[i][j])
            if lhs != target.bracket_vectors(images[i], images[j]):
                return False
    return True


def is_isomorphism(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> bool:
    return (
        source.dim == target.dim
        and is_homomorphism(source, target, matrix)
        and rank(matrix) == source.dim
    )


def is_automorphism(algebra: LieAlgebra, matrix: Matrix) -> bool:
    return is_isomorphism(algebra, algebra, matrix)
