"""Solving for and enumerating the p-maps of a Lie algebra."""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from ..errors import GuardrailError
from ..lie_core.algebra import LieAlgebra
from ..lie_core.structure import center
from ..logging import get_logger
from ..substrate.fields import MAX_FIELD_ORDER, Vector
from ..substrate.linalg import Matrix, Subspace, solve_affine
from .pmap import PSemilinearMap, p_power_matrices

logger = get_logger(__name__)


@dataclass(frozen=True)
class PMapFamily:
    """Every p-map on an algebra: ``particular`` plus center-valued perturbations.

    For each j the solutions of ad f = (ad e_j)^p form the coset
    ``particular.images[j] + center``; ``unsolvable`` lists the basis indices
    whose system has no solution, in which case ``particular`` is None.
    """

    algebra: LieAlgebra
    particular: PSemilinearMap | None
    center: Subspace
    unsolvable: tuple[int, ...] = ()

    @property
    def exists(self) -> bool:
        return self.particular is not None

    @property
    def free_parameters(self) -> int:
        return self.algebra.dim * self.center.dim if self.exists else 0

    @property
    def count(self) -> int:
        """Number of p-maps over the algebra's field."""
        return self.algebra.field.q**self.free_parameters if self.exists else 0

    def contains(self, pmap: PSemilinearMap) -> bool:
        if self.particular is None or pmap.algebra != self.algebra:
            return False
        lie_field = self.algebra.field
        return all(
            self.center.contains(lie_field.vec_sub(f, g))
            for f, g in zip(pmap.images, self.particular.images, strict=True)
        )

    def describe(self) -> str:
        if self.particular is None:
            names = self.algebra.basis_names
            missing = ", ".join(names[j] for j in self.unsolvable)
            return f"none (no solution for {missing})"
        if self.center.dim == 0:
            return f"unique: {self.particular.describe()}"
        return (
            f"{self.particular.describe()} + center-valued images "
            f"(dim Z = {self.center.dim}, {self.free_parameters} free coefficients)"
        )


def _ad_system(algebra: LieAlgebra) -> Matrix:
    """n^2 x n matrix whose column i is ad(e_i) flattened."""
    n = algebra.dim
    columns = [algebra.ad_columns(algebra.structure_basis(i)).flat() for i in range(n)]
    return Matrix.from_columns(algebra.field, columns)


def solve_pmaps(algebra: LieAlgebra) -> PMapFamily:
    """Solve ad f_j = (ad e_j)^p for every basis vector."""
    system = _ad_system(algebra)
    images: list[Vector] = []
    unsolvable: list[int] = []
    kernel_space: Subspace | None = None
    for j, power in enumerate(p_power_matrices(algebra)):
        solution = solve_affine(system, power.flat())
        if solution is None:
            unsolvable.append(j)
            continue
        particular, kernel_space = solution
        images.append(particular)

    center_space = kernel_space if kernel_space is not None else center(algebra)
    if unsolvable:
        logger.debug(
            "no p-map",
            algebra=algebra.name,
            unsolvable=[algebra.basis_names[j] for j in unsolvable],
        )
        return PMapFamily(algebra, None, center_space, tuple(unsolvable))
    family = PMapFamily(algebra, PSemilinearMap(algebra, tuple(images)), center_space)
    logger.debug("p-maps solved", algebra=algebra.name, center_dim=center_space.dim)
    return family


def enumerate_pmaps(
    algebra: LieAlgebra, family: PMapFamily | None = None
) -> Iterator[PSemilinearMap]:
    """Every p-map on the algebra over its field of definition.

    Raises:
        GuardrailError: If q^(n * dim Z) exceeds 2^20
    """
    family = family if family is not None else solve_pmaps(algebra)
    if family.particular is None:
        return
    lie_field = algebra.field
    if lie_field.q**family.free_parameters > MAX_FIELD_ORDER:
        raise GuardrailError(
            f"Enumerating {lie_field.q}^{family.free_parameters} p-maps exceeds "
            "the bound 2^20; use --solve for the family description instead"
        )
    offsets = list(family.center.elements())
    base = family.particular.images
    for choice in itertools.product(offsets, repeat=algebra.dim):
        yield PSemilinearMap(
            algebra,
            tuple(lie_field.vec_add(f, z) for f, z in zip(base, choice, strict=True)),
        )
