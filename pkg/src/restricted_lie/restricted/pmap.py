"""p-semilinear maps, the p-map criterion and conjugation by automorphisms.

A p-semilinear map is fixed by the images ``f_j`` of the basis vectors: for
``v = sum a_j e_j`` it sends ``v`` to

    sum_j a_j^p f_j + sum_{r >= 2} sum_i s_i(a_1 e_1 + ... + a_{r-1} e_{r-1}, a_r e_r)

where ``s_i`` are the Jacobson correction terms read off from
``(ad(x T + y))^(p-1)(x)``.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..errors import CheckFailure, NotAnAutomorphismError, ValidationError
from ..lie_core.algebra import LieAlgebra, LieElement, Terms, terms_to_vector
from ..lie_core.structure import is_automorphism, is_isomorphism
from ..logging import get_logger
from ..substrate.fields import FiniteField, Vector
from ..substrate.linalg import Matrix, inverse, matrix_power
from ..substrate.vecpoly import VecPoly

logger = get_logger(__name__)


def s_vectors(algebra: LieAlgebra, x0: Vector, x1: Vector) -> tuple[Vector, ...]:
    """Coordinates of s_1(x0, x1), ..., s_{p-1}(x0, x1)."""
    lie_field = algebra.field
    p = lie_field.p
    if not any(x0) or not any(x1):
        return ((0,) * algebra.dim,) * (p - 1)

    def ad0(v: Vector) -> Vector:
        return algebra.bracket_vectors(x0, v)

    def ad1(v: Vector) -> Vector:
        return algebra.bracket_vectors(x1, v)

    current = VecPoly.constant(lie_field, x0)
    for _ in range(p - 1):
        current = current.map(ad0).shift() + current.map(ad1)
        if current.is_zero:
            break
    return tuple(
        lie_field.vec_scale(
            lie_field.inv(lie_field.from_int(i)), current.coefficient(i - 1)
        )
        for i in range(1, p)
    )


def s_terms(x0: LieElement, x1: LieElement) -> tuple[LieElement, ...]:
    """The Jacobson terms s_i(x0, x1) for i = 1..p-1."""
    x0._same(x1)
    algebra = x0.algebra
    vectors = s_vectors(algebra, x0.coordinates, x1.coordinates)
    return tuple(LieElement(algebra, v) for v in vectors)


def jacobson_sum(u: LieElement, v: LieElement) -> LieElement:
    """sum_i s_i(u, v), the correction in (u + v)^[p] = u^[p] + v^[p] + ..."""
    u._same(v)
    algebra = u.algebra
    terms = s_vectors(algebra, u.coordinates, v.coordinates)
    total = algebra.field.combine([1] * len(terms), terms, algebra.dim)
    return LieElement(algebra, total)


@dataclass(frozen=True)
class PSemilinearMap:
    """The p-semilinear self-map of ``algebra`` sending ``e_j`` to ``images[j]``."""

    algebra: LieAlgebra
    images: tuple[Vector, ...]

    def __post_init__(self) -> None:
        n = self.algebra.dim
        if len(self.images) != n or any(len(f) != n for f in self.images):
            raise ValidationError(
                f"A p-semilinear map on a dim-{n} algebra needs {n} images"
            )

    @classmethod
    def zero(cls, algebra: LieAlgebra) -> PSemilinearMap:
        return cls(algebra, ((0,) * algebra.dim,) * algebra.dim)

    @classmethod
    def from_images(
        cls, algebra: LieAlgebra, images: Mapping[str, Terms | Vector | LieElement]
    ) -> PSemilinearMap:
        """Build from ``{basis name: image}``; unlisted basis vectors map to 0."""
        vectors = [(0,) * algebra.dim for _ in range(algebra.dim)]
        for name, image in images.items():
            if isinstance(image, LieElement):
                vector = image.coordinates
            elif isinstance(image, Mapping):
                vector = terms_to_vector(algebra.field, algebra.basis_names, image)
            else:
                vector = tuple(image)
            vectors[algebra.index(name)] = vector
        return cls(algebra, tuple(vectors))

    @property
    def field(self) -> FiniteField:
        return self.algebra.field

    def image(self, which: int | str) -> LieElement:
        index = self.algebra.index(which) if isinstance(which, str) else which
        return LieElement(self.algebra, self.images[index])

    def evaluate_vector(
        self, v: Sequence[int], order: Sequence[int] | None = None
    ) -> Vector:
        """Coordinates of v^[p], summing the corrections in basis ``order``."""
        algebra = self.algebra
        lie_field = algebra.field
        n = algebra.dim
        sequence = range(n) if order is None else order
        coefficients = [lie_field.frobenius(a) for a in v]
        result = lie_field.combine(coefficients, self.images, n)
        partial: Vector | None = None
        for index in sequence:
            a = v[index]
            if not a:
                continue
            term = lie_field.vec_scale(a, algebra.structure_basis(index))
            if partial is None:
                partial = term
                continue
            corrections = s_vectors(algebra, partial, term)
            result = lie_field.combine(
                [1] * (len(corrections) + 1), (result, *corrections), n
            )
            partial = lie_field.vec_add(partial, term)
        return result

    def __call__(self, v: LieElement) -> LieElement:
        return evaluate(self, v)

    def lift(self, target: FiniteField) -> PSemilinearMap:
        return PSemilinearMap(self.algebra.lift(target), self.images)

    def on(self, algebra: LieAlgebra) -> PSemilinearMap:
        """The same images read in another algebra of the same dimension."""
        return PSemilinearMap(algebra, self.images)

    @property
    def is_zero(self) -> bool:
        return not any(any(f) for f in self.images)

    def format(self) -> str:
        """``pmap`` lines of the algebra file format (zero images omitted)."""
        names = self.algebra.basis_names
        return "\n".join(
            f"pmap {names[j]} = {self.algebra.format_vector(f)}"
            for j, f in enumerate(self.images)
            if any(f)
        )

    def describe(self) -> str:
        names = self.algebra.basis_names
        parts = [
            f"{names[j]} -> {self.algebra.format_vector(f)}"
            for j, f in enumerate(self.images)
            if any(f)
        ]
        return ", ".join(parts) if parts else "trivial"


def evaluate(
    pmap: PSemilinearMap, v: LieElement, order: Sequence[int] | None = None
) -> LieElement:
    """v^[p] under the p-semilinear map.

    Args:
        pmap: The map, given by basis images
        v: Element of the map's algebra
        order: Basis permutation in which the telescoping corrections are
            summed; the result does not depend on it
    """
    if v.algebra != pmap.algebra:
        raise ValidationError("Element and map belong to different algebras")
    if order is not None and sorted(order) != list(range(pmap.algebra.dim)):
        raise ValidationError(
            f"{tuple(order)} is not a permutation of the basis indices"
        )
    return LieElement(pmap.algebra, pmap.evaluate_vector(v.coordinates, order))


def order_independent(pmap: PSemilinearMap, v: Sequence[int]) -> bool:
    """True iff every basis order gives the same value for v^[p]."""
    reference = pmap.evaluate_vector(v)
    return all(
        pmap.evaluate_vector(v, order) == reference
        for order in itertools.permutations(range(pmap.algebra.dim))
    )


def p_power_matrices(algebra: LieAlgebra) -> tuple[Matrix, ...]:
    """(ad e_j)^p for every basis vector."""
    p = algebra.p
    return tuple(
        matrix_power(algebra.ad_columns(algebra.structure_basis(j)), p)
        for j in range(algebra.dim)
    )


def is_p_map(algebra: LieAlgebra, pmap: PSemilinearMap) -> bool:
    """True iff ad f_j = (ad e_j)^p for every basis vector e_j."""
    if pmap.algebra != algebra:
        return False
    powers = p_power_matrices(algebra)
    return all(
        algebra.ad_columns(f) == power
        for f, power in zip(pmap.images, powers, strict=True)
    )


@dataclass(frozen=True)
class RestrictedLieAlgebra:
    """A Lie algebra together with a verified p-map."""

    algebra: LieAlgebra
    pmap: PSemilinearMap
    debug_checks: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not is_p_map(self.algebra, self.pmap):
            raise ValidationError(
                f"{self.pmap.describe()} is not a p-map on {self.algebra!r}"
            )

    @property
    def field(self) -> FiniteField:
        return self.algebra.field

    @property
    def name(self) -> str:
        return self.algebra.name

    def p_power(self, v: Sequence[int], times: int = 1) -> Vector:
        """Coordinates of v^{[p]^times}."""
        current = tuple(v)
        for _ in range(times):
            if self.debug_checks and not order_independent(self.pmap, current):
                raise CheckFailure(
                    f"p-th power of {current} depends on the summation order"
                )
            current = self.pmap.evaluate_vector(current)
        return current

    def lift(self, target: FiniteField) -> RestrictedLieAlgebra:
        return RestrictedLieAlgebra(
            self.algebra.lift(target), self.pmap.lift(target), self.debug_checks
        )

    def with_pmap(self, pmap: PSemilinearMap) -> RestrictedLieAlgebra:
        return RestrictedLieAlgebra(self.algebra, pmap, self.debug_checks)

    def __repr__(self) -> str:
        return f"{self.algebra!r}[{self.pmap.describe()}]"


def transport(pmap: PSemilinearMap, phi: Matrix, target: LieAlgebra) -> PSemilinearMap:
    """phi o [p] o phi^-1 for an isomorphism ``phi`` onto ``target``.

    Raises:
        NotAnAutomorphismError: If ``phi`` is not a Lie algebra isomorphism
    """
    if not is_isomorphism(pmap.algebra, target, phi):
        raise NotAnAutomorphismError(
            f"Matrix is not an isomorphism {pmap.algebra!r} -> {target!r}"
        )
    phi_inverse = inverse(phi)
    images = tuple(
        phi.apply(pmap.evaluate_vector(phi_inverse.column(j)))
        for j in range(target.dim)
    )
    return PSemilinearMap(target, images)


def conjugate(pmap: PSemilinearMap, phi: Matrix) -> PSemilinearMap:
    """phi o [p] o phi^-1 for an automorphism ``phi`` of the map's algebra.

    Raises:
        NotAnAutomorphismError: If ``phi`` does not preserve brackets or is singular
    """
    if not is_automorphism(pmap.algebra, phi):
        raise NotAnAutomorphismError(
            f"Matrix is not an automorphism of {pmap.algebra!r}"
        )
    return transport(pmap, phi, pmap.algebra)
