"""Lie algebras given by structure constants over a finite field."""

from __future__ import annotations

import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from ..errors import ValidationError
from ..substrate.fields import ExtensionField, FieldElement, FiniteField, Vector
from ..substrate.linalg import Matrix

MAX_DIM = 8
NAME_PATTERN = r"[A-Za-z][A-Za-z0-9_]*"

Coefficient = int | FieldElement
Terms = Mapping[str, Coefficient]
Structure = tuple[tuple[Vector, ...], ...]


def embed_coefficient(lie_field: FiniteField, value: Coefficient) -> int:
    """Field encoding of a coefficient; plain ints embed through Z -> F_p."""
    if isinstance(value, FieldElement):
        if value.field != lie_field:
            raise ValidationError(f"Field mismatch: {value.field} vs {lie_field}")
        return value.value
    return lie_field.from_int(value)


def terms_to_vector(
    lie_field: FiniteField, names: Sequence[str], terms: Terms
) -> Vector:
    coordinates = [0] * len(names)
    for name, value in terms.items():
        if name not in names:
            raise ValidationError(f"Unknown basis name '{name}'")
        index = names.index(name)
        coordinates[index] = lie_field.add(
            coordinates[index], embed_coefficient(lie_field, value)
        )
    return tuple(coordinates)


def format_coefficient(lie_field: FiniteField, value: int) -> str:
    """Render an element in the algebra-file grammar (ints or ``g^e``)."""
    if value < lie_field.p or not isinstance(lie_field, ExtensionField):
        return str(value)
    return f"g^{lie_field.log(value)}"


def format_combination(
    lie_field: FiniteField, names: Sequence[str], vector: Vector
) -> str:
    parts = []
    for name, value in zip(names, vector, strict=True):
        if not value:
            continue
        if value == 1:
            parts.append(name)
        else:
            parts.append(f"{format_coefficient(lie_field, value)}*{name}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra with ``structure[i][j]`` the coordinates of ``[e_i, e_j]``.

    The structure tensor must be antisymmetric; the Jacobi identity is not
    assumed (see ``check_jacobi``).
    """

    field: FiniteField
    basis_names: tuple[str, ...]
    structure: Structure
    name: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        n = len(self.basis_names)
        if not 1 <= n <= MAX_DIM:
            raise ValidationError(f"Dimension must be between 1 and {MAX_DIM}, got {n}")
        if len(set(self.basis_names)) != n:
            joined = " ".join(self.basis_names)
            raise ValidationError(f"Duplicate basis names: {joined}")
        for basis_name in self.basis_names:
            if not re.fullmatch(NAME_PATTERN, basis_name) or basis_name == "g":
                raise ValidationError(f"Invalid basis name '{basis_name}'")
        if len(self.structure) != n or any(
            len(row) != n or any(len(v) != n for v in row) for row in self.structure
        ):
            raise ValidationError(f"Structure tensor is not {n}x{n}x{n}")
        for i in range(n):
            if any(self.structure[i][i]):
                name = self.basis_names[i]
                raise ValidationError(f"[{name},{name}] != 0")
            for j in range(i + 1, n):
                if self.structure[i][j] != self.field.vec_neg(self.structure[j][i]):
                    raise ValidationError(
                        f"Structure is not antisymmetric at "
                        f"({self.basis_names[i]},{self.basis_names[j]})"
                    )

    @classmethod
    def from_brackets(
        cls,
        lie_field: FiniteField,
        basis_names: Sequence[str],
        brackets: Mapping[tuple[str, str], Terms | Vector],
        name: str = "",
    ) -> LieAlgebra:
        """Build from declared brackets ``{(a, b): [a, b]}``; the rest is zero.

        Each pair may be declared in one orientation only; the other is filled
        in by antisymmetry.
        """
        names = tuple(basis_names)
        n = len(names)
        table = [[(0,) * n for _ in range(n)] for _ in range(n)]
        declared: set[tuple[int, int]] = set()
        for (a, b), value in brackets.items():
            if a not in names or b not in names:
                raise ValidationError(f"Unknown basis name in [{a},{b}]")
            i, j = names.index(a), names.index(b)
            if i == j:
                raise ValidationError(
                    f"Bracket [{a},{b}] of a basis vector with itself"
                )
            if (i, j) in declared or (j, i) in declared:
                raise ValidationError(f"Duplicate bracket declaration [{a},{b}]")
            declared.add((i, j))
            if isinstance(value, Mapping):
                vector = terms_to_vector(lie_field, names, value)
            else:
                vector = tuple(value)
            table[i][j] = vector
            table[j][i] = lie_field.vec_neg(vector)
        return cls(lie_field, names, tuple(tuple(row) for row in table), name)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def p(self) -> int:
        return self.field.p

    def index(self, basis_name: str) -> int:
        try:
            return self.basis_names.index(basis_name)
        except ValueError as e:
            raise ValidationError(f"Unknown basis name '{basis_name}'") from e

    def element(self, coordinates: Sequence[Coefficient]) -> LieElement:
        embedded = tuple(embed_coefficient(self.field, c) for c in coordinates)
        return LieElement(self, embedded)

    def basis_element(self, which: int | str) -> LieElement:
        index = self.index(which) if isinstance(which, str) else which
        return LieElement(self, self.field.basis_vector(self.dim, index))

    def combination(self, terms: Terms) -> LieElement:
        return LieElement(self, terms_to_vector(self.field, self.basis_names, terms))

    def zero(self) -> LieElement:
        return LieElement(self, (0,) * self.dim)

    def basis(self) -> tuple[LieElement, ...]:
        return tuple(self.basis_element(i) for i in range(self.dim))

    def bracket_vectors(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        """Coordinates of ``[u, v]``."""
        lie_field = self.field
        coefficients: list[int] = []
        vectors: list[Vector] = []
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.structure[i]
            for j, b in enumerate(v):
                if b and any(row[j]):
                    coefficients.append(lie_field.mul(a, b))
                    vectors.append(row[j])
        return lie_field.combine(coefficients, vectors, self.dim)

    def ad_columns(self, u: Sequence[int]) -> Matrix:
        """Matrix of ad(u) in the basis; column j is ``[u, e_j]``."""
        columns = [
            self.bracket_vectors(u, self.structure_basis(j)) for j in range(self.dim)
        ]
        return Matrix.from_columns(self.field, columns)

    def structure_basis(self, j: int) -> Vector:
        return self.field.basis_vector(self.dim, j)

    def relations(self) -> Iterator[tuple[int, int, Vector]]:
        """Nonzero brackets ``[e_i, e_j]`` with i > j (later basis name first)."""
        for i in range(self.dim):
            for j in range(i):
                if any(self.structure[i][j]):
                    yield i, j, self.structure[i][j]

    def lift(self, target: FiniteField) -> LieAlgebra:
        """The same structure constants over an extension of the prime field."""
        if target == self.field:
            return self
        if target.p != self.field.p or not self.field.is_prime_field:
            raise ValidationError(
                f"Cannot lift an algebra over {self.field} to {target}"
            )
        return LieAlgebra(target, self.basis_names, self.structure, self.name)

    def with_name(self, name: str) -> LieAlgebra:
        return LieAlgebra(self.field, self.basis_names, self.structure, name)

    def format_vector(self, vector: Vector) -> str:
        return format_combination(self.field, self.basis_names, vector)

    def __repr__(self) -> str:
        label = self.name or "LieAlgebra"
        return f"{label}<{self.field!r}, dim={self.dim}>"


@dataclass(frozen=True)
class LieElement:
    """An element of a Lie algebra by its coordinates in the basis."""

    algebra: LieAlgebra
    coordinates: Vector

    def __post_init__(self) -> None:
        if len(self.coordinates) != self.algebra.dim:
            raise ValidationError(
                f"Element has {len(self.coordinates)} coordinates, "
                f"algebra dim is {self.algebra.dim}"
            )

    def _same(self, other: LieElement) -> None:
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise ValidationError("Elements belong to different algebras")

    def __add__(self, other: LieElement) -> LieElement:
        self._same(other)
        lie_field = self.algebra.field
        total = lie_field.vec_add(self.coordinates, other.coordinates)
        return LieElement(self.algebra, total)

    def __sub__(self, other: LieElement) -> LieElement:
        self._same(other)
        lie_field = self.algebra.field
        difference = lie_field.vec_sub(self.coordinates, other.coordinates)
        return LieElement(self.algebra, difference)

    def __neg__(self) -> LieElement:
        return LieElement(self.algebra, self.algebra.field.vec_neg(self.coordinates))

    def __rmul__(self, scalar: Any) -> LieElement:
        if not isinstance(scalar, int | FieldElement):
            return NotImplemented
        lie_field = self.algebra.field
        c = embed_coefficient(lie_field, scalar)
        return LieElement(self.algebra, lie_field.vec_scale(c, self.coordinates))

    @property
    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def __str__(self) -> str:
        return self.algebra.format_vector(self.coordinates)


def bracket(u: LieElement, v: LieElement) -> LieElement:
    """Bilinear extension of the structure tensor."""
    u._same(v)
    value = u.algebra.bracket_vectors(u.coordinates, v.coordinates)
    return LieElement(u.algebra, value)


def ad_matrix(u: LieElement) -> Matrix:
    """Matrix of ad(u): column j holds the coordinates of ``[u, e_j]``."""
    return u.algebra.ad_columns(u.coordinates)
