"""Polynomials in T whose coefficients are vectors (elements of L[T])."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from ..errors import ValidationError
from .fields import FiniteField, Vector


@dataclass(frozen=True)
class VecPoly:
    """Sum of ``coefficients[i] * T^i``; trailing zero coefficients are trimmed."""

    field: FiniteField
    dim: int
    coefficients: tuple[Vector, ...]

    def __post_init__(self) -> None:
        coefficients = self.coefficients
        while coefficients and not any(coefficients[-1]):
            coefficients = coefficients[:-1]
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def constant(cls, field: FiniteField, vector: Sequence[int]) -> VecPoly:
        return cls(field, len(vector), (tuple(vector),))

    @classmethod
    def monomial(
        cls, field: FiniteField, vector: Sequence[int], degree: int
    ) -> VecPoly:
        zero = (0,) * len(vector)
        return cls(field, len(vector), (zero,) * degree + (tuple(vector),))

    @property
    def degree(self) -> int:
        """Degree in T; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, i: int) -> Vector:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return (0,) * self.dim

    def __add__(self, other: VecPoly) -> VecPoly:
        if other.dim != self.dim:
            raise ValidationError(f"Dimension mismatch: {self.dim} vs {other.dim}")
        length = max(len(self.coefficients), len(other.coefficients))
        return VecPoly(
            self.field,
            self.dim,
            tuple(
                self.field.vec_add(self.coefficient(i), other.coefficient(i))
                for i in range(length)
            ),
        )

    def scale(self, c: int) -> VecPoly:
        scaled = tuple(self.field.vec_scale(c, v) for v in self.coefficients)
        return VecPoly(self.field, self.dim, scaled)

    def shift(self) -> VecPoly:
        """Multiply by T."""
        if self.is_zero:
            return self
        return VecPoly(self.field, self.dim, ((0,) * self.dim,) + self.coefficients)

    def map(self, linear: Callable[[Vector], Vector]) -> VecPoly:
        """Apply a linear map of L to every coefficient."""
        images = tuple(linear(v) for v in self.coefficients)
        return VecPoly(self.field, self.dim, images)
