"""Multivariate polynomials with exact rational coefficients.

Thin wrapper over sympy's sparse polynomial rings over QQ with lexicographic
term order.
"""

from __future__ import annotations

import functools
from collections.abc import Mapping, Sequence
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import ValidationError

Exponents = tuple[int, ...]


@functools.lru_cache(maxsize=32)
def _ring(variables: tuple[str, ...]) -> PolyRing:
    return PolyRing(variables, QQ, lex)


def _qq(value: Fraction | int) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


class RatMPoly:
    """Element of Q[variables]; variable order fixes the lex term order."""

    __slots__ = ("variables", "_element")

    def __init__(self, variables: Sequence[str], element: PolyElement) -> None:
        self.variables = tuple(variables)
        self._element = element

    @classmethod
    def generators(cls, variables: Sequence[str]) -> tuple[RatMPoly, ...]:
        names = tuple(variables)
        if len(set(names)) != len(names) or not names:
            raise ValidationError(f"Variables must be distinct and nonempty: {names}")
        return tuple(cls(names, g) for g in _ring(names).gens)

    @classmethod
    def constant(cls, variables: Sequence[str], value: Fraction | int) -> RatMPoly:
        names = tuple(variables)
        return cls(names, _ring(names).ground_new(_qq(value)))

    @classmethod
    def from_terms(
        cls, variables: Sequence[str], terms: Mapping[Exponents, Fraction | int]
    ) -> RatMPoly:
        names = tuple(variables)
        ring = _ring(names)
        for exponents in terms:
            if len(exponents) != len(names):
                raise ValidationError(
                    f"Exponent vector {exponents} does not match {len(names)} variables"
                )
        return cls(names, ring.from_dict({e: _qq(c) for e, c in terms.items() if c}))

    def terms(self) -> tuple[tuple[Exponents, Fraction], ...]:
        """Nonzero terms, lexicographically descending."""
        return tuple(
            (tuple(monom), Fraction(int(c.numerator), int(c.denominator)))
            for monom, c in self._element.terms(order=lex)
            if c
        )

    @property
    def is_zero(self) -> bool:
        return not self._element

    def _coerce(self, other: Any) -> PolyElement:
        if isinstance(other, RatMPoly):
            if other.variables != self.variables:
                raise ValidationError(
                    f"Variable mismatch: {self.variables} vs {other.variables}"
                )
            return other._element
        if isinstance(other, int | Fraction):
            return _ring(self.variables).ground_new(_qq(other))
        return NotImplemented

    def __add__(self, other: Any) -> RatMPoly:
        return RatMPoly(self.variables, self._element + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> RatMPoly:
        return RatMPoly(self.variables, self._element - self._coerce(other))

    def __rsub__(self, other: Any) -> RatMPoly:
        return RatMPoly(self.variables, self._coerce(other) - self._element)

    def __mul__(self, other: Any) -> RatMPoly:
        return RatMPoly(self.variables, self._element * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> RatMPoly:
        return RatMPoly(self.variables, -self._element)

    def __pow__(self, exponent: int) -> RatMPoly:
        if exponent < 0:
            raise ValidationError("Negative powers are not polynomials")
        return RatMPoly(self.variables, self._element**exponent)

    def scale(self, c: Fraction | int) -> RatMPoly:
        return RatMPoly(self.variables, self._element * _qq(c))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            return self.terms() == RatMPoly.constant(self.variables, other).terms()
        if not isinstance(other, RatMPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self.variables, self.terms()))

    def __repr__(self) -> str:
        return f"RatMPoly({self._element.as_expr()})"

    def __str__(self) -> str:
        return str(self._element.as_expr())
