"""Exact arithmetic in F_p and F_{p^k}.

Elements are encoded as integers ``0 .. q-1`` whose base-p digits are the
coefficients of the polynomial representative modulo the field's modulus
(lowest degree first). Prime-field elements are their own residues, so the
integers ``0 .. p-1`` embed F_p into every F_{p^k} unchanged.

Field construction, irreducibility data and the canonical generator come
from ``galois``; the hot arithmetic paths use plain-int tables built from it.
"""

from __future__ import annotations

import functools
from abc import ABC, abstractmethod
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import galois
import numpy as np

from ..errors import GuardrailError, ValidationError

MAX_FIELD_ORDER = 2**20
MAX_SCAN_ORDER = 2**16
_TABLE_ORDER = 256

Vector = tuple[int, ...]


class FiniteField(ABC):
    """A finite field descriptor with integer-encoded elements."""

    def __init__(self, p: int, k: int, modulus: galois.Poly, generator: int) -> None:
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.generator = generator

    # Arithmetic on encoded elements

    @abstractmethod
    def add(self, a: int, b: int) -> int: ...

    @abstractmethod
    def neg(self, a: int) -> int: ...

    @abstractmethod
    def mul(self, a: int, b: int) -> int: ...

    @abstractmethod
    def inv(self, a: int) -> int: ...

    @property
    @abstractmethod
    def gf(self) -> type[galois.FieldArray]:
        """The galois field-array class used for linear algebra."""

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return n % self.p

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        # Frobenius has order k on F_{p^k}
        return self.pow(a, self.p ** (self.k - 1))

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    @property
    def half(self) -> int:
        if self.p == 2:
            raise ValidationError("1/2 is undefined in characteristic 2")
        return self.inv(2 % self.p)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def coordinates(self, a: int) -> Vector:
        digits = []
        for _ in range(self.k):
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return tuple(digits)

    def from_coordinates(self, digits: Sequence[int]) -> int:
        value = 0
        for digit in reversed(digits):
            value = value * self.p + digit % self.p
        return value

    def subfield(self, degree: int) -> list[int]:
        """Elements of the copy of F_{p^degree} inside this field."""
        if self.k % degree:
            raise ValidationError(
                f"F_{self.p}^{degree} is not a subfield of F_{self.q}"
            )
        order = self.p**degree
        return [a for a in self.elements() if self.pow(a, order) == a]

    def element(self, value: int) -> FieldElement:
        """Wrap an encoded element; negative ints embed through Z -> F_p."""
        if value < 0:
            return FieldElement(self, self.from_int(value))
        if value >= self.q:
            raise ValidationError(f"{value} is not an element encoding of F_{self.q}")
        return FieldElement(self, value)

    # Vector helpers; vectors are tuples of encoded elements

    def zero_vector(self, n: int) -> Vector:
        return (0,) * n

    def basis_vector(self, n: int, index: int) -> Vector:
        return tuple(1 if i == index else 0 for i in range(n))

    def vec_add(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return tuple(self.add(a, b) for a, b in zip(u, v, strict=True))

    def vec_sub(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        return tuple(self.sub(a, b) for a, b in zip(u, v, strict=True))

    def vec_neg(self, u: Sequence[int]) -> Vector:
        return tuple(self.neg(a) for a in u)

    def vec_scale(self, c: int, u: Sequence[int]) -> Vector:
        return tuple(self.mul(c, a) for a in u)

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        total = 0
        for a, b in zip(u, v, strict=True):
            if a and b:
                total = self.add(total, self.mul(a, b))
        return total

    def combine(
        self, coefficients: Sequence[int], vectors: Sequence[Sequence[int]], n: int
    ) -> Vector:
        """Linear combination sum(c_i * v_i) of length-n vectors."""
        acc = [0] * n
        for c, vector in zip(coefficients, vectors, strict=True):
            if not c:
                continue
            for i, a in enumerate(vector):
                if a:
                    acc[i] = self.add(acc[i], self.mul(c, a))
        return tuple(acc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.k, self.modulus_coefficients) == (
            other.p,
            other.k,
            other.modulus_coefficients,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus_coefficients))

    @property
    def modulus_coefficients(self) -> tuple[int, ...]:
        """Modulus coefficients, highest degree first."""
        return tuple(int(c) for c in self.modulus.coeffs)

    def __repr__(self) -> str:
        if self.k == 1:
            return f"F_{self.p}"
        return f"F_{self.q}[{self.modulus}]"


class PrimeField(FiniteField):
    """F_p with plain modular arithmetic."""

    def __init__(self, p: int) -> None:
        base = galois.GF(p)
        super().__init__(
            p,
            1,
            galois.Poly([1, 0], field=base),
            int(galois.primitive_root(p)) if p > 2 else 1,
        )
        self._gf = base

    @property
    def gf(self) -> type[galois.FieldArray]:
        return self._gf

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    # Integer fast paths: accumulate, reduce once

    def vec_add(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        p = self.p
        return tuple((a + b) % p for a, b in zip(u, v, strict=True))

    def vec_sub(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        p = self.p
        return tuple((a - b) % p for a, b in zip(u, v, strict=True))

    def vec_scale(self, c: int, u: Sequence[int]) -> Vector:
        p = self.p
        return tuple(c * a % p for a in u)

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(a * b for a, b in zip(u, v, strict=True)) % self.p

    def combine(
        self, coefficients: Sequence[int], vectors: Sequence[Sequence[int]], n: int
    ) -> Vector:
        acc = [0] * n
        for c, vector in zip(coefficients, vectors, strict=True):
            if c:
                for i, a in enumerate(vector):
                    acc[i] += c * a
        p = self.p
        return tuple(a % p for a in acc)


class ExtensionField(FiniteField):
    """F_{p^k}, k >= 2, with log/exp multiplication tables."""

    def __init__(self, p: int, k: int, modulus: galois.Poly) -> None:
        generator = galois.primitive_element(modulus)
        super().__init__(p, k, modulus, int(generator))
        self._gf = galois.GF(
            p**k, irreducible_poly=modulus, primitive_element=generator
        )

        powers = self._gf(self.generator) ** np.arange(self.q - 1)
        self._exp: list[int] = powers.view(np.ndarray).tolist()
        self._log: list[int] = [0] * self.q
        for exponent, value in enumerate(self._exp):
            self._log[value] = exponent

        self._add_table: list[list[int]] | None = None
        elements = self._gf.elements
        self._neg: list[int] = (-elements).view(np.ndarray).tolist()
        if self.q <= _TABLE_ORDER:
            table = elements[:, np.newaxis] + elements[np.newaxis, :]
            self._add_table = table.view(np.ndarray).tolist()

    @property
    def gf(self) -> type[galois.FieldArray]:
        return self._gf

    def add(self, a: int, b: int) -> int:
        if self._add_table is not None:
            return self._add_table[a][b]
        if self.p == 2:
            return a ^ b
        return int(self._gf(a) + self._gf(b))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[-self._log[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to the canonical generator."""
        if not a:
            raise ValidationError("log of zero")
        return self._log[a]


def _is_irreducible(modulus: galois.Poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    base = galois.GF(p)
    for degree in range(1, modulus.degree // 2 + 1):
        for code in range(p**degree, 2 * p**degree):
            divisor = galois.Poly.Int(code, field=base)
            if not np.any((modulus % divisor).coeffs):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> galois.Poly:
    """Lexicographically smallest monic irreducible polynomial of degree k."""
    base = galois.GF(p)
    for code in range(p**k, 2 * p**k):
        candidate = galois.Poly.Int(code, field=base)
        if _is_irreducible(candidate, p):
            return candidate
    raise ValidationError(f"No irreducible polynomial of degree {k} over F_{p}")


@functools.lru_cache(maxsize=64)
def field_make(p: int, k: int = 1) -> FiniteField:
    """Construct F_{p^k} with the lexicographically smallest monic irreducible modulus.

    Args:
        p: Characteristic (prime)
        k: Extension degree

    Raises:
        ValidationError: If p is not prime or k < 1
        GuardrailError: If p^k exceeds the enumeration bound
    """
    if isinstance(p, bool) or not isinstance(p, int) or not galois.is_prime(p):
        raise ValidationError(f"Characteristic must be prime, got {p}")
    if not isinstance(k, int) or k < 1:
        raise ValidationError(f"Extension degree must be a positive integer, got {k}")
    if p**k > MAX_FIELD_ORDER:
        raise GuardrailError(f"Field order {p}^{k} exceeds the bound 2^20")
    if k == 1:
        return PrimeField(p)
    return ExtensionField(p, k, _smallest_irreducible(p, k))


def field_of_order(q: int) -> FiniteField:
    """F_q for a prime power q.

    Raises:
        ValidationError: If q is not a prime power
    """
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise ValidationError(f"Field order must be a prime power, got {q}")
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise ValidationError(f"Field order must be a prime power, got {q}")
    return field_make(int(primes[0]), int(exponents[0]))


def primitive_root_mod(p: int) -> int:
    """Smallest positive primitive root modulo p (1 for p = 2)."""
    return field_make(p).generator


def require_scan(field: FiniteField) -> None:
    if field.q > MAX_SCAN_ORDER:
        raise GuardrailError(f"Exhaustive scan over F_{field.q} exceeds the bound 2^16")


@functools.lru_cache(maxsize=32)
def _root_table(field: FiniteField, n: int) -> dict[int, int]:
    """Map each n-th power to its smallest n-th root."""
    table: dict[int, int] = {}
    for b in field.elements():
        table.setdefault(field.pow(b, n), b)
    return table


@dataclass(frozen=True)
class FieldElement:
    """An element of a finite field with operator support."""

    field: FiniteField
    value: int

    def _coerce(self, other: Any) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValidationError(f"Field mismatch: {self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __rtruediv__(self, other: Any) -> FieldElement:
        return FieldElement(self.field, self.field.div(self._coerce(other), self.value))

    def __pow__(self, exponent: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, exponent))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.from_int(other)
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def coordinates(self) -> Vector:
        return self.field.coordinates(self.value)

    def __repr__(self) -> str:
        return str(self.value) if self.field.k == 1 else f"{self.field!r}({self.value})"


def pth_root(a: FieldElement) -> FieldElement:
    """The unique b with b^p = a."""
    return FieldElement(a.field, a.field.pth_root(a.value))


def nth_root(a: FieldElement, n: int) -> FieldElement | None:
    """Smallest-encoding b with b^n = a, or None when a has no n-th root.

    Raises:
        ValidationError: If n < 1
        GuardrailError: If the field is too large to scan
    """
    if n < 1:
        raise ValidationError(f"Root index must be positive, got {n}")
    if a.value == 0:
        return a
    require_scan(a.field)
    root = _root_table(a.field, n).get(a.value)
    return None if root is None else FieldElement(a.field, root)


def is_quadratic_residue(a: FieldElement) -> bool:
    """Euler's criterion in a prime field of odd characteristic.

    Raises:
        ValidationError: For p = 2, extension fields or a = 0
    """
    field = a.field
    if not field.is_prime_field:
        raise ValidationError("Quadratic residues are defined for prime fields only")
    if field.p == 2:
        raise ValidationError("Quadratic residues require odd characteristic")
    if a.value == 0:
        raise ValidationError("Quadratic residue test requires a nonzero element")
    return field.pow(a.value, (field.p - 1) // 2) == 1


def quadratic_residues(p: int) -> list[int]:
    """Q_p in increasing order."""
    field = field_make(p)
    return [a for a in field.units() if is_quadratic_residue(field.element(a))]


def elements_of(field: FiniteField, values: Iterable[int]) -> Iterator[FieldElement]:
    for value in values:
        yield FieldElement(field, value)
