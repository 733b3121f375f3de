"""Parameter domains of the restricted catalog rows."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import ValidationError
from ..substrate.fields import field_make, primitive_root_mod, quadratic_residues


class ParamKind(Enum):
    NONE = "none"
    XI = "Xi_p"
    XI_NOT_PM1 = "Xi_p minus {1,-1}"
    XI_NOT_1 = "Xi_p minus {1}"
    UNITS = "F_p^x"
    FIELD = "F"
    QP_MINUS_QUARTER = "Q_p - 1/4"
    UNIT_PAIRS = "F_p^x x F_p^x"

    @property
    def is_infinite(self) -> bool:
        """Rows parameterized by the whole (algebraically closed) field."""
        return self is ParamKind.FIELD


@dataclass(frozen=True)
class ParamSet:
    """Realized parameter values at p, each a tuple in the row's parameter order."""

    kind: ParamKind
    p: int
    elements: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, values: object) -> bool:
        return values in self.elements


def xi_set(p: int) -> list[int]:
    """Xi_p: the powers g^r, 0 <= r <= (p-1)//2, of the smallest primitive root g."""
    lie_field = field_make(p)
    g = primitive_root_mod(p)
    values: list[int] = []
    for r in range((p - 1) // 2 + 1):
        value = lie_field.pow(g, r)
        if value not in values:
            values.append(value)
    return values


def shifted_residues(p: int) -> list[int]:
    """Q_p - 1/4, in the order of Q_p.

    Raises:
        ValidationError: For p = 2
    """
    if p == 2:
        raise ValidationError("Q_p - 1/4 requires odd characteristic")
    lie_field = field_make(p)
    quarter = lie_field.inv(4 % p)
    return [lie_field.sub(q, quarter) for q in quadratic_residues(p)]


def realize(kind: ParamKind, p: int) -> tuple[tuple[int, ...], ...]:
    """Elements of a parameter domain over F_p.

    For FIELD the finite-field elements stand in for the closure.
    """
    lie_field = field_make(p)
    minus_one = lie_field.neg(1)
    if kind is ParamKind.NONE:
        return ((),)
    if kind is ParamKind.XI:
        return tuple((xi,) for xi in xi_set(p))
    if kind is ParamKind.XI_NOT_PM1:
        return tuple((xi,) for xi in xi_set(p) if xi not in (1, minus_one))
    if kind is ParamKind.XI_NOT_1:
        return tuple((xi,) for xi in xi_set(p) if xi != 1)
    if kind is ParamKind.UNITS:
        return tuple((a,) for a in lie_field.units())
    if kind is ParamKind.FIELD:
        return tuple((a,) for a in lie_field.elements())
    if kind is ParamKind.QP_MINUS_QUARTER:
        return tuple((xi,) for xi in shifted_residues(p))
    if kind is ParamKind.UNIT_PAIRS:
        return tuple((a, b) for a in lie_field.units() for b in lie_field.units())
    raise ValidationError(f"Unsupported parameter kind: {kind}")
