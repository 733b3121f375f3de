"""The four-dimensional Lie algebras over a field, by presentation.

Every family uses the basis x, y, z, w; brackets not listed are zero and the
parameters (``xi``, ``eta``) enter the relations symbolically.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum

from ..errors import CharacteristicError, CheckFailure, UsageError, ValidationError
from ..lie_core.algebra import LieAlgebra, embed_coefficient
from ..lie_core.parser import parse_combination
from ..lie_core.structure import check_jacobi
from ..logging import get_logger
from ..substrate.fields import FieldElement, FiniteField

logger = get_logger(__name__)

BASIS = ("x", "y", "z", "w")

ParamValue = int | FieldElement


class CharCondition(Enum):
    ANY = "any"
    P2 = "p=2"
    P_GE_3 = "p>=3"
    P_GE_5 = "p>=5"

    def admits(self, p: int) -> bool:
        if self is CharCondition.P2:
            return p == 2
        if self is CharCondition.P_GE_3:
            return p >= 3
        if self is CharCondition.P_GE_5:
            return p >= 5
        return True


@dataclass(frozen=True)
class LieFamily:
    """A presentation ``[a, b] = expr`` with optional nonzero parameters."""

    family_id: str
    brackets: tuple[tuple[str, str, str], ...]
    params: tuple[str, ...] = ()
    nonzero: tuple[str, ...] = ()
    jacobi: CharCondition = CharCondition.ANY
    solvable: bool = True

    def label(self, values: Mapping[str, int], lie_field: FiniteField) -> str:
        if not self.params:
            return self.family_id
        rendered = ",".join(
            str(lie_field.element(values[name])) for name in self.params
        )
        return f"{self.family_id}({rendered})"


LIE_FAMILIES: dict[str, LieFamily] = {
    family.family_id: family
    for family in (
        LieFamily("L1", ()),
        LieFamily("L2", (("w", "x", "y"),)),
        LieFamily("L3", (("w", "x", "y"), ("w", "y", "z"))),
        LieFamily("L4", (("w", "x", "x"),)),
        LieFamily("L5", (("w", "x", "x"), ("w", "y", "xi*y")), ("xi",), ("xi",)),
        LieFamily(
            "L6",
            (("w", "x", "x"), ("w", "y", "xi*y"), ("w", "z", "eta*z")),
            ("xi", "eta"),
            ("xi", "eta"),
        ),
        LieFamily("L7", (("w", "x", "y"), ("w", "z", "z"))),
        LieFamily(
            "L8",
            (("w", "x", "x + y"), ("w", "y", "y"), ("w", "z", "xi*z")),
            ("xi",),
        ),
        LieFamily("L9", (("w", "x", "x + y"), ("w", "y", "y"), ("w", "z", "x + z"))),
        LieFamily("N1", (("y", "x", "x"), ("w", "z", "z"))),
        LieFamily(
            "N2",
            (("z", "x", "y"), ("w", "x", "x"), ("w", "y", "2*y"), ("w", "z", "z")),
        ),
        LieFamily(
            "N3",
            (("z", "x", "y"), ("w", "x", "x + xi*z"), ("w", "y", "y"), ("w", "z", "x")),
            ("xi",),
        ),
        LieFamily("N4", (("z", "x", "y"), ("w", "x", "z"), ("w", "z", "x"))),
        LieFamily(
            "N5",
            (("z", "x", "y"), ("z", "y", "x"), ("w", "x", "x"), ("w", "z", "z")),
            jacobi=CharCondition.P2,
        ),
        LieFamily(
            "gl2",
            (("y", "x", "-z"), ("z", "x", "2*x"), ("z", "y", "-2*y")),
            solvable=False,
        ),
        LieFamily(
            "W1",
            (("y", "x", "x"), ("z", "x", "y"), ("z", "y", "z")),
            solvable=False,
        ),
        LieFamily(
            "W2",
            (("y", "x", "x"), ("z", "x", "y"), ("z", "y", "z"), ("w", "x", "z")),
            jacobi=CharCondition.P2,
            solvable=False,
        ),
    )
}


def get_family(family_id: str) -> LieFamily:
    """Look up a Lie family by id.

    Raises:
        UsageError: If the id is unknown
    """
    family = LIE_FAMILIES.get(family_id)
    if family is None:
        supported = ", ".join(LIE_FAMILIES.keys())
        raise UsageError(f"Unknown Lie family: {family_id}. Supported: {supported}")
    return family


def param_value(lie_field: FiniteField, value: ParamValue) -> int:
    """Field encoding of a parameter.

    Field elements must belong to ``lie_field``; ints are residues in a prime
    field and encodings in an extension field.
    """
    if isinstance(value, FieldElement) or lie_field.is_prime_field:
        return embed_coefficient(lie_field, value)
    return lie_field.element(value).value


def bind_params(
    names: tuple[str, ...],
    values: Mapping[str, ParamValue] | None,
    lie_field: FiniteField,
    owner: str,
) -> dict[str, int]:
    """Encode exactly the parameters ``names`` from ``values``.

    Raises:
        ValidationError: On a missing or unexpected parameter
    """
    supplied = dict(values or {})
    missing = [name for name in names if name not in supplied]
    if missing:
        raise ValidationError(f"{owner} needs parameter(s): {', '.join(missing)}")
    unexpected = sorted(set(supplied) - set(names))
    if unexpected:
        raise ValidationError(f"{owner} takes no parameter(s): {', '.join(unexpected)}")
    return {name: param_value(lie_field, supplied[name]) for name in names}


def lie_representative(
    family_id: str,
    params: Mapping[str, ParamValue] | None,
    lie_field: FiniteField,
    allow_broken: bool = False,
) -> LieAlgebra:
    """The algebra of a family at the given parameters, Jacobi-checked.

    Args:
        family_id: Family id such as ``"L5"`` or ``"gl2"``
        params: Parameter values keyed by name (``xi``, ``eta``)
        lie_field: Field of definition
        allow_broken: Build families whose presentation fails the Jacobi
            identity in this characteristic, skipping the check

    Raises:
        UsageError: If the family is unknown
        ValidationError: If a parameter is missing, unexpected or zero where
            a unit is required
        CharacteristicError: If the presentation is not a Lie algebra in this
            characteristic and ``allow_broken`` is not set
        CheckFailure: If the Jacobi identity fails where it should hold
    """
    family = get_family(family_id)
    values = bind_params(family.params, params, lie_field, family_id)
    for name in family.nonzero:
        if values[name] == 0:
            raise ValidationError(f"{family_id} needs a nonzero '{name}'")

    p = lie_field.p
    broken = not family.jacobi.admits(p)
    if broken and not allow_broken:
        raise CharacteristicError(
            f"{family_id} is a Lie algebra only for {family.jacobi.value}, got p={p}"
        )

    brackets = {
        (a, b): parse_combination(expression, lie_field, BASIS, values)
        for a, b, expression in family.brackets
    }
    algebra = LieAlgebra.from_brackets(
        lie_field, BASIS, brackets, family.label(values, lie_field)
    )
    if not broken:
        violations = check_jacobi(algebra)
        if violations:
            raise CheckFailure(
                f"{algebra.name} fails the Jacobi identity over {lie_field}",
                [violation.describe() for violation in violations],
            )
    logger.debug("lie representative built", family=family_id, field=repr(lie_field))
    return algebra
