"""The restricted structures on the four-dimensional Lie algebras.

Each row names a Lie family, the images of the basis under the p-map (zero
images omitted), its parameter domain and the characteristics in which it is
a class representative. Rows are ordered as in the published classification.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from ..errors import CharacteristicError, CheckFailure, UsageError, ValidationError
from ..lie_core.parser import parse_combination
from ..restricted.pmap import PSemilinearMap, RestrictedLieAlgebra, is_p_map
from ..substrate.fields import FiniteField, field_make
from .families import (
    BASIS,
    CharCondition,
    ParamValue,
    bind_params,
    get_family,
    lie_representative,
)
from .params import ParamKind, ParamSet, realize

ANY = CharCondition.ANY
P2 = CharCondition.P2
P3 = CharCondition.P_GE_3
P5 = CharCondition.P_GE_5


@dataclass(frozen=True)
class CatalogRow:
    """One line of the classification: a p-map on a Lie family."""

    row_id: str
    family: str
    images: tuple[tuple[str, str], ...]
    param_kind: ParamKind = ParamKind.NONE
    param_names: tuple[str, ...] = ()
    condition: CharCondition = ANY
    fixed: tuple[tuple[str, int], ...] = ()
    has_equivalence: bool = False

    @property
    def is_infinite(self) -> bool:
        return self.param_kind.is_infinite

    def describe(self) -> str:
        return ", ".join(f"{b} -> {e}" for b, e in self.images) or "trivial"

    def label(self, values: Mapping[str, int], lie_field: FiniteField) -> str:
        if not self.param_names:
            return self.row_id
        rendered = ",".join(
            f"{name}={lie_field.element(values[name])}" for name in self.param_names
        )
        return f"{self.row_id}({rendered})"


def _row(
    row_id: str,
    images: str,
    kind: ParamKind = ParamKind.NONE,
    condition: CharCondition = ANY,
    fixed: tuple[tuple[str, int], ...] = (),
) -> CatalogRow:
    family = row_id.split(".")[0]
    parts = (part.split("=") for part in images.split(";") if part.strip())
    pairs = tuple((left.strip(), right.strip()) for left, right in parts)
    names: tuple[str, ...] = ()
    if kind is ParamKind.FIELD:
        names = ("lam",)
    elif kind is ParamKind.UNIT_PAIRS:
        names = ("xi", "eta")
    elif kind is not ParamKind.NONE:
        names = ("xi",)
    return CatalogRow(
        row_id,
        family,
        pairs,
        kind,
        names,
        condition,
        fixed,
        has_equivalence=row_id in EQUIVALENCE_ROWS,
    )


EQUIVALENCE_ROWS = ("L2.15", "L4.11", "L6.1")

K = ParamKind

ROWS: tuple[CatalogRow, ...] = (
    _row("L1.1", ""),
    _row("L1.2", "x=y"),
    _row("L1.3", "x=y; z=w"),
    _row("L1.4", "x=y; y=z"),
    _row("L1.5", "x=y; y=z; z=w"),
    _row("L1.6", "x=x"),
    _row("L1.7", "x=x; y=z"),
    _row("L1.8", "x=x; y=y"),
    _row("L1.9", "x=x; y=z; z=w"),
    _row("L1.10", "x=x; y=y; z=w"),
    _row("L1.11", "x=x; y=y; z=z"),
    _row("L1.12", "x=x; y=y; z=z; w=w"),
    _row("L2.1", "", condition=P3),
    _row("L2.2", "w=y"),
    _row("L2.3", "w=z"),
    _row("L2.4", "x=z; w=y"),
    _row("L2.5", "y=z", condition=P3),
    _row("L2.6", "x=y; y=z"),
    _row("L2.7", "z=y"),
    _row("L2.8", "x=z; z=y"),
    _row("L2.9", "y=y"),
    _row("L2.10", "x=z; y=y"),
    _row("L2.11", "y=y + z", condition=P3),
    _row("L2.12", "x=z; y=y + z"),
    _row("L2.13", "z=z", condition=P3),
    _row("L2.14", "x=y; z=z"),
    _row("L2.15", "y=y + lam*z; z=z", K.FIELD),
    _row("L3.1", "", condition=P5),
    _row("L3.2", "w=z", condition=P3),
    _row("L3.3", "y=z", condition=P3),
    _row("L3.4", "x=z", condition=P3),
    _row("L3.5", "z=z", condition=P3),
    _row("L4.1", "w=w"),
    _row("L4.2", "x=y; w=w"),
    _row("L4.3", "y=z; w=w"),
    _row("L4.4", "x=z; y=z; w=w"),
    _row("L4.5", "x=y; y=z; w=w"),
    _row("L4.6", "y=y; w=w"),
    _row("L4.7", "x=z; y=y; w=w"),
    _row("L4.8", "x=y; y=y; w=w"),
    _row("L4.9", "x=y + z; y=y; w=w"),
    _row("L4.10", "y=y; z=z; w=w"),
    _row("L4.11", "x=y + lam*z; y=y; z=z; w=w", K.FIELD),
    _row("L5.1", "w=w", K.XI),
    _row("L5.2", "x=z; w=w", K.XI),
    _row("L5.3", "y=z; w=w", K.XI_NOT_PM1),
    _row("L5.4", "x=z; y=z; w=w", K.XI_NOT_1),
    _row("L5.5", "z=z; w=w", K.XI),
    _row("L5.6", "x=z; z=z; w=w", K.XI),
    _row("L5.7", "y=z; z=z; w=w", K.XI_NOT_PM1),
    _row("L5.8", "x=z; y=z; z=z; w=w", K.XI_NOT_1),
    _row("L6.1", "w=w", K.UNIT_PAIRS),
    _row("N1.1", "y=y; w=w"),
    _row("N2.1", "w=w"),
    _row("N2.2", "x=y; w=w", condition=P2),
    _row("N2.3", "y=y; w=w", condition=P2),
    _row("N3.1", "w=w", K.QP_MINUS_QUARTER, condition=P3),
    _row("N3.2", "z=y; w=w", condition=P2, fixed=(("xi", 0),)),
    _row("N4.1", "w=w", condition=P3),
    _row("N4.2", "x=y; w=w", condition=P3),
    _row("N4.3", "y=y; w=w", condition=P3),
    _row("N4.4", "x=y; z=y; w=w", condition=P3),
    _row("gl2.1", "z=z", condition=P3),
    _row("gl2.2", "x=w; z=z", condition=P3),
    _row("gl2.3", "z=z; w=w", condition=P3),
    _row("gl2.4", "x=w; z=z; w=w", condition=P3),
    _row("gl2.5", "z=z + w; w=lam*w", K.FIELD, condition=P3),
)

ROWS_BY_ID: dict[str, CatalogRow] = {row.row_id: row for row in ROWS}


def get_row(row_id: str) -> CatalogRow:
    """Look up a catalog row.

    Raises:
        UsageError: If the row id is unknown
    """
    row = ROWS_BY_ID.get(row_id)
    if row is None:
        raise UsageError(
            f"Unknown catalog row: {row_id}. Supported: {', '.join(ROWS_BY_ID.keys())}"
        )
    return row


def rows_of(family: str) -> tuple[CatalogRow, ...]:
    return tuple(row for row in ROWS if row.family == family)


def parameter_set(row_id: str, p: int) -> ParamSet:
    """Realized parameter domain of a row at p; empty where the row is not valid.

    Raises:
        UsageError: If the row id is unknown
        ValidationError: If p is not prime
    """
    row = get_row(row_id)
    field_make(p)
    if not row.condition.admits(p):
        return ParamSet(row.param_kind, p, ())
    return ParamSet(row.param_kind, p, realize(row.param_kind, p))


def restricted_representative(
    row_id: str,
    params: Mapping[str, ParamValue] | None,
    lie_field: FiniteField,
    strict: bool = True,
) -> RestrictedLieAlgebra:
    """Instantiate a catalog row over ``lie_field`` and verify its p-map.

    Args:
        row_id: Row id such as ``"L2.15"``
        params: Row parameters (``lam``, ``xi``, ``eta``)
        lie_field: Field of definition
        strict: Require parameters from the row's domain; ``lam`` may be any
            element of ``lie_field`` regardless

    Raises:
        UsageError: If the row id is unknown
        CharacteristicError: If the row is not valid in this characteristic
        ValidationError: If parameters are missing or outside the domain
        CheckFailure: If the instantiated map is not a p-map
    """
    row = get_row(row_id)
    p = lie_field.p
    if not row.condition.admits(p):
        raise CharacteristicError(
            f"Row {row_id} is a class representative only for "
            f"{row.condition.value}, got p={p}"
        )
    values = bind_params(row.param_names, params, lie_field, row_id)
    if strict and row.param_kind not in (ParamKind.NONE, ParamKind.FIELD):
        chosen = tuple(values[name] for name in row.param_names)
        if chosen not in realize(row.param_kind, p):
            raise ValidationError(
                f"Parameters {chosen} of {row_id} lie outside {row.param_kind.value}"
            )

    family = get_family(row.family)
    lie_params = {name: values[name] for name in family.params if name in values}
    lie_params.update(dict(row.fixed))
    algebra = lie_representative(row.family, lie_params, lie_field)
    algebra = algebra.with_name(row.label(values, lie_field))

    images = {
        basis: parse_combination(expression, lie_field, BASIS, values)
        for basis, expression in row.images
    }
    pmap = PSemilinearMap.from_images(algebra, images)
    if not is_p_map(algebra, pmap):
        raise CheckFailure(f"Row {row_id} does not define a p-map over {lie_field}")
    return RestrictedLieAlgebra(algebra, pmap)


@dataclass(frozen=True)
class Instance:
    row: CatalogRow
    params: dict[str, int]
    restricted: RestrictedLieAlgebra

    @property
    def label(self) -> str:
        return self.restricted.name


def instantiate(row: CatalogRow, lie_field: FiniteField) -> Iterator[Instance]:
    """Every admissible instantiation of ``row`` over ``lie_field``.

    Rows parameterized by the whole field take every element of ``lie_field``.
    """
    p = lie_field.p
    if not row.condition.admits(p):
        return
    if row.is_infinite:
        domain: tuple[tuple[int, ...], ...] = tuple((a,) for a in lie_field.elements())
    else:
        domain = realize(row.param_kind, p)
    for chosen in domain:
        params = dict(zip(row.param_names, chosen, strict=True))
        restricted = restricted_representative(row.row_id, params, lie_field)
        yield Instance(row, params, restricted)


def instantiate_all(p: int, lie_field: FiniteField | None = None) -> list[Instance]:
    """Every (row, parameter) instantiation at p, in catalog order."""
    target = lie_field if lie_field is not None else field_make(p)
    if target.p != p:
        raise ValidationError(f"Field {target} does not have characteristic {p}")
    return [instance for row in ROWS for instance in instantiate(row, target)]
