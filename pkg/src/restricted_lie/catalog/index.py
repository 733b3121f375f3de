"""JSON index of the catalog and its reloading.

The index lists every Lie family (brackets as strings in the algebra file
grammar) and every restricted row (images, parameter domain kind and
characteristic condition). Reloading rebuilds each instantiation from the
strings alone and compares structure tensors and p-map images with the
in-memory catalog.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from ..errors import ValidationError
from ..lie_core.algebra import LieAlgebra
from ..lie_core.parser import parse_combination
from ..logging import get_logger
from ..substrate.fields import FiniteField, field_make
from ..validation import Field, validate_mapping
from .families import BASIS, LIE_FAMILIES, CharCondition
from .params import ParamKind, realize
from .rows import ROWS, ROWS_BY_ID, restricted_representative

logger = get_logger(__name__)

INDEX_VERSION = 1

_CONDITIONS = tuple(condition.value for condition in CharCondition)

FAMILY_SCHEMA = {
    "id": Field(type=str, min_length=1),
    "params": Field(type=list),
    "nonzero": Field(type=list),
    "jacobi": Field(type=str, enum=_CONDITIONS),
    "brackets": Field(type=list),
}

ROW_SCHEMA = {
    "id": Field(type=str, pattern=r"[A-Za-z0-9]+\.\d+"),
    "family": Field(type=str, min_length=1),
    "param_kind": Field(type=str, enum=tuple(kind.value for kind in ParamKind)),
    "params": Field(type=list),
    "condition": Field(type=str, enum=_CONDITIONS),
    "images": Field(type=dict),
    "fixed": Field(type=dict),
    "equivalence": Field(type=bool),
}


def catalog_index() -> dict[str, Any]:
    """The catalog as a JSON-serializable mapping."""
    families = [
        {
            "id": family.family_id,
            "params": list(family.params),
            "nonzero": list(family.nonzero),
            "jacobi": family.jacobi.value,
            "brackets": [[a, b, expression] for a, b, expression in family.brackets],
        }
        for family in LIE_FAMILIES.values()
    ]
    rows = [
        {
            "id": row.row_id,
            "family": row.family,
            "param_kind": row.param_kind.value,
            "params": list(row.param_names),
            "condition": row.condition.value,
            "images": dict(row.images),
            "fixed": dict(row.fixed),
            "equivalence": row.has_equivalence,
        }
        for row in ROWS
    ]
    return {
        "version": INDEX_VERSION,
        "basis": list(BASIS),
        "families": families,
        "rows": rows,
    }


def catalog_index_json(indent: int | None = 2) -> str:
    return json.dumps(catalog_index(), indent=indent, sort_keys=True)


@dataclass(frozen=True)
class IndexCheck:
    p: int
    rows: int
    instances: int
    mismatches: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _decode(document: str | Mapping[str, Any]) -> Mapping[str, Any]:
    if not isinstance(document, str):
        return document
    try:
        decoded = json.loads(document)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Catalog index is not valid JSON: {e}") from e
    if not isinstance(decoded, dict):
        raise ValidationError("Catalog index must be a JSON object")
    return decoded


def _domain(kind: ParamKind, lie_field: FiniteField) -> tuple[tuple[int, ...], ...]:
    if kind.is_infinite:
        return tuple((a,) for a in lie_field.elements())
    return realize(kind, lie_field.p)


def load_catalog_index(
    document: str | Mapping[str, Any], p: int, lie_field: FiniteField | None = None
) -> IndexCheck:
    """Rebuild every instantiation at p from an index and compare with the catalog.

    Raises:
        ValidationError: If the index is malformed or has the wrong version
    """
    index = _decode(document)
    version = index.get("version")
    if version != INDEX_VERSION:
        raise ValidationError(f"Unsupported catalog index version: {version}")
    target = lie_field if lie_field is not None else field_make(p)
    basis = tuple(index.get("basis", ()))
    if not basis:
        raise ValidationError("Catalog index has no basis")

    families: dict[str, Mapping[str, Any]] = {}
    for entry in index.get("families", []):
        validate_mapping(FAMILY_SCHEMA, entry)
        families[entry["id"]] = entry

    mismatches: list[str] = []
    instances = 0
    rows = index.get("rows", [])
    for entry in rows:
        validate_mapping(ROW_SCHEMA, entry)
        row_id = entry["id"]
        if row_id not in ROWS_BY_ID:
            mismatches.append(f"{row_id}: not in the catalog")
            continue
        family = families.get(entry["family"])
        if family is None:
            raise ValidationError(
                f"Row {row_id} names unknown family {entry['family']}"
            )
        if not CharCondition(entry["condition"]).admits(target.p):
            continue
        for chosen in _domain(ParamKind(entry["param_kind"]), target):
            values = dict(zip(entry["params"], chosen, strict=True))
            lie_values = {**values, **entry["fixed"]}
            instances += 1
            rebuilt = _rebuild(family, entry, values, lie_values, basis, target)
            expected = restricted_representative(row_id, values, target, strict=False)
            if rebuilt[0].structure != expected.algebra.structure:
                mismatches.append(f"{expected.name}: structure tensors differ")
            if rebuilt[1] != expected.pmap.images:
                mismatches.append(f"{expected.name}: p-map images differ")

    logger.info(
        "catalog index reloaded", p=target.p, rows=len(rows), instances=instances
    )
    return IndexCheck(target.p, len(rows), instances, tuple(mismatches))


def _rebuild(
    family: Mapping[str, Any],
    row: Mapping[str, Any],
    values: Mapping[str, int],
    lie_values: Mapping[str, int],
    basis: tuple[str, ...],
    lie_field: FiniteField,
) -> tuple[LieAlgebra, tuple[tuple[int, ...], ...]]:
    family_values = {name: lie_values[name] for name in family["params"]}
    brackets = {
        (a, b): parse_combination(expression, lie_field, basis, family_values)
        for a, b, expression in family["brackets"]
    }
    algebra = LieAlgebra.from_brackets(lie_field, basis, brackets)
    zero = (0,) * len(basis)
    images = [zero] * len(basis)
    for name, expression in row["images"].items():
        images[basis.index(name)] = parse_combination(
            expression, lie_field, basis, values
        )
    return algebra, tuple(images)
