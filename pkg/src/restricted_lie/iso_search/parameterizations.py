"""Closed-form automorphism groups, checked against the brute-force search.

Each parameterization maps a tuple of field elements to the images of
x, y, z, w (or None when the tuple violates the side conditions). Verifying
one compares the set of matrices it produces with the stream from
``automorphisms`` element for element.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass, field

from ..errors import CharacteristicError, GuardrailError, UsageError
from ..lie_core.algebra import LieAlgebra
from ..lie_core.structure import is_automorphism
from ..logging import get_logger
from ..substrate.fields import (
    MAX_FIELD_ORDER,
    FieldElement,
    FiniteField,
    field_of_order,
)
from ..substrate.linalg import Matrix
from .search import DEFAULT_BUDGET, SearchBudget, automorphisms

logger = get_logger(__name__)

F = FieldElement
Images = tuple[tuple[F, F, F, F], ...]
Builder = Callable[[dict[str, F], dict[str, F]], Images | None]


@dataclass(frozen=True)
class Parameterization:
    """A closed form for Aut of a Lie family; ``variables`` range over all of F.

    ``id`` names the closed form (``AutoLb`` for L2); the Lie family id is
    accepted as an alias.
    """

    id: str
    family: str
    variables: tuple[str, ...]
    build: Builder
    min_p: int = 2
    family_params: tuple[str, ...] = ()


def _zero(values: dict[str, F]) -> F:
    return next(iter(values.values())) * 0


def _l2(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, a2, a3, a4 = v["a1"], v["a2"], v["a3"], v["a4"]
    c2, c3 = v["c2"], v["c3"]
    d1, d2, d3, d4 = v["d1"], v["d2"], v["d3"], v["d4"]
    b = a1 * d4 - a4 * d1
    if (b * c3).is_zero:
        return None
    o = _zero(v)
    return ((a1, a2, a3, a4), (o, b, o, o), (o, c2, c3, o), (d1, d2, d3, d4))


def _l3(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, a2, a3 = v["a1"], v["a2"], v["a3"]
    d1, d2, d3, d4 = v["d1"], v["d2"], v["d3"], v["d4"]
    if (a1 * d4).is_zero:
        return None
    o = _zero(v)
    return (
        (a1, a2, a3, o),
        (o, a1 * d4, a2 * d4, o),
        (o, o, a1 * d4 * d4, o),
        (d1, d2, d3, d4),
    )


def _l4(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, b2, b3, c2, c3 = v["a1"], v["b2"], v["b3"], v["c2"], v["c3"]
    d1, d2, d3 = v["d1"], v["d2"], v["d3"]
    if (a1 * (b2 * c3 - b3 * c2)).is_zero:
        return None
    o = _zero(v)
    return ((a1, o, o, o), (o, b2, b3, o), (o, c2, c3, o), (d1, d2, d3, o + 1))


def _l5(v: dict[str, F], params: dict[str, F]) -> Images | None:
    xi = params["xi"]
    a1, a2, b1, b2, c3 = v["a1"], v["a2"], v["b1"], v["b2"], v["c3"]
    d1, d2, d3, d4 = v["d1"], v["d2"], v["d3"], v["d4"]
    if ((a1 * b2 - a2 * b1) * c3).is_zero:
        return None
    conditions = (a1 * (d4 - 1), a2 * (xi * d4 - 1), b1 * (d4 - xi), b2 * (d4 - 1))
    if not all(c.is_zero for c in conditions):
        return None
    o = _zero(v)
    return ((a1, a2, o, o), (b1, b2, o, o), (o, o, c3, o), (d1, d2, d3, d4))


def _n4(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, c1 = v["a1"], v["c1"]
    d1, d2, d3, d4 = v["d1"], v["d2"], v["d3"], v["d4"]
    if not (d4 * d4 - 1).is_zero or (a1 * a1 - c1 * c1).is_zero:
        return None
    o = _zero(v)
    return (
        (a1, c1 * d3 - a1 * d1 * d4, d4 * c1, o),
        (o, (a1 * a1 - c1 * c1) * d4, o, o),
        (c1, a1 * d3 - c1 * d1 * d4, d4 * a1, o),
        (d1, d2, d3, d4),
    )


def _gl2(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, a2, a3 = v["a1"], v["a2"], v["a3"]
    b1, b2, b3 = v["b1"], v["b2"], v["b3"]
    c1, c2, c3 = v["c1"], v["c2"], v["c3"]
    d4 = v["d4"]
    relations = (
        a1 * c3 - a3 * c1 - a1,
        a3 * c2 - a2 * c3 - a2,
        a2 * c1 - a1 * c2 - 2 * a3,
        b3 * c1 - b1 * c3 - b1,
        b2 * c3 - b3 * c2 - b2,
        b1 * c2 - b2 * c1 - 2 * b3,
        2 * a3 * b1 - 2 * a1 * b3 - c1,
        2 * a2 * b3 - 2 * a3 * b2 - c2,
        a1 * b2 - a2 * b1 - c3,
    )
    if not all(r.is_zero for r in relations):
        return None
    determinant = (
        a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2)
    )
    if (determinant * d4).is_zero:
        return None
    o = _zero(v)
    return ((a1, a2, a3, o), (b1, b2, b3, o), (c1, c2, c3, o), (o, o, o, d4))


def _n2(v: dict[str, F], _: dict[str, F]) -> Images | None:
    a1, a3, c1, c3 = v["a1"], v["a3"], v["c1"], v["c3"]
    d1, d2, d3 = v["d1"], v["d2"], v["d3"]
    det = a1 * c3 - a3 * c1
    if det.is_zero:
        return None
    o = _zero(v)
    return (
        (a1, a3 * d1 - a1 * d3, a3, o),
        (o, det, o, o),
        (c1, c3 * d1 - c1 * d3, c3, o),
        (d1, d2, d3, o + 1),
    )


def _names(spec: str) -> tuple[str, ...]:
    return tuple(spec.split())


PARAMETERIZATIONS: dict[str, Parameterization] = {
    entry.id: entry
    for entry in (
        Parameterization("AutoLb", "L2", _names("a1 a2 a3 a4 c2 c3 d1 d2 d3 d4"), _l2),
        Parameterization("AutoLc", "L3", _names("a1 a2 a3 d1 d2 d3 d4"), _l3),
        Parameterization("AutoLd", "L4", _names("a1 b2 b3 c2 c3 d1 d2 d3"), _l4),
        Parameterization(
            "isoformLe",
            "L5",
            _names("a1 a2 b1 b2 c3 d1 d2 d3 d4"),
            _l5,
            family_params=("xi",),
        ),
        Parameterization("isoformLj", "N4", _names("a1 c1 d1 d2 d3 d4"), _n4, min_p=3),
        Parameterization(
            "AutoLk", "gl2", _names("a1 a2 a3 b1 b2 b3 c1 c2 c3 d4"), _gl2, min_p=3
        ),
        Parameterization("AutoN2", "N2", _names("a1 a3 c1 c3 d1 d2 d3"), _n2),
    )
}


def get_parameterization(family: str) -> Parameterization:
    """Look up a parameterization by its id or by Lie family id.

    Raises:
        UsageError: If no closed form is registered for the family
    """
    entry = PARAMETERIZATIONS.get(family)
    if entry is None:
        by_family = (e for e in PARAMETERIZATIONS.values() if e.family == family)
        entry = next(by_family, None)
    if entry is None:
        supported = ", ".join(
            f"{e.id} ({e.family})" for e in PARAMETERIZATIONS.values()
        )
        raise UsageError(
            f"Unknown parameterized family: {family}. Supported: {supported}"
        )
    return entry


def _as_matrix(lie_field: FiniteField, images: Images) -> Matrix:
    return Matrix.from_columns(
        lie_field, [tuple(c.value for c in column) for column in images]
    )


def parameterized_automorphisms(
    entry: Parameterization, algebra: LieAlgebra, params: dict[str, F]
) -> set[Matrix]:
    """All matrices the closed form produces over the algebra's field.

    Raises:
        GuardrailError: If q^(number of variables) exceeds 2^20
    """
    lie_field = algebra.field
    count = lie_field.q ** len(entry.variables)
    if count > MAX_FIELD_ORDER:
        raise GuardrailError(
            f"Enumerating {lie_field.q}^{len(entry.variables)} parameter tuples for "
            f"{entry.id} exceeds the bound 2^20"
        )
    elements = [F(lie_field, a) for a in lie_field.elements()]
    matrices: set[Matrix] = set()
    for values in itertools.product(elements, repeat=len(entry.variables)):
        images = entry.build(dict(zip(entry.variables, values, strict=True)), params)
        if images is not None:
            matrices.add(_as_matrix(lie_field, images))
    return matrices


@dataclass(frozen=True)
class ParameterizationReport:
    """Outcome of comparing a closed form with the brute-force stream."""

    id: str
    family: str
    q: int
    params: dict[str, int]
    parameterized: int
    brute_force: int
    missing: tuple[Matrix, ...] = field(default=())
    extra: tuple[Matrix, ...] = field(default=())
    invalid: tuple[Matrix, ...] = field(default=())

    @property
    def matches(self) -> bool:
        return not (self.missing or self.extra or self.invalid)


def compare_parameterization(
    family: str,
    q: int,
    params: dict[str, int] | None = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> ParameterizationReport:
    """Compare the closed form for ``family`` over F_q with the search.

    Raises:
        UsageError: If the family has no registered closed form
        CharacteristicError: If the closed form needs a larger characteristic
        BudgetExhaustedError: If the brute-force stream is cut short
    """
    from ..catalog.families import lie_representative

    entry = get_parameterization(family)
    lie_field = field_of_order(q)
    if lie_field.p < entry.min_p:
        raise CharacteristicError(
            f"The closed form {entry.id} needs p >= {entry.min_p}, got p={lie_field.p}"
        )
    algebra = lie_representative(entry.family, params, lie_field)
    bound = {name: F(lie_field, (params or {})[name]) for name in entry.family_params}

    closed = parameterized_automorphisms(entry, algebra, bound)
    searched = {automorphism.matrix for automorphism in automorphisms(algebra, budget)}
    broken = (m for m in closed if not is_automorphism(algebra, m))
    invalid = tuple(sorted(broken, key=_key))
    report = ParameterizationReport(
        id=entry.id,
        family=entry.family,
        q=q,
        params=dict(params or {}),
        parameterized=len(closed),
        brute_force=len(searched),
        missing=tuple(sorted(searched - closed, key=_key)),
        extra=tuple(sorted(closed - searched, key=_key)),
        invalid=invalid,
    )
    logger.info(
        "parameterization compared",
        parameterization=entry.id,
        q=q,
        parameterized=report.parameterized,
        brute_force=report.brute_force,
        matches=report.matches,
    )
    return report


def _key(matrix: Matrix) -> tuple[int, ...]:
    return matrix.flat()


def verify_parameterization(
    family: str,
    q: int,
    params: dict[str, int] | None = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> bool:
    """True iff the closed form equals the brute-force automorphism set.

    L5 depends on xi; without ``params`` every xi in F_q^x is checked.
    """
    entry = get_parameterization(family)
    if entry.family_params and params is None:
        lie_field = field_of_order(q)
        return all(
            compare_parameterization(family, q, {"xi": xi}, budget).matches
            for xi in lie_field.units()
        )
    return compare_parameterization(family, q, params, budget).matches
