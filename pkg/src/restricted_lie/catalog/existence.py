"""Which Lie representatives carry a p-map, compared with the classification."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass

from ..logging import get_logger
from ..restricted.solve import solve_pmaps
from ..substrate.fields import FiniteField, field_make, is_quadratic_residue
from .families import lie_representative

logger = get_logger(__name__)


@dataclass(frozen=True)
class ExistenceEntry:
    """Expected and computed p-map existence for one Lie representative."""

    label: str
    family: str
    expected: bool
    found: bool
    unique: bool
    expected_unique: bool | None = None

    @property
    def agrees(self) -> bool:
        if self.found != self.expected:
            return False
        return self.expected_unique is None or self.unique == self.expected_unique


@dataclass(frozen=True)
class ExistenceReport:
    p: int
    entries: tuple[ExistenceEntry, ...]

    @property
    def mismatches(self) -> tuple[ExistenceEntry, ...]:
        return tuple(entry for entry in self.entries if not entry.agrees)

    @property
    def passed(self) -> bool:
        return not self.mismatches


# (family, params, field, expected existence, expected uniqueness)
Case = tuple[str, Mapping[str, int], FiniteField, bool, bool | None]


def _outside_prime_field(lie_field: FiniteField) -> list[int]:
    prime = set(lie_field.subfield(1))
    return [a for a in lie_field.elements() if a not in prime]


def _cases(p: int) -> Iterator[Case]:
    prime = field_make(p)
    quadratic = field_make(p, 2)
    odd = p >= 3

    yield "L1", {}, prime, True, None
    yield "L2", {}, prime, True, None
    yield "L3", {}, prime, odd, None
    yield "L4", {}, prime, True, None
    for xi in prime.units():
        yield "L5", {"xi": xi}, prime, True, None
    for xi in _outside_prime_field(quadratic):
        yield "L5", {"xi": xi}, quadratic, False, None
    for xi in prime.units():
        for eta in prime.units():
            yield "L6", {"xi": xi, "eta": eta}, prime, True, True
    for xi in _outside_prime_field(quadratic):
        for pair in ((xi, 1), (1, xi), (xi, xi)):
            yield "L6", {"xi": pair[0], "eta": pair[1]}, quadratic, False, None
    yield "L7", {}, prime, False, None
    for xi in prime.elements():
        yield "L8", {"xi": xi}, prime, False, None
    yield "L9", {}, prime, False, None
    yield "N1", {}, prime, True, True
    yield "N2", {}, prime, True, True if odd else None
    for xi in prime.elements():
        if odd:
            shifted = prime.add(1, prime.mul(4 % p, xi))
            in_range = shifted != 0 and is_quadratic_residue(prime.element(shifted))
            yield "N3", {"xi": xi}, prime, in_range, True if in_range else None
        else:
            yield "N3", {"xi": xi}, prime, xi == 0, None
    yield "N4", {}, prime, odd, None
    if not odd:
        yield "N5", {}, prime, False, None
        yield "W2", {}, prime, False, None
    yield "gl2", {}, prime, True, None
    yield "W1", {}, prime, odd, None


def existence_matrix(p: int) -> ExistenceReport:
    """Solve for p-maps on every Lie representative at p.

    Parameters outside F_p are tested over F_{p^2}; families whose
    presentation is not a Lie algebra at p are left out.
    """
    entries = []
    for family_id, params, lie_field, expected, expected_unique in _cases(p):
        algebra = lie_representative(family_id, params, lie_field)
        family = solve_pmaps(algebra)
        label = algebra.name
        if not lie_field.is_prime_field:
            label = f"{algebra.name} over {lie_field}"
        entries.append(
            ExistenceEntry(
                label,
                family_id,
                expected,
                family.exists,
                family.exists and family.center.dim == 0,
                expected_unique,
            )
        )
    report = ExistenceReport(p, tuple(entries))
    logger.info(
        "existence matrix computed",
        p=p,
        entries=len(entries),
        mismatches=[entry.label for entry in report.mismatches],
    )
    return report
