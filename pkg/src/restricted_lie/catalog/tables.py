"""Invariant tables separating the p-maps of one Lie family.

Tables are numbered 1 to 5 (L2, L4, L5, N4, gl2) and can also be looked up
by family. Each table lists, for selected catalog rows, dimensions of iterated image
spans ``V^{[p]^r}`` for V among L, Z(L) and [L,L]. The published values are
kept alongside so a regenerated table can be diffed against them.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import UsageError
from ..restricted.invariants import invariant_profile
from ..substrate.fields import FiniteField, field_make
from .rows import get_row, restricted_representative

Column = tuple[str, str, int]
TableKey = int | str


@dataclass(frozen=True)
class TableEntry:
    label: str
    row_id: str
    params: tuple[tuple[str, int], ...]
    expected: tuple[int, ...]


@dataclass(frozen=True)
class TableSpec:
    number: int
    family: str
    columns: tuple[Column, ...]
    default_p: int
    entries: tuple[TableEntry, ...]


@dataclass(frozen=True)
class TableRow:
    label: str
    values: tuple[int, ...]


@dataclass(frozen=True)
class Table:
    number: int
    family: str
    p: int | None
    columns: tuple[str, ...]
    rows: tuple[TableRow, ...]

    def format(self) -> str:
        width = max([len(row.label) for row in self.rows] + [5])
        header = " ".join(f"{c:>10}" for c in self.columns)
        lines = [f"{'row':<{width}} {header}"]
        for row in self.rows:
            cells = " ".join(f"{v:>10}" for v in row.values)
            lines.append(f"{row.label:<{width}} {cells}")
        return "\n".join(lines)


L_P: Column = ("L^[p]", "L", 1)
Z_P: Column = ("Z^[p]", "Z", 1)
LL_P: Column = ("[L,L]^[p]", "LL", 1)
Z_P2: Column = ("Z^[p]^2", "Z", 2)
LL_P2: Column = ("[L,L]^[p]^2", "LL", 2)


def _entry(
    row_id: str, expected: tuple[int, ...], label: str | None = None, **params: int
) -> TableEntry:
    return TableEntry(label or row_id, row_id, tuple(params.items()), expected)


TABLES: dict[int, TableSpec] = {
    spec.number: spec
    for spec in (
        TableSpec(
            1,
            "L2",
            (L_P, Z_P, LL_P),
            3,
            (
                _entry("L2.9", (1, 1, 1)),
                _entry("L2.10", (2, 1, 1)),
                _entry("L2.11", (1, 1, 1)),
                _entry("L2.12", (2, 1, 1)),
                _entry("L2.13", (1, 1, 0)),
                _entry("L2.14", (2, 1, 0)),
                _entry("L2.15", (2, 2, 1), lam=1),
            ),
        ),
        TableSpec(
            2,
            "L4",
            (L_P, LL_P, Z_P, Z_P2, LL_P2),
            3,
            (
                _entry("L4.1", (2, 0, 0, 0, 0)),
                _entry("L4.2", (3, 1, 0, 0, 0)),
                _entry("L4.3", (3, 0, 1, 0, 0)),
                _entry("L4.4", (3, 1, 1, 0, 0)),
                _entry("L4.5", (4, 1, 1, 0, 0)),
                _entry("L4.6", (3, 0, 1, 1, 0)),
                _entry("L4.7", (4, 1, 1, 1, 0)),
                _entry("L4.8", (3, 1, 1, 1, 1)),
                _entry("L4.9", (4, 1, 1, 1, 1)),
                _entry("L4.10", (4, 0, 2, 2, 2)),
                _entry("L4.11", (4, 1, 2, 2, 2), lam=1),
            ),
        ),
        TableSpec(
            3,
            "L5",
            (Z_P, LL_P),
            5,
            (
                _entry("L5.1", (0, 0), xi=2),
                _entry("L5.2", (0, 1), xi=2),
                _entry("L5.3", (0, 1), xi=2),
                _entry("L5.4", (0, 1), xi=2),
                _entry("L5.5", (1, 0), xi=2),
                _entry("L5.6", (1, 1), xi=2),
                _entry("L5.7", (1, 1), xi=2),
                _entry("L5.8", (1, 1), xi=2),
            ),
        ),
        TableSpec(
            4,
            "N4",
            (Z_P, LL_P),
            3,
            (
                _entry("N4.1", (0, 0)),
                _entry("N4.2", (0, 1)),
                _entry("N4.3", (1, 1)),
                _entry("N4.4", (0, 1)),
            ),
        ),
        TableSpec(
            5,
            "gl2",
            (Z_P, LL_P),
            3,
            (
                _entry("gl2.1", (0, 3)),
                _entry("gl2.2", (0, 4)),
                _entry("gl2.3", (1, 3)),
                _entry("gl2.4", (1, 4)),
                _entry("gl2.5", (1, 4), lam=1),
                _entry("gl2.5", (0, 4), "gl2.5(lam=0)", lam=0),
            ),
        ),
    )
}


def get_table(name: TableKey) -> TableSpec:
    """Look up a table by number (``1``, ``"1"``) or by family (``"L2"``).

    Raises:
        UsageError: If the table is unknown
    """
    key = str(name).strip()
    if key.isdigit() and int(key) in TABLES:
        return TABLES[int(key)]
    for spec in TABLES.values():
        if spec.family == key:
            return spec
    supported = ", ".join(f"{n} ({spec.family})" for n, spec in TABLES.items())
    raise UsageError(f"Unknown table: {name}. Supported: {supported}")


def expected_table(name: TableKey) -> Table:
    spec = get_table(name)
    return Table(
        spec.number,
        spec.family,
        None,
        tuple(column[0] for column in spec.columns),
        tuple(TableRow(entry.label, entry.expected) for entry in spec.entries),
    )


def regenerate_table(
    name: TableKey, p: int | None = None, lie_field: FiniteField | None = None
) -> Table:
    """Recompute a table from the invariant profiles of its rows.

    Rows that are not valid at p are left out.
    """
    spec = get_table(name)
    target = lie_field if lie_field is not None else field_make(p or spec.default_p)
    depth = max(column[2] for column in spec.columns)
    rows = []
    for entry in spec.entries:
        if not get_row(entry.row_id).condition.admits(target.p):
            continue
        restricted = restricted_representative(
            entry.row_id, dict(entry.params), target, strict=False
        )
        profile = invariant_profile(restricted, depth)
        values = tuple(profile.dim(space, r) for _, space, r in spec.columns)
        rows.append(TableRow(entry.label, values))
    columns = tuple(column[0] for column in spec.columns)
    return Table(spec.number, spec.family, target.p, columns, tuple(rows))


def compare_tables(name: TableKey, p: int | None = None) -> list[str]:
    """Mismatches between the regenerated and the published table."""
    expected = {row.label: row.values for row in expected_table(name).rows}
    mismatches = []
    for row in regenerate_table(name, p).rows:
        if row.values != expected[row.label]:
            mismatches.append(
                f"{row.label}: got {row.values}, expected {expected[row.label]}"
            )
    return mismatches
