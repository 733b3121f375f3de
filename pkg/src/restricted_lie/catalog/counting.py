"""Counting isomorphism classes of restricted structures at a fixed p."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import CheckFailure, GuardrailError
from ..logging import get_logger
from ..substrate.fields import MAX_FIELD_ORDER, field_make
from .equivalence import S3_WORDS, Pair, act
from .params import ParamKind, realize
from .rows import ROWS

logger = get_logger(__name__)

KNOWN_TOTALS = {2: 42, 3: 63}
QUOTED_INDIVIDUAL_CLASSES = 53


def orbit_formula(p: int) -> int:
    """Number of S3-orbits on F_p^x x F_p^x in closed form."""
    if (p - 1) % 3 == 0:
        return (p * p + p + 4) // 6
    return (p * p + p) // 6


def class_formula(p: int) -> int | None:
    """Closed form for the number of classes, p >= 5."""
    if p < 5:
        return None
    if (p - 1) % 3 == 0:
        return (p * p + 28 * p + 295) // 6
    return (p * p + 28 * p + 291) // 6


@dataclass(frozen=True)
class OrbitReport:
    p: int
    orbits: tuple[tuple[Pair, ...], ...]
    formula: int

    @property
    def count(self) -> int:
        return len(self.orbits)


def _unit_pairs(p: int) -> list[Pair]:
    if (p - 1) ** 2 > MAX_FIELD_ORDER:
        raise GuardrailError(f"Enumerating (F_{p}^x)^2 exceeds the bound 2^20")
    units = range(1, p)
    return [(a, b) for a in units for b in units]


def s3_orbits(p: int) -> OrbitReport:
    """Orbits on pairs of units by closure under the two transpositions.

    Raises:
        CheckFailure: If the orbit count disagrees with the closed form
    """
    lie_field = field_make(p)
    seen: set[Pair] = set()
    orbits: list[tuple[Pair, ...]] = []
    for start in _unit_pairs(p):
        if start in seen:
            continue
        orbit = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for letter in ("a", "b"):
                following = act(lie_field, (letter,), current)
                if following not in orbit:
                    orbit.add(following)
                    queue.append(following)
        seen |= orbit
        orbits.append(tuple(sorted(orbit)))
    report = OrbitReport(p, tuple(orbits), orbit_formula(p))
    if report.count != report.formula:
        raise CheckFailure(
            f"{report.count} orbits at p={p}, closed form gives {report.formula}"
        )
    return report


@dataclass(frozen=True)
class BurnsideReport:
    p: int
    fixed_points: dict[str, int]

    @property
    def count(self) -> int:
        return sum(self.fixed_points.values()) // len(self.fixed_points)


def _word_name(word: tuple[str, ...]) -> str:
    names = {"a": "(12)", "b": "(23)"}
    return "".join(names[letter] for letter in word) or "e"


def burnside_count(p: int) -> BurnsideReport:
    """Fixed points of every element of S3, by enumeration.

    Raises:
        CheckFailure: If the average is not an integer
    """
    lie_field = field_make(p)
    pairs = _unit_pairs(p)
    fixed = {
        _word_name(word): sum(1 for pair in pairs if act(lie_field, word, pair) == pair)
        for word in S3_WORDS
    }
    total = sum(fixed.values())
    if total % len(S3_WORDS):
        raise CheckFailure(f"Fixed-point total {total} is not divisible by 6")
    return BurnsideReport(p, fixed)


@dataclass(frozen=True)
class ClassCount:
    """Per-row and per-family class counts; infinite rows are excluded."""

    p: int
    per_row: dict[str, int]
    excluded: tuple[str, ...]
    formula: int | None
    notes: tuple[str, ...] = field(default=())

    @property
    def total(self) -> int:
        return sum(self.per_row.values())

    @property
    def breakdown(self) -> dict[str, int]:
        families: dict[str, int] = {}
        for row_id, count in self.per_row.items():
            family = row_id.split(".")[0]
            families[family] = families.get(family, 0) + count
        return families

    @property
    def individual(self) -> int:
        """Rows without parameters that are valid at p."""
        return sum(
            self.per_row.get(row.row_id, 0)
            for row in ROWS
            if row.param_kind is ParamKind.NONE
        )


def count_classes(p: int) -> ClassCount:
    """Number of restricted structures up to isomorphism at p.

    Raises:
        CheckFailure: If the total disagrees with the known value or closed form
    """
    field_make(p)
    per_row: dict[str, int] = {}
    excluded: list[str] = []
    for row in ROWS:
        if not row.condition.admits(p):
            continue
        if row.is_infinite:
            excluded.append(row.row_id)
            continue
        if row.param_kind is ParamKind.UNIT_PAIRS:
            per_row[row.row_id] = s3_orbits(p).count
        else:
            per_row[row.row_id] = len(realize(row.param_kind, p))

    count = ClassCount(p, per_row, tuple(excluded), class_formula(p))
    expected = KNOWN_TOTALS.get(p, count.formula)
    if expected is not None and count.total != expected:
        raise CheckFailure(f"{count.total} classes at p={p}, expected {expected}")

    notes: tuple[str, ...] = ()
    if p >= 5 and count.individual != QUOTED_INDIVIDUAL_CLASSES:
        notes = (
            f"{count.individual} individual classes; a count of "
            f"{QUOTED_INDIVIDUAL_CLASSES} is quoted alongside the closed form, which "
            f"needs {count.individual}",
        )
    logger.info("classes counted", p=p, total=count.total, individual=count.individual)
    return ClassCount(p, per_row, tuple(excluded), count.formula, notes)
