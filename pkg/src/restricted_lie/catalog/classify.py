"""Completeness sample: every 2-map on L2 over F_2 lands on exactly one row.

The 256 p-maps on L2 are split into orbits under Aut(L2)(F_2); each orbit
representative is then compared with the rows valid at p = 2 over F_{2^k}
for the degrees of the ladder.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..iso_search.search import (
    DEFAULT_BUDGET,
    SearchBudget,
    automorphisms,
    restricted_isomorphic,
)
from ..logging import get_logger
from ..restricted.invariants import invariant_profile
from ..restricted.pmap import PSemilinearMap, RestrictedLieAlgebra, conjugate
from ..restricted.solve import enumerate_pmaps
from ..substrate.fields import Vector, field_make
from .families import lie_representative
from .rows import instantiate, rows_of

logger = get_logger(__name__)

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class PMapClass:
    """One Aut(L2)(F_2)-orbit of 2-maps and the rows it is conjugate to."""

    representative: str
    size: int
    triple: Triple
    degree: int | None
    matches: tuple[str, ...]

    @property
    def resolved(self) -> bool:
        return len(self.matches) == 1


@dataclass(frozen=True)
class L2Classification:
    pmaps: int
    automorphisms: int
    classes: tuple[PMapClass, ...]
    listed_triples: frozenset[Triple]

    @property
    def passed(self) -> bool:
        listed = self.listed_triples
        return all(entry.resolved and entry.triple in listed for entry in self.classes)

    @property
    def triples(self) -> tuple[Triple, ...]:
        return tuple(sorted({entry.triple for entry in self.classes}))


class _UnionFind:
    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        a, b = self.find(i), self.find(j)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def classify_l2_pmaps_p2(budget: SearchBudget = DEFAULT_BUDGET) -> L2Classification:
    """Orbit decomposition of the 2-maps on L2 and their catalog matches."""
    lie_field = field_make(2)
    algebra = lie_representative("L2", None, lie_field)
    pmaps = list(enumerate_pmaps(algebra))
    index: dict[tuple[Vector, ...], int] = {
        pmap.images: i for i, pmap in enumerate(pmaps)
    }
    found = list(automorphisms(algebra, budget))

    orbits = _UnionFind(len(pmaps))
    for i, pmap in enumerate(pmaps):
        for automorphism in found:
            orbits.union(i, index[conjugate(pmap, automorphism.matrix).images])
    members: dict[int, list[int]] = {}
    for i in range(len(pmaps)):
        members.setdefault(orbits.find(i), []).append(i)

    targets = [
        instance.restricted
        for row in rows_of("L2")
        for instance in instantiate(row, lie_field)
    ]
    listed = frozenset(invariant_profile(target, 1).triple() for target in targets)

    classes = []
    for root, orbit in sorted(members.items()):
        representative = RestrictedLieAlgebra(algebra, pmaps[root])
        degree, matches = _match(representative, targets, budget)
        classes.append(
            PMapClass(
                pmaps[root].describe(),
                len(orbit),
                invariant_profile(representative, 1).triple(),
                degree,
                matches,
            )
        )
    logger.info(
        "L2 2-maps classified",
        pmaps=len(pmaps),
        automorphisms=len(found),
        classes=len(classes),
    )
    return L2Classification(len(pmaps), len(found), tuple(classes), listed)


def _match(
    representative: RestrictedLieAlgebra,
    targets: list[RestrictedLieAlgebra],
    budget: SearchBudget,
) -> tuple[int | None, tuple[str, ...]]:
    """Rows conjugate to the representative at the lowest ladder degree that has one."""
    for degree in budget.ladder:
        lie_field = field_make(2, degree)
        lifted = representative.lift(lie_field)
        matches = tuple(
            target.name
            for target in targets
            if restricted_isomorphic(lifted, target.lift(lie_field), budget) is not None
        )
        logger.debug("ladder rung compared", degree=degree, matches=len(matches))
        if matches:
            return degree, matches
    return None, ()


def orbit_of(
    pmap: PSemilinearMap, budget: SearchBudget = DEFAULT_BUDGET
) -> set[tuple[Vector, ...]]:
    """Images of every conjugate of a p-map under the automorphisms over its field."""
    return {
        conjugate(pmap, automorphism.matrix).images
        for automorphism in automorphisms(pmap.algebra, budget)
    }
