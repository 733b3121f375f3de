"""Pairwise non-isomorphism of the catalog instantiations at one p.

Only instances on the same Lie family are compared; representatives of
different families are already non-isomorphic as Lie algebras. Pairs that the
equivalence predicates declare isomorphic need a witness over some F_{p^k} of
the ladder; every other pair must have no restricted isomorphism over F_p.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from ..errors import BudgetExhaustedError
from ..iso_search.search import (
    DEFAULT_BUDGET,
    SearchBudget,
    ladder_search,
    restricted_isomorphic,
)
from ..logging import get_logger
from .equivalence import equivalence
from .rows import Instance, instantiate_all

logger = get_logger(__name__)


@dataclass(frozen=True)
class Witness:
    first: str
    second: str
    degree: int


@dataclass(frozen=True)
class DistinctnessReport:
    p: int
    compared: int
    witnesses: tuple[Witness, ...]
    counterexamples: tuple[str, ...]
    undecided: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples and not self.undecided


def declared_isomorphic(first: Instance, second: Instance, p: int) -> bool:
    """True iff both instances come from one row whose predicate relates them."""
    if first.row.row_id != second.row.row_id or not first.row.has_equivalence:
        return False
    return equivalence(first.row.row_id, first.params, second.params, p)


def _pairs(instances: list[Instance]) -> list[tuple[Instance, Instance]]:
    by_family: dict[str, list[Instance]] = {}
    for instance in instances:
        by_family.setdefault(instance.row.family, []).append(instance)
    return [
        pair
        for members in by_family.values()
        for pair in itertools.combinations(members, 2)
    ]


def pairwise_distinctness(
    p: int,
    sample: int | None = None,
    seed: int = 0,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> DistinctnessReport:
    """Compare every same-family pair of instantiations over F_p.

    Args:
        p: Characteristic
        sample: Compare only this many pairs, drawn with ``seed``
        seed: Seed for the sample
        budget: Search limits and ladder
    """
    pairs = _pairs(instantiate_all(p))
    if sample is not None and sample < len(pairs):
        pairs = random.Random(seed).sample(pairs, sample)

    witnesses: list[Witness] = []
    counterexamples: list[str] = []
    undecided: list[str] = []
    for first, second in pairs:
        label = f"{first.label} vs {second.label}"
        try:
            if declared_isomorphic(first, second, p):
                result = ladder_search(first.restricted, second.restricted, budget)
                if result is None:
                    counterexamples.append(
                        f"{label}: declared isomorphic, no witness found"
                    )
                else:
                    witnesses.append(Witness(first.label, second.label, result.degree))
            elif (
                restricted_isomorphic(first.restricted, second.restricted, budget)
                is not None
            ):
                counterexamples.append(f"{label}: isomorphic over F_{p}")
        except BudgetExhaustedError as e:
            undecided.append(f"{label}: {e.message}")

    logger.info(
        "pairwise distinctness checked",
        p=p,
        compared=len(pairs),
        witnesses=len(witnesses),
        counterexamples=len(counterexamples),
        undecided=len(undecided),
    )
    return DistinctnessReport(
        p,
        len(pairs),
        tuple(witnesses),
        tuple(sorted(counterexamples)),
        tuple(sorted(undecided)),
    )
