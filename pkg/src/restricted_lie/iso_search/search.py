"""Backtracking search for isomorphisms of (restricted) Lie algebras.

A witness is built one column at a time: column j is the image of e_j.
Every constraint on the columns is linear in the last column it involves:

- bracket relations ``phi([e_i, e_j]) = [phi(e_i), phi(e_j)]``;
- ``phi(Z(L1))`` inside ``Z(L2)`` and ``phi([L1, L1])`` inside ``[L2, L2]``;
- p-map transport ``phi(f_k) = phi(e_k)^[p]``, except when the last column
  is ``phi(e_k)`` itself, where it becomes a filter on the candidates.

At each node the unassigned column with the smallest affine candidate space
is filled next, ties broken by how many structure relations mention it.
Candidates are tried in a fixed order, so runs are reproducible.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass

from ..errors import (
    BudgetExhaustedError,
    CheckFailure,
    NotAnAutomorphismError,
    ValidationError,
)
from ..lie_core.algebra import LieAlgebra, LieElement
from ..lie_core.structure import center, derived, is_automorphism, is_isomorphism
from ..logging import get_logger
from ..restricted.invariants import invariant_profile
from ..restricted.pmap import PSemilinearMap, RestrictedLieAlgebra
from ..substrate.fields import FiniteField, Vector, field_make
from ..substrate.linalg import Matrix, Subspace, solve_affine

logger = get_logger(__name__)

PROFILE_SCREEN_ORDER = 4096
_CLOCK_INTERVAL = 256


@dataclass(frozen=True)
class SearchBudget:
    """Limits on one search: candidates tried, wall-clock seconds, ladder."""

    max_candidates: int = 2_000_000
    time_limit: float | None = None
    ladder: tuple[int, ...] = (1, 2, 4)

    def __post_init__(self) -> None:
        if self.max_candidates < 1:
            raise ValidationError("max_candidates must be positive")
        if self.time_limit is not None and self.time_limit < 0:
            raise ValidationError("time_limit must be nonnegative")
        ascending = list(self.ladder) == sorted(set(self.ladder))
        if not self.ladder or not ascending or self.ladder[0] < 1:
            raise ValidationError(
                f"Ladder must be nonempty and ascending, got {self.ladder}"
            )


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Automorphism:
    """An invertible bracket-preserving matrix; column j is phi(e_j)."""

    algebra: LieAlgebra
    matrix: Matrix

    def __post_init__(self) -> None:
        if not is_automorphism(self.algebra, self.matrix):
            raise NotAnAutomorphismError(
                f"Matrix is not an automorphism of {self.algebra!r}"
            )

    def image(self, which: int | str) -> LieElement:
        index = self.algebra.index(which) if isinstance(which, str) else which
        return LieElement(self.algebra, self.matrix.column(index))

    def __call__(self, v: LieElement) -> LieElement:
        return LieElement(self.algebra, self.matrix.apply(v.coordinates))

    def describe(self) -> str:
        return describe_matrix(self.algebra, self.matrix)


def describe_matrix(algebra: LieAlgebra, matrix: Matrix) -> str:
    names = algebra.basis_names
    return ", ".join(
        f"{names[j]} -> {algebra.format_vector(matrix.column(j))}"
        for j in range(algebra.dim)
    )


class _Echelon:
    """Span of the assigned columns, for the invertibility test."""

    def __init__(
        self, lie_field: FiniteField, rows: tuple[tuple[int, Vector], ...] = ()
    ):
        self.field = lie_field
        self.rows = rows

    def reduce(self, vector: Vector) -> Vector:
        current = vector
        for pivot, row in self.rows:
            c = current[pivot]
            if c:
                current = self.field.vec_sub(current, self.field.vec_scale(c, row))
        return current

    def extended(self, reduced: Vector) -> _Echelon:
        pivot = next(i for i, a in enumerate(reduced) if a)
        row = self.field.vec_scale(self.field.inv(reduced[pivot]), reduced)
        return _Echelon(self.field, self.rows + ((pivot, row),))


@dataclass(frozen=True)
class _Constraint:
    kind: str
    involved: frozenset[int]
    vector: Vector
    extra: tuple[int, ...] = ()
    rows: tuple[Vector, ...] = ()


def _support(vector: Vector) -> set[int]:
    return {i for i, a in enumerate(vector) if a}


class _IsomorphismSearch:
    def __init__(
        self,
        source: LieAlgebra,
        target: LieAlgebra,
        budget: SearchBudget,
        source_pmap: PSemilinearMap | None = None,
        target_pmap: PSemilinearMap | None = None,
    ) -> None:
        if source.field != target.field or source.dim != target.dim:
            raise ValidationError(f"Cannot compare {source!r} with {target!r}")
        if (source_pmap is None) != (target_pmap is None):
            raise ValidationError("Both or neither p-maps must be given")
        self.source = source
        self.target = target
        self.field = source.field
        self.n = source.dim
        self.budget = budget
        self.target_pmap = target_pmap
        self.explored = 0
        self.deadline: float | None = None
        if budget.time_limit is not None:
            self.deadline = time.monotonic() + budget.time_limit
        self.feasible = True
        self.constraints = self._build(source_pmap)
        self.order = self._static_order()

    def _build(self, source_pmap: PSemilinearMap | None) -> list[_Constraint]:
        n = self.n
        constraints = []
        for i in range(n):
            for j in range(i + 1, n):
                c = self.source.structure[i][j]
                constraints.append(
                    _Constraint("bracket", frozenset({i, j} | _support(c)), c, (i, j))
                )
        for space1, space2 in (
            (center(self.source), center(self.target)),
            (derived(self.source), derived(self.target)),
        ):
            if space1.dim != space2.dim:
                self.feasible = False
            annihilator = space2.annihilator().basis if space2.dim < n else ()
            if not annihilator:
                continue
            for z in space1.basis:
                constraints.append(
                    _Constraint("subspace", frozenset(_support(z)), z, rows=annihilator)
                )
        if source_pmap is not None:
            for k, f in enumerate(source_pmap.images):
                involved = frozenset({k} | _support(f))
                constraints.append(_Constraint("pmap", involved, f, (k,)))
        return constraints

    def _static_order(self) -> list[int]:
        mentions = [0] * self.n
        for i in range(self.n):
            for j in range(i + 1, self.n):
                c = self.source.structure[i][j]
                if any(c):
                    for index in {i, j} | _support(c):
                        mentions[index] += 1
        return sorted(range(self.n), key=lambda index: (-mentions[index], index))

    def _tick(self) -> None:
        self.explored += 1
        if self.explored > self.budget.max_candidates:
            raise BudgetExhaustedError(
                f"Search exceeded {self.budget.max_candidates} candidates",
                self.explored,
            )
        if self.deadline is not None and self.explored % _CLOCK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhaustedError(
                    f"Search exceeded {self.budget.time_limit}s", self.explored
                )

    def _equations(
        self, t: int, assigned: dict[int, Vector]
    ) -> tuple[list[Vector], list[int]] | None:
        """Linear equations A m_t = b on column t, or None if inconsistent."""
        lie_field = self.field
        n = self.n
        rows: list[Vector] = []
        rhs: list[int] = []

        def add(matrix_rows: tuple[Vector, ...] | list[Vector], b: Vector) -> bool:
            for row, value in zip(matrix_rows, b, strict=True):
                if any(row):
                    rows.append(tuple(row))
                    rhs.append(value)
                elif value:
                    return False
            return True

        for constraint in self.constraints:
            involved = constraint.involved
            if t not in involved or not involved - {t} <= assigned.keys():
                continue
            c = constraint.vector
            others = [k for k in _support(c) if k != t]
            partial = lie_field.combine(
                [c[k] for k in others], [assigned[k] for k in others], n
            )

            if constraint.kind == "bracket":
                i, j = constraint.extra
                a = Matrix.identity(lie_field, n).scale(c[t])
                if t == i:
                    a = a + self.target.ad_columns(assigned[j])
                elif t == j:
                    a = a - self.target.ad_columns(assigned[i])
                b = lie_field.vec_neg(partial)
                if t not in (i, j):
                    b = lie_field.vec_add(
                        b, self.target.bracket_vectors(assigned[i], assigned[j])
                    )
                ok = add(a.rows, b)
            elif constraint.kind == "subspace":
                a_rows = [lie_field.vec_scale(c[t], row) for row in constraint.rows]
                b = tuple(
                    lie_field.neg(lie_field.dot(row, partial))
                    for row in constraint.rows
                )
                ok = add(a_rows, b)
            else:
                (k,) = constraint.extra
                if k == t:
                    continue
                assert self.target_pmap is not None
                image = self.target_pmap.evaluate_vector(assigned[k])
                a = Matrix.identity(lie_field, n).scale(c[t])
                ok = add(a.rows, lie_field.vec_sub(image, partial))
            if not ok:
                return None
        return rows, rhs

    def _candidate_space(
        self, t: int, assigned: dict[int, Vector]
    ) -> tuple[Vector, Subspace] | None:
        equations = self._equations(t, assigned)
        if equations is None:
            return None
        rows, rhs = equations
        if not rows:
            return (0,) * self.n, Subspace.full(self.field, self.n)
        return solve_affine(Matrix(self.field, len(rows), self.n, tuple(rows)), rhs)

    def _filters(
        self, t: int, assigned: dict[int, Vector]
    ) -> list[Callable[[Vector], bool]]:
        filters = []
        for constraint in self.constraints:
            if constraint.kind != "pmap" or constraint.extra != (t,):
                continue
            if not constraint.involved - {t} <= assigned.keys():
                continue
            f = constraint.vector
            target_pmap = self.target_pmap
            assert target_pmap is not None

            def check(m: Vector, f: Vector = f) -> bool:
                columns = dict(assigned)
                columns[t] = m
                support = sorted(_support(f))
                lhs = self.field.combine(
                    [f[k] for k in support], [columns[k] for k in support], self.n
                )
                return lhs == target_pmap.evaluate_vector(m)

            filters.append(check)
        return filters

    def _candidates(self, particular: Vector, directions: Subspace) -> Iterator[Vector]:
        lie_field = self.field
        elements = lie_field.elements()
        for coefficients in itertools.product(elements, repeat=directions.dim):
            yield lie_field.vec_add(
                particular, lie_field.combine(coefficients, directions.basis, self.n)
            )

    def _extend(
        self, assigned: dict[int, Vector], echelon: _Echelon
    ) -> Iterator[Matrix]:
        if len(assigned) == self.n:
            yield Matrix.from_columns(self.field, [assigned[j] for j in range(self.n)])
            return
        best: tuple[int, Vector, Subspace] | None = None
        for t in self.order:
            if t in assigned:
                continue
            space = self._candidate_space(t, assigned)
            if space is None:
                return
            if best is None or space[1].dim < best[2].dim:
                best = (t, space[0], space[1])
        assert best is not None
        t, particular, directions = best
        filters = self._filters(t, assigned)
        for m in self._candidates(particular, directions):
            self._tick()
            reduced = echelon.reduce(m)
            if not any(reduced):
                continue
            if not all(check(m) for check in filters):
                continue
            assigned[t] = m
            yield from self._extend(assigned, echelon.extended(reduced))
            del assigned[t]

    def run(self) -> Iterator[Matrix]:
        if not self.feasible:
            return
        try:
            yield from self._extend({}, _Echelon(self.field))
        finally:
            logger.debug(
                "search finished",
                source=self.source.name,
                target=self.target.name,
                explored=self.explored,
            )


def automorphisms(
    algebra: LieAlgebra, budget: SearchBudget = DEFAULT_BUDGET
) -> Iterator[Automorphism]:
    """Every automorphism of the algebra over its field of definition.

    Raises:
        BudgetExhaustedError: If the stream is cut short by the budget
    """
    for matrix in _IsomorphismSearch(algebra, algebra, budget).run():
        yield Automorphism(algebra, matrix)


def lie_isomorphism(
    source: LieAlgebra, target: LieAlgebra, budget: SearchBudget = DEFAULT_BUDGET
) -> Matrix | None:
    """An isomorphism source -> target, or None once the search is exhausted."""
    for matrix in _IsomorphismSearch(source, target, budget).run():
        if not is_isomorphism(source, target, matrix):
            raise CheckFailure(
                f"Search returned a non-isomorphism {source!r} -> {target!r}"
            )
        return matrix
    return None


def is_restricted_isomorphism(
    first: RestrictedLieAlgebra, second: RestrictedLieAlgebra, matrix: Matrix
) -> bool:
    """True iff ``matrix`` is a Lie isomorphism with phi(x^[p]) = phi(x)^[p]."""
    if not is_isomorphism(first.algebra, second.algebra, matrix):
        return False
    return all(
        matrix.apply(first.pmap.images[j])
        == second.pmap.evaluate_vector(matrix.column(j))
        for j in range(first.algebra.dim)
    )


def _profiles_differ(first: PSemilinearMap, second: PSemilinearMap) -> bool:
    algebra = first.algebra
    if algebra.field != second.field or algebra.dim != second.algebra.dim:
        return False
    if algebra.field.q**algebra.dim > PROFILE_SCREEN_ORDER:
        return False
    return invariant_profile(first) != invariant_profile(second)


def restricted_isomorphic(
    first: RestrictedLieAlgebra,
    second: RestrictedLieAlgebra,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Matrix | None:
    """An isomorphism g with g o [p]_1 o g^-1 = [p]_2, or None when none exists."""
    if _profiles_differ(first.pmap, second.pmap):
        return None
    search = _IsomorphismSearch(
        first.algebra, second.algebra, budget, first.pmap, second.pmap
    )
    for matrix in search.run():
        if not is_restricted_isomorphism(first, second, matrix):
            raise CheckFailure(
                f"Search returned a non-isomorphism {first!r} -> {second!r}"
            )
        return matrix
    return None


def pmaps_conjugate(
    algebra: LieAlgebra,
    first: PSemilinearMap,
    second: PSemilinearMap,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Automorphism | None:
    """An automorphism phi with phi o first o phi^-1 = second, or None.

    Maps with different invariant profiles are rejected without searching.
    """
    if _profiles_differ(first, second):
        return None
    matrix = restricted_isomorphic(
        RestrictedLieAlgebra(algebra, first),
        RestrictedLieAlgebra(algebra, second),
        budget,
    )
    return Automorphism(algebra, matrix) if matrix is not None else None


@dataclass(frozen=True)
class LadderResult:
    """A witness found over F_{p^degree}."""

    degree: int
    field: FiniteField
    witness: Matrix


def ladder_search(
    first: LieAlgebra | RestrictedLieAlgebra,
    second: LieAlgebra | RestrictedLieAlgebra,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> LadderResult | None:
    """Search for an isomorphism over F_{p^k} for each k of the ladder.

    None means "absent up to F_{p^k}" for the last k tried; it says nothing
    about the algebraic closure.

    Raises:
        BudgetExhaustedError: If no witness was found and some rung ran out
            of budget
    """
    if type(first) is not type(second):
        raise ValidationError("Both inputs must be Lie algebras or both restricted")
    p = first.field.p
    exhausted: BudgetExhaustedError | None = None
    for degree in budget.ladder:
        lie_field = field_make(p, degree)
        try:
            if isinstance(first, RestrictedLieAlgebra):
                assert isinstance(second, RestrictedLieAlgebra)
                witness = restricted_isomorphic(
                    first.lift(lie_field), second.lift(lie_field), budget
                )
            else:
                assert isinstance(second, LieAlgebra)
                witness = lie_isomorphism(
                    first.lift(lie_field), second.lift(lie_field), budget
                )
        except BudgetExhaustedError as e:
            logger.debug("ladder rung exhausted", degree=degree, explored=e.explored)
            exhausted = e
            continue
        logger.debug("ladder rung finished", degree=degree, found=witness is not None)
        if witness is not None:
            return LadderResult(degree, lie_field, witness)
    if exhausted is not None:
        raise exhausted
    return None
