"""Closed-form identities behind the classification, checked exhaustively.

Every suite enumerates its whole parameter range at one characteristic and
returns a ``SuiteReport`` listing counterexamples (none expected).
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import CharacteristicError, UsageError
from ..iso_search.search import (
    DEFAULT_BUDGET,
    SearchBudget,
    automorphisms,
    is_restricted_isomorphism,
    pmaps_conjugate,
    restricted_isomorphic,
)
from ..lie_core.algebra import Coefficient, LieAlgebra, embed_coefficient
from ..lie_core.structure import is_isomorphism
from ..logging import get_logger
from ..restricted.pmap import PSemilinearMap, RestrictedLieAlgebra, conjugate
from ..substrate.fields import FieldElement, FiniteField, Vector, field_make, nth_root
from ..substrate.linalg import Matrix, det, matrix_power
from ..substrate.mpoly import RatMPoly
from ..substrate.vecpoly import VecPoly
from .equivalence import equivalence
from .families import lie_representative
from .rows import restricted_representative

logger = get_logger(__name__)

F = FieldElement
X, Y, Z, W = range(4)


@dataclass
class SuiteReport:
    name: str
    p: int | None
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def check(self, condition: bool, description: Callable[[], str]) -> None:
        self.checked += 1
        if not condition:
            self.counterexamples.append(description())

    def finish(self) -> SuiteReport:
        self.counterexamples.sort()
        logger.info(
            "suite finished",
            suite=self.name,
            p=self.p,
            checked=self.checked,
            counterexamples=len(self.counterexamples),
        )
        return self


def _matrix(lie_field: FiniteField, columns: Sequence[Sequence[Coefficient]]) -> Matrix:
    return Matrix.from_columns(
        lie_field,
        [tuple(embed_coefficient(lie_field, c) for c in column) for column in columns],
    )


def _vector(lie_field: FiniteField, coefficients: Sequence[Coefficient]) -> Vector:
    return tuple(embed_coefficient(lie_field, c) for c in coefficients)


def _combine(lie_field: FiniteField, terms: Iterable[tuple[F | int, Vector]]) -> Vector:
    pairs = list(terms)
    return lie_field.combine(
        [embed_coefficient(lie_field, c) for c, _ in pairs], [v for _, v in pairs], 4
    )


def _elements(lie_field: FiniteField) -> list[F]:
    return [F(lie_field, a) for a in lie_field.elements()]


def _basis(lie_field: FiniteField) -> tuple[Vector, ...]:
    return tuple(lie_field.basis_vector(4, i) for i in range(4))


def _row_maps(
    row_ids: Sequence[str], lam_rows: Sequence[str], lie_field: FiniteField
) -> list[PSemilinearMap]:
    maps = [restricted_representative(r, None, lie_field).pmap for r in row_ids]
    for row_id in lam_rows:
        maps.extend(
            restricted_representative(row_id, {"lam": lam}, lie_field).pmap
            for lam in lie_field.elements()
        )
    return maps


# Suite: powers of ad(u0 T + u1) on gl2


def _ad_series(
    algebra: LieAlgebra, u0: Vector, u1: Vector, start: Vector, times: int
) -> VecPoly:
    current = VecPoly.constant(algebra.field, start)
    for _ in range(times):
        leading = current.map(lambda v: algebra.bracket_vectors(u0, v)).shift()
        current = leading + current.map(lambda v: algebra.bracket_vectors(u1, v))
    return current


def _scalar_power(lie_field: FiniteField, coefficients: list[int], e: int) -> list[int]:
    result = [1]
    for _ in range(e):
        product = [0] * (len(result) + len(coefficients) - 1)
        for i, a in enumerate(result):
            for j, b in enumerate(coefficients):
                product[i + j] = lie_field.add(product[i + j], lie_field.mul(a, b))
        result = product
    return result


def suite_ad_power(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("adT2", p)
    algebra = lie_representative("gl2", None, lie_field)
    bx, by, bz, _ = _basis(lie_field)
    half = F(lie_field, lie_field.half)
    for a, b, c in itertools.product(_elements(lie_field), repeat=3):
        ax = lie_field.vec_scale(a.value, bx)
        byv = lie_field.vec_scale(b.value, by)
        cz = lie_field.vec_scale(c.value, bz)

        got = _ad_series(algebra, ax, byv, ax, p - 1)
        k = (a * b) ** ((p - 1) // 2)
        expected = VecPoly.monomial(
            lie_field, lie_field.vec_scale((half * k).value, ax), (p - 1) // 2
        ) + VecPoly.monomial(
            lie_field, lie_field.vec_scale((-half * k).value, byv), (p - 3) // 2
        )
        report.check(got == expected, lambda: f"first identity fails at a={a}, b={b}")

        got = _ad_series(algebra, cz, lie_field.vec_add(ax, byv), cz, p - 1)
        ab = (a * b).value
        c2 = (c * c).value
        factor = _scalar_power(lie_field, [ab, 0, c2], (p - 3) // 2)
        expected = VecPoly(lie_field, 4, ())
        for degree, r in enumerate(factor):
            if not r:
                continue
            expected = expected + VecPoly.monomial(
                lie_field, lie_field.vec_scale(lie_field.mul(r, ab), cz), degree
            )
            expected = expected + VecPoly.monomial(
                lie_field,
                lie_field.vec_scale(
                    lie_field.neg(lie_field.mul(r, c2)), lie_field.vec_add(ax, byv)
                ),
                degree + 1,
            )
        report.check(
            got == expected, lambda: f"second identity fails at a={a}, b={b}, c={c}"
        )
    return report.finish()


# Suite: the p-th power on gl2


def suite_gl2_power(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("gl2_power", p)
    bx, by, bz, _ = _basis(lie_field)
    maps = _row_maps(("gl2.1", "gl2.2", "gl2.3", "gl2.4"), ("gl2.5",), lie_field)
    for pmap in maps:
        fx, fy, fz, fw = pmap.images
        for a, b, c, d in itertools.product(_elements(lie_field), repeat=4):
            got = pmap.evaluate_vector((a.value, b.value, c.value, d.value))
            e = (c * c + a * b) ** ((p - 1) // 2)
            expected = _combine(
                lie_field,
                (
                    (a**p, fx),
                    (b**p, fy),
                    (c**p, fz),
                    (d**p, fw),
                    (e * a, bx),
                    (e * b, by),
                    ((e - c ** (p - 1)) * c, bz),
                ),
            )
            report.check(
                got == expected,
                lambda: f"{pmap.describe()}: fails at ({a}, {b}, {c}, {d})",
            )
    return report.finish()


# Suite: p-th powers of automorphic images on gl2


def suite_gl2_automorphisms(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("gl2_phi", p)
    algebra = lie_representative("gl2", None, lie_field)
    _, _, bz, _ = _basis(lie_field)
    maps = _row_maps(("gl2.1", "gl2.2", "gl2.3", "gl2.4"), ("gl2.5",), lie_field)
    for automorphism in automorphisms(algebra, budget):
        matrix = automorphism.matrix
        described = automorphism.describe()
        a, b, c = (tuple(F(lie_field, v) for v in matrix.column(j)) for j in range(3))
        report.check(
            (a[0] * a[1] + a[2] * a[2]).is_zero and (b[0] * b[1] + b[2] * b[2]).is_zero,
            lambda: f"images of x, y are not nilpotent under {described}",
        )
        report.check(
            (c[0] * c[1] + c[2] * c[2] - 1).is_zero,
            lambda: f"image of z has the wrong determinant under {described}",
        )
        block = Matrix(lie_field, 3, 3, tuple(row[:3] for row in matrix.rows[:3]))
        report.check(
            det(block) == 1, lambda: f"det of the sl2 block is not 1 for {described}"
        )

        for pmap in maps:
            fx, fy, fz, _ = pmap.images
            images = [pmap.evaluate_vector(matrix.column(j)) for j in range(3)]
            for name, coefficients, image in (("x", a, images[0]), ("y", b, images[1])):
                expected = _combine(
                    lie_field,
                    (
                        (coefficients[0] ** p, fx),
                        (coefficients[1] ** p, fy),
                        (coefficients[2] ** p, fz),
                        (-(coefficients[2] ** p), bz),
                    ),
                )
                report.check(
                    image == expected,
                    lambda: f"phi({name})^[p] fails for {described}, {pmap.describe()}",
                )
            expected = _combine(
                lie_field,
                (
                    (c[0] ** p, fx),
                    (c[1] ** p, fy),
                    (c[2] ** p, fz),
                    (c[0], _basis(lie_field)[X]),
                    (c[1], _basis(lie_field)[Y]),
                    (c[2] - c[2] ** p, bz),
                ),
            )
            report.check(
                images[2] == expected,
                lambda: f"phi(z)^[p] fails for {described}, {pmap.describe()}",
            )
    return report.finish()


# Suite: the p-th power on N4


def suite_n4_power(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("n4_power", p)
    bx, by, bz, _ = _basis(lie_field)
    half = F(lie_field, lie_field.half)
    maps = _row_maps(("N4.1", "N4.2", "N4.3", "N4.4"), (), lie_field)
    for pmap in maps:
        fx, fy, fz, fw = pmap.images
        for a, b, c, d in itertools.product(_elements(lie_field), repeat=4):
            got = pmap.evaluate_vector((a.value, b.value, c.value, d.value))
            expected = _combine(
                lie_field,
                (
                    (a**p, fx),
                    (b**p, fy),
                    (c**p, fz),
                    (d**p, fw),
                    (d ** (p - 1) * a, bx),
                    (d ** (p - 1) * c, bz),
                    (-half * d ** (p - 2) * (a * a - c * c), by),
                ),
            )
            report.check(
                got == expected,
                lambda: f"{pmap.describe()}: fails at ({a}, {b}, {c}, {d})",
            )
    return report.finish()


# Suite: p-th power of ad w on N3


def suite_n3_adjoint(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("adwLi", p)
    half = F(lie_field, lie_field.half)
    for xi in _elements(lie_field):
        block = Matrix.from_rows(lie_field, [[1, 1], [xi.value, 0]])
        algebra = lie_representative("N3", {"xi": xi}, lie_field)
        ad_w = algebra.ad_columns(lie_field.basis_vector(4, W))
        restricted = Matrix.from_rows(
            lie_field, [[ad_w.rows[i][j] for j in (X, Z)] for i in (X, Z)]
        )
        report.check(restricted == block, lambda: f"ad w on <x, z> differs at xi={xi}")

        eta = (4 * xi + 1) ** ((p - 1) // 2)
        expected = _matrix(
            lie_field, [[half + half * eta, xi * eta], [eta, half - half * eta]]
        )
        report.check(
            matrix_power(block, p) == expected, lambda: f"p-th power differs at xi={xi}"
        )
    return report.finish()


# Suite: a relation of the gl2 automorphism ideal over Q


def suite_gl2_ideal(p: int | None, budget: SearchBudget) -> SuiteReport:
    report = SuiteReport("groebner_a", None)
    a1, a2, a3, c1, c2, c3 = RatMPoly.generators(("a1", "a2", "a3", "c1", "c2", "c3"))
    half = Fraction(-1, 2)
    combination = (
        (a3 * (a2 * c1 - a1 * c2 - 2 * a3)).scale(half)
        + (a2 * (a1 * c3 - a3 * c1 - a1)).scale(half)
        + (a1 * (a3 * c2 - a2 * c3 - a2)).scale(half)
    )
    target = a3**2 + a1 * a2
    report.check(combination == target, lambda: f"combination gives {combination}")
    return report.finish()


# Suite: explicit Jacobson formula evaluations


def suite_jacobson_examples(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("jacobson_remarks", p)
    bx, by, bz, bw = _basis(lie_field)
    x_plus_w = lie_field.vec_add(bx, bw)
    if p == 2:
        algebra = lie_representative("L2", None, lie_field)
        got = PSemilinearMap.zero(algebra).evaluate_vector(x_plus_w)
        report.check(
            got == by, lambda: f"(x+w)^[2] = {algebra.format_vector(got)} on L2"
        )
        return report.finish()

    algebra = lie_representative("L3", None, lie_field)
    zero = PSemilinearMap.zero(algebra)
    got = zero.evaluate_vector(x_plus_w)
    report.check(got == bz, lambda: f"(x+w)^[3] = {algebra.format_vector(got)} on L3")

    phi = _matrix(lie_field, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-1, 0, 0, 1)])
    moved = conjugate(zero, phi)
    target = restricted_representative("L3.2", None, lie_field).pmap
    report.check(
        moved.images == target.images,
        lambda: f"w -> -x + w moves the zero map to {moved.describe()}",
    )
    report.notes.append(
        f"w -> -x + w moves the zero map on L3 to {moved.describe()}, the map of L3.2"
    )
    return report.finish()


# Suite: the swap x <-> y between L5(xi) and L5(1/xi)


def _swap(lie_field: FiniteField, xi: F) -> Matrix:
    return _matrix(lie_field, [(0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, xi)])


def suite_l5_swap(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("l5_tau", p)
    pairs = (("L5.2", "L5.3"), ("L5.3", "L5.2"), ("L5.6", "L5.7"), ("L5.7", "L5.6"))
    for xi in _elements(lie_field):
        if xi.is_zero or xi == 1 or xi == -1:
            continue
        swap = _swap(lie_field, xi)
        for source_id, target_id in pairs:
            source = restricted_representative(
                source_id, {"xi": xi}, lie_field, strict=False
            )
            target = restricted_representative(
                target_id, {"xi": xi.inverse()}, lie_field, strict=False
            )
            report.check(
                is_restricted_isomorphism(source, target, swap),
                lambda: f"swap is not an isomorphism {source.name} -> {target.name}",
            )
            report.check(
                restricted_isomorphic(source, target, budget) is not None,
                lambda: f"search finds no isomorphism {source.name} -> {target.name}",
            )
    return report.finish()


# Suite: conjugacy of y -> y + lam z, z -> z on L2


def _l2_lambda_witness(
    lie_field: FiniteField, lam: int, mu: int
) -> Matrix | None:
    """Conjugator from the lam map to the mu map, or None if a root is missing."""
    p = lie_field.p
    lam_e, mu_e = F(lie_field, lam), F(lie_field, mu)
    one, zero = F(lie_field, 1), F(lie_field, 0)
    if lam_e.is_zero and mu_e.is_zero:
        b2, c2, c3 = one, zero, one
    elif lam_e ** (p - 1) == -1:
        b2, c2, c3 = one, zero, mu_e / lam_e
    else:
        alpha = nth_root(lam_e, p + 1)
        beta = nth_root(mu_e, p + 1)
        if alpha is None or beta is None:
            return None
        ratio = alpha / beta
        target = ratio ** (p * (p - 1)) * (mu_e ** (p - 1) + 1) / (lam_e ** (p - 1) + 1)
        xi = nth_root(target, p - 1)
        if xi is None:
            return None
        b2 = ratio * xi
        c2 = (alpha ** (p - 1) * xi**p - beta ** (p - 1) * xi) / (alpha * beta) ** p
        c3 = xi**p / ratio
    return _matrix(
        lie_field, [(b2, 0, 0, 0), (0, b2, 0, 0), (0, c2, c3, 0), (0, 0, 0, 1)]
    )


def suite_l2_lambda(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    report = SuiteReport("p7_condition", p)
    for degree in (1, 2):
        lie_field = field_make(p, degree)
        maps = {
            lam: restricted_representative("L2.15", {"lam": lam}, lie_field)
            for lam in lie_field.elements()
        }
        for lam, mu in itertools.combinations_with_replacement(lie_field.elements(), 2):
            first, second = maps[lam], maps[mu]
            found = pmaps_conjugate(first.algebra, first.pmap, second.pmap, budget)
            if found is not None:
                report.check(
                    equivalence("L2.15", {"lam": lam}, {"lam": mu}, p, lie_field),
                    lambda: f"{first.name} ~ {second.name} over {lie_field} "
                    "without the lambda relation",
                )

    prime = field_make(p)
    for lam, mu in itertools.product(prime.elements(), repeat=2):
        if not equivalence("L2.15", {"lam": lam}, {"lam": mu}, p):
            continue
        for degree in budget.ladder:
            lie_field = field_make(p, degree)
            witness = _l2_lambda_witness(lie_field, lam, mu)
            if witness is None:
                continue
            source = restricted_representative("L2.15", {"lam": lam}, lie_field)
            target = restricted_representative("L2.15", {"lam": mu}, lie_field)
            report.check(
                is_restricted_isomorphism(source, target, witness),
                lambda: f"constructed conjugator fails for lam={lam}, mu={mu} "
                f"over {lie_field}",
            )
            break
        else:
            report.check(
                False, lambda: f"no roots for lam={lam}, mu={mu} on the ladder"
            )
    return report.finish()


# Suite: conjugacy of x -> y + lam z on L4 against the GL2(F_p) criterion


def suite_l4_lambda(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    report = SuiteReport("p10_condition", p)
    degrees = (1, 2) if p == 2 else (1,)
    for degree in degrees:
        lie_field = field_make(p, degree)
        maps = {
            lam: restricted_representative("L4.11", {"lam": lam}, lie_field)
            for lam in lie_field.elements()
        }
        for lam, mu in itertools.product(lie_field.elements(), repeat=2):
            first, second = maps[lam], maps[mu]
            conjugator = pmaps_conjugate(first.algebra, first.pmap, second.pmap, budget)
            found = conjugator is not None
            predicted = equivalence("L4.11", {"lam": lam}, {"lam": mu}, p, lie_field)
            report.check(
                found == predicted,
                lambda: f"{first.name} vs {second.name} over {lie_field}: "
                f"search {found}, criterion {predicted}",
            )
    return report.finish()


# Suite: explicit conjugators on gl2


def _gl2_shifted_map(algebra: LieAlgebra, mu: F, lam: F) -> PSemilinearMap:
    lie_field = algebra.field
    return PSemilinearMap(
        algebra,
        (
            _vector(lie_field, (0, 0, 0, 1)),
            _vector(lie_field, (0, 0, 0, mu)),
            _vector(lie_field, (0, 0, 1, 1)),
            _vector(lie_field, (0, 0, 0, lam)),
        ),
    )


def _gl2_witness(
    lie_field: FiniteField, mu: F, lam: F
) -> tuple[Matrix, str, F | None] | None:
    p = lie_field.p
    disc = 4 * mu + 1
    if not disc.is_zero:
        s = nth_root(disc, 2 * p)
        if s is None:
            return None
        quarter = F(lie_field, lie_field.from_int(4)).inverse()
        columns = [
            (1, -(s**-2), s**-1, 0),
            (
                -((s - 1) ** 2) * quarter,
                (s + 1) ** 2 * quarter * s**-2,
                (s * s - 1) * quarter * s**-1,
                0,
            ),
            (1 - s, -(s + 1) * s**-2, s**-1, 0),
            (0, 0, 0, s ** (-p)),
        ]
        return _matrix(lie_field, columns), "gl2.5", disc ** ((p - 1) // 2) * lam
    if lam.is_zero:
        columns = [(-4, 1, -2, 0), (1, 0, 0, 0), (-4, 0, -1, 0), (0, 0, 0, -4)]
        return _matrix(lie_field, columns), "gl2.2", None
    s = nth_root(lam, p * (p - 1))
    if s is None:
        return None
    columns = [
        (-4 * s, s**-1, -2, 0),
        (s, 0, 0, 0),
        (-4 * s, 0, -1, 0),
        (0, 0, 0, -4 * s**p),
    ]
    return _matrix(lie_field, columns), "gl2.4", None


def suite_gl2_witnesses(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    report = SuiteReport("gl2_witnesses", p)
    lie_field = field_make(p, p - 1)
    algebra = lie_representative("gl2", None, lie_field)
    prime = [F(lie_field, a) for a in range(p)]
    for mu, lam in itertools.product(prime, repeat=2):
        source = RestrictedLieAlgebra(algebra, _gl2_shifted_map(algebra, mu, lam))
        found = _gl2_witness(lie_field, mu, lam)
        if found is None:
            report.check(False, lambda: f"missing root for mu={mu}, lam={lam}")
            continue
        witness, row_id, new_lam = found
        params = {"lam": new_lam} if new_lam is not None else None
        target = restricted_representative(row_id, params, lie_field)
        report.check(
            is_restricted_isomorphism(source, target, witness),
            lambda: f"conjugator for mu={mu}, lam={lam} does not reach {target.name}",
        )

    if p == 3:
        _check_scaling(report, budget)
    return report.finish()


def _check_scaling(report: SuiteReport, budget: SearchBudget) -> None:
    """Over F_3, automorphisms reaching the z -> z + w form scale w by d with
    d^2 (4 mu + 1) = 1."""
    lie_field = field_make(3)
    algebra = lie_representative("gl2", None, lie_field)
    found = list(automorphisms(algebra, budget))
    for mu, lam in itertools.product(_elements(lie_field), repeat=2):
        disc = 4 * mu + 1
        if disc.is_zero:
            continue
        pmap = _gl2_shifted_map(algebra, mu, lam)
        for automorphism in found:
            moved = conjugate(pmap, automorphism.matrix)
            fx, fy, fz, fw = moved.images
            reaches = (
                not any(fx)
                and not any(fy)
                and fz == _vector(lie_field, (0, 0, 1, 1))
                and fw[:3] == (0, 0, 0)
            )
            if not reaches:
                continue
            d = F(lie_field, automorphism.matrix.column(W)[W])
            report.check(
                d * d * disc == 1,
                lambda: f"d={d} violates d^2 (4 mu + 1) = 1 at mu={mu}, lam={lam}",
            )


# Suite: witnesses in small characteristic


def suite_small_char(p: int | None, budget: SearchBudget) -> SuiteReport:
    assert p is not None
    lie_field = field_make(p)
    report = SuiteReport("small_char", p)
    if p == 2:
        l2 = lie_representative("L2", None, lie_field)
        shift = PSemilinearMap.from_images(l2, {"y": {"y": 1, "z": 1}})
        phi = _matrix(
            lie_field, [(1, -1, 0, -1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        )
        target = restricted_representative("L2.12", None, lie_field).pmap.on(l2)
        report.check(
            conjugate(shift, phi) == target,
            lambda: "x -> x - y - w does not move y -> y + z to L2.12",
        )
        fixed = PSemilinearMap.from_images(l2, {"z": {"z": 1}})
        psi = _matrix(
            lie_field, [(1, 0, 0, -1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        )
        target = restricted_representative("L2.14", None, lie_field).pmap.on(l2)
        report.check(
            conjugate(fixed, psi) == target,
            lambda: "x -> x - w does not move z -> z to L2.14",
        )
        gl2 = lie_representative("gl2", None, lie_field)
        iso = _matrix(
            lie_field, [(0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
        )
        report.check(
            is_isomorphism(gl2, l2, iso), lambda: "gl2 is not isomorphic to L2 at p=2"
        )
    else:
        half = F(lie_field, lie_field.half)
        w1 = lie_representative("W1", None, lie_field)
        gl2 = lie_representative("gl2", None, lie_field)
        iso = _matrix(
            lie_field, [(1, 0, 0, 0), (0, 0, half, 0), (0, -half, 0, 0), (0, 0, 0, 1)]
        )
        report.check(
            is_isomorphism(w1, gl2, iso),
            lambda: f"W1 is not isomorphic to gl2 at p={p}",
        )

    for xi in _elements(lie_field):
        if xi.is_zero:
            continue
        source = lie_representative("L5", {"xi": xi}, lie_field)
        target = lie_representative("L5", {"xi": xi.inverse()}, lie_field)
        report.check(
            is_isomorphism(source, target, _swap(lie_field, xi)),
            lambda: f"swap is not an isomorphism {source.name} -> {target.name}",
        )
    return report.finish()


@dataclass(frozen=True)
class Suite:
    name: str
    runner: Callable[[int | None, SearchBudget], SuiteReport]
    defaults: tuple[int, ...]
    admits: Callable[[int], bool]
    summary: str


def _odd(p: int) -> bool:
    return p >= 3


SUITES: dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("adT2", suite_ad_power, (3, 5), _odd, "powers of ad(u0 T + u1) on gl2"),
        Suite(
            "gl2_power",
            suite_gl2_power,
            (3, 5),
            _odd,
            "p-th power of a general gl2 element",
        ),
        Suite(
            "gl2_phi",
            suite_gl2_automorphisms,
            (3,),
            lambda p: p == 3,
            "p-th powers of automorphic images of x, y, z on gl2",
        ),
        Suite(
            "n4_power",
            suite_n4_power,
            (3, 5),
            _odd,
            "p-th power of a general N4 element",
        ),
        Suite("adwLi", suite_n3_adjoint, (3, 5, 7), _odd, "p-th power of ad w on N3"),
        Suite(
            "groebner_a",
            suite_gl2_ideal,
            (),
            lambda p: True,
            "a3^2 + a1 a2 in the ideal",
        ),
        Suite(
            "jacobson_remarks",
            suite_jacobson_examples,
            (2, 3),
            lambda p: p in (2, 3),
            "(x + w)^[p] on L2 and L3",
        ),
        Suite("l5_tau", suite_l5_swap, (5, 7), lambda p: p >= 5, "L5(xi) vs L5(1/xi)"),
        Suite(
            "p7_condition",
            suite_l2_lambda,
            (2, 3),
            lambda p: p in (2, 3),
            "conjugacy of y -> y + lam z on L2",
        ),
        Suite(
            "p10_condition",
            suite_l4_lambda,
            (2, 3),
            lambda p: p in (2, 3),
            "conjugacy of x -> y + lam z on L4",
        ),
        Suite(
            "gl2_witnesses",
            suite_gl2_witnesses,
            (3, 5),
            lambda p: p in (3, 5),
            "conjugators onto the gl2 rows",
        ),
        Suite(
            "small_char",
            suite_small_char,
            (2, 3),
            lambda p: True,
            "isomorphism witnesses",
        ),
    )
}

SUITE_ALIASES = {
    "ad_power": "adT2",
    "gl2_automorphisms": "gl2_phi",
    "n3_adjoint": "adwLi",
    "gl2_ideal": "groebner_a",
    "jacobson_examples": "jacobson_remarks",
    "l5_swap": "l5_tau",
    "l2_lambda": "p7_condition",
    "l4_lambda": "p10_condition",
}


def get_suite(name: str) -> Suite:
    """Look up an identity suite by name or descriptive alias.

    Raises:
        UsageError: If the suite is unknown
    """
    suite = SUITES.get(SUITE_ALIASES.get(name, name))
    if suite is None:
        supported = ", ".join(SUITES.keys())
        raise UsageError(f"Unknown suite: {name}. Supported: {supported}")
    return suite


def identity_suite(
    name: str, p: int | None = None, budget: SearchBudget = DEFAULT_BUDGET
) -> list[SuiteReport]:
    """Run one suite at p, or at each of its default characteristics.

    Raises:
        UsageError: If the suite is unknown
        CharacteristicError: If the suite does not apply at p
    """
    suite = get_suite(name)
    if not suite.defaults:
        return [suite.runner(None, budget)]
    if p is None:
        return [suite.runner(q, budget) for q in suite.defaults]
    field_make(p)
    if not suite.admits(p):
        raise CharacteristicError(f"Suite {name} does not apply at p={p}")
    return [suite.runner(p, budget)]


def run_suites(
    names: Sequence[str] | None = None,
    p: int | None = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> list[SuiteReport]:
    """Run several suites; with p given, suites that do not apply at p are skipped."""
    reports: list[SuiteReport] = []
    for name in names or tuple(SUITES.keys()):
        suite = get_suite(name)
        if p is not None and suite.defaults and not suite.admits(p):
            logger.debug("suite skipped", suite=name, p=p)
            continue
        reports.extend(identity_suite(name, p, budget))
    return reports
