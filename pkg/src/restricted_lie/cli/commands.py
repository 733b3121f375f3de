"""Subcommand handlers.

Each handler turns parsed arguments into library calls and fills a Report.
Library errors propagate to the app, which maps them to exit codes.
"""

from __future__ import annotations

import argparse
import dataclasses
import itertools
from pathlib import Path
from typing import Any

from ..catalog.classify import classify_l2_pmaps_p2
from ..catalog.counting import burnside_count, count_classes, s3_orbits
from ..catalog.distinct import pairwise_distinctness
from ..catalog.existence import existence_matrix
from ..catalog.families import lie_representative
from ..catalog.index import catalog_index_json, load_catalog_index
from ..catalog.rows import ROWS, parameter_set, restricted_representative
from ..catalog.suites import SUITES, run_suites
from ..catalog.tables import TABLES, compare_tables, get_table, regenerate_table
from ..errors import UsageError
from ..iso_search.parameterizations import PARAMETERIZATIONS, compare_parameterization
from ..iso_search.search import describe_matrix, ladder_search
from ..lie_core.algebra import LieAlgebra
from ..lie_core.parser import AlgebraDocument, parse_document
from ..lie_core.structure import check_jacobi
from ..restricted.pmap import (
    PSemilinearMap,
    RestrictedLieAlgebra,
    is_p_map,
    order_independent,
)
from ..restricted.invariants import invariant_profile
from ..restricted.solve import enumerate_pmaps, solve_pmaps
from ..substrate.fields import MAX_SCAN_ORDER, FiniteField, Vector, field_make
from ..substrate.linalg import Matrix
from .app import CliApp, Context
from .report import Report

app = CliApp(
    "restricted-lie",
    "Exact computations with 4-dimensional restricted Lie algebras "
    "in characteristic p.",
)


# Argument helpers


def require_p(args: argparse.Namespace) -> int:
    if args.p is None:
        raise UsageError(f"{args.command} needs -p")
    field_make(args.p)
    return int(args.p)


def field_from(args: argparse.Namespace) -> FiniteField:
    return field_make(require_p(args), args.k or 1)


def parse_params(pairs: list[str]) -> dict[str, int]:
    """``["xi=2", "eta=3"]`` -> ``{"xi": 2, "eta": 3}``."""
    params: dict[str, int] = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        name = name.strip()
        if not sep or not name:
            raise UsageError(f"Invalid parameter '{pair}'; expected NAME=VALUE")
        try:
            params[name] = int(value)
        except ValueError as e:
            raise UsageError(f"Invalid value for parameter '{name}': {value}") from e
    return params


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"Cannot read {path}: {e.strerror or e}") from e


def read_document(path: str) -> AlgebraDocument:
    return parse_document(read_text(path))


def pmap_from(algebra: LieAlgebra, images: dict[int, Vector]) -> PSemilinearMap:
    zero = (0,) * algebra.dim
    columns = tuple(images.get(j, zero) for j in range(algebra.dim))
    return PSemilinearMap(algebra, columns)


def load_source(
    args: argparse.Namespace,
) -> tuple[LieAlgebra, PSemilinearMap | None, dict[str, Any]]:
    """The algebra named by a file, ``--family`` or ``--row``, with any p-map."""
    params = parse_params(args.param)
    chosen = [source for source in (args.file, args.family, args.row) if source]
    if len(chosen) != 1:
        raise UsageError("Give exactly one of FILE, --family or --row")
    if args.file:
        document = read_document(args.file)
        algebra = document.algebra
        pmap = None
        if document.pmap_images is not None:
            pmap = pmap_from(algebra, document.pmap_images)
        return algebra, pmap, {"file": args.file, "header": document.header}

    lie_field = field_from(args)
    inputs = {"p": lie_field.p, "k": lie_field.k, "params": params}
    if args.family:
        algebra = lie_representative(args.family, params, lie_field, args.allow_broken)
        return algebra, None, {**inputs, "family": args.family}
    restricted = restricted_representative(args.row, params, lie_field, strict=False)
    return restricted.algebra, restricted.pmap, {**inputs, "row": args.row}


def _source_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", nargs="?", help="algebra file")
    parser.add_argument("--family", help="Lie family id, e.g. L5")
    parser.add_argument("--row", help="catalog row id, e.g. L2.15")
    parser.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="parameter value (repeatable)",
    )


def _columns(matrix: Matrix) -> list[list[int]]:
    return [list(column) for column in matrix.columns()]


# check


@app.command("check", "Jacobi identity and p-map verification", _source_flags)
def cmd_check(args: argparse.Namespace, ctx: Context) -> Report:
    algebra, pmap, inputs = load_source(args)
    report = Report("check", inputs)
    violations = check_jacobi(algebra)
    for violation in violations:
        report.fail("jacobi", violation.describe())
    report.result = {
        "algebra": algebra.name,
        "field": repr(algebra.field),
        "jacobi": not violations,
    }
    report.lines.append(f"{algebra.name or 'algebra'} over {algebra.field!r}")
    report.lines.append("Jacobi identity: " + ("fails" if violations else "holds"))
    if pmap is None or violations:
        return report

    valid = is_p_map(algebra, pmap)
    report.result["pmap"] = valid
    report.lines.append(f"p-map {pmap.describe()}: {'valid' if valid else 'invalid'}")
    if not valid:
        report.fail("p-map", f"{pmap.describe()} is not a p-map")
        return report
    if algebra.field.q**algebra.dim <= MAX_SCAN_ORDER:
        profile = invariant_profile(pmap, ctx.settings.profile_depth)
        report.result["profile"] = [list(dims) for dims in profile.dims]
        for r, dims in enumerate(profile.dims, start=1):
            report.lines.append(f"  r={r}: dim L, Z, [L,L] images = {dims}")
    if ctx.settings.debug_checks:
        lie_field = algebra.field
        basis = [lie_field.basis_vector(algebra.dim, j) for j in range(algebra.dim)]
        for u, v in itertools.combinations(basis, 2):
            total = lie_field.vec_add(u, v)
            if not order_independent(pmap, total):
                report.fail(
                    "order",
                    f"({algebra.format_vector(total)})^[p] depends on the basis order",
                )
    return report


# pmaps


def _pmaps_flags(parser: argparse.ArgumentParser) -> None:
    _source_flags(parser)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument(
        "--solve", action="store_true", help="describe the family (default)"
    )
    mode.add_argument("--enumerate", action="store_true", help="list every p-map")


@app.command("pmaps", "Existence and number of p-maps on an algebra", _pmaps_flags)
def cmd_pmaps(args: argparse.Namespace, ctx: Context) -> Report:
    algebra, _, inputs = load_source(args)
    report = Report("pmaps", {**inputs, "enumerate": bool(args.enumerate)})
    family = solve_pmaps(algebra)
    report.result = {
        "algebra": algebra.name,
        "exists": family.exists,
        "count": family.count,
        "centerDim": family.center.dim,
        "description": family.describe(),
    }
    name = algebra.name or "algebra"
    report.lines.append(f"{name} over {algebra.field!r}: {family.describe()}")
    report.lines.append(f"count: {family.count}")
    if args.enumerate:
        listed = [pmap.describe() for pmap in enumerate_pmaps(algebra, family)]
        report.result["pmaps"] = listed
        report.lines.extend(f"  {entry}" for entry in listed)
        if len(listed) != family.count:
            report.fail(
                "count", f"enumerated {len(listed)} p-maps, expected {family.count}"
            )
    return report


# tables


def _tables_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--table",
        action="append",
        help="table number 1..5 or family ("
        + ", ".join(f"{n}={spec.family}" for n, spec in TABLES.items())
        + "), repeatable",
    )


@app.command("tables", "Regenerate invariant tables and diff them", _tables_flags)
def cmd_tables(args: argparse.Namespace, ctx: Context) -> Report:
    names = args.table or [str(n) for n in TABLES]
    report = Report("tables", {"tables": names, "p": args.p})
    regenerated: dict[str, Any] = {}
    for name in names:
        spec = get_table(name)
        p = args.p or spec.default_p
        table = regenerate_table(spec.number, p)
        regenerated[str(spec.number)] = {
            "family": spec.family,
            "p": table.p,
            "columns": list(table.columns),
            "rows": {row.label: list(row.values) for row in table.rows},
        }
        report.lines.append(f"Table {spec.number}: {spec.family} (p={table.p})")
        report.lines.append(table.format())
        # Published values are for the default characteristic only.
        if p == spec.default_p:
            for mismatch in compare_tables(spec.number, p):
                report.fail("table", f"{spec.family}: {mismatch}")
    report.result = {"tables": regenerated}
    return report


# catalog


def _catalog_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--count", action="store_true", help="count isomorphism classes"
    )


@app.command("catalog", "Rows valid at p and the number of classes", _catalog_flags)
def cmd_catalog(args: argparse.Namespace, ctx: Context) -> Report:
    p = require_p(args)
    report = Report("catalog", {"p": p, "count": bool(args.count)})
    rows = []
    for row in ROWS:
        if not row.condition.admits(p):
            continue
        size = "infinite" if row.is_infinite else str(len(parameter_set(row.row_id, p)))
        rows.append({"id": row.row_id, "images": row.describe(), "parameters": size})
        report.lines.append(f"{row.row_id:<8} {row.describe():<40} {size}")
    report.result = {"rows": rows}
    if not args.count:
        return report

    count = count_classes(p)
    report.result.update(
        {
            "total": count.total,
            "breakdown": count.breakdown,
            "perRow": count.per_row,
            "excluded": list(count.excluded),
            "individual": count.individual,
            "formula": count.formula,
        }
    )
    breakdown = ", ".join(f"{family} {n}" for family, n in count.breakdown.items())
    report.lines.append(f"classes at p={p}: {count.total} ({breakdown})")
    report.lines.append(f"excluded infinite rows: {', '.join(count.excluded)}")
    for note in count.notes:
        report.note("count", note)
    return report


# conjugate


def _conjugate_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("first", help="algebra file")
    parser.add_argument("second", help="algebra file")


@app.command(
    "conjugate",
    "Search for a (restricted) isomorphism between two files",
    _conjugate_flags,
)
def cmd_conjugate(args: argparse.Namespace, ctx: Context) -> Report:
    first, second = read_document(args.first), read_document(args.second)
    budget = ctx.budget
    if args.k is not None:
        budget = dataclasses.replace(budget, ladder=(args.k,))
    report = Report(
        "conjugate",
        {"first": args.first, "second": args.second, "ladder": list(budget.ladder)},
    )
    if first.pmap_images is None and second.pmap_images is None:
        result = ladder_search(first.algebra, second.algebra, budget)
    elif first.pmap_images is not None and second.pmap_images is not None:
        result = ladder_search(
            RestrictedLieAlgebra(
                first.algebra, pmap_from(first.algebra, first.pmap_images)
            ),
            RestrictedLieAlgebra(
                second.algebra, pmap_from(second.algebra, second.pmap_images)
            ),
            budget,
        )
    else:
        raise UsageError("Either both files or neither must declare a p-map")

    if result is None:
        report.result = {"isomorphic": False}
        report.fail(
            "conjugate", f"no isomorphism over F_(p^k) for k in {list(budget.ladder)}"
        )
        return report
    witness = describe_matrix(first.algebra.lift(result.field), result.witness)
    report.result = {
        "isomorphic": True,
        "degree": result.degree,
        "witness": _columns(result.witness),
    }
    report.lines.append(f"isomorphic over {result.field!r}: {witness}")
    return report


# suite


def _suite_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("name", nargs="*", help=f"suites to run ({', '.join(SUITES)})")


@app.command("suite", "Run closed-form identity suites", _suite_flags)
def cmd_suite(args: argparse.Namespace, ctx: Context) -> Report:
    names = args.name or list(SUITES)
    report = Report("suite", {"suites": names, "p": args.p})
    results = []
    for outcome in run_suites(names, args.p, ctx.budget):
        at = "" if outcome.p is None else f" p={outcome.p}"
        status = "pass" if outcome.passed else "FAIL"
        report.lines.append(f"{outcome.name}{at}: {outcome.checked} checks, {status}")
        results.append(
            {
                "name": outcome.name,
                "p": outcome.p,
                "checked": outcome.checked,
                "counterexamples": list(outcome.counterexamples),
            }
        )
        for counterexample in outcome.counterexamples:
            report.fail(outcome.name, counterexample, p=outcome.p)
        for note in outcome.notes:
            report.note(outcome.name, note, p=outcome.p)
    report.result = {"suites": results}
    return report


# orbits


@app.command("orbits", "S3-orbits on pairs of units and the Burnside count")
def cmd_orbits(args: argparse.Namespace, ctx: Context) -> Report:
    p = require_p(args)
    report = Report("orbits", {"p": p})
    orbits = s3_orbits(p)
    burnside = burnside_count(p)
    report.result = {
        "count": orbits.count,
        "formula": orbits.formula,
        "orbits": [[list(pair) for pair in orbit] for orbit in orbits.orbits],
        "fixedPoints": burnside.fixed_points,
    }
    for orbit in orbits.orbits:
        report.lines.append(" ".join(f"({a},{b})" for a, b in orbit))
    report.lines.append(f"{orbits.count} orbits (closed form {orbits.formula})")
    if burnside.count != orbits.count:
        report.fail(
            "burnside", f"Burnside gives {burnside.count}, closure gives {orbits.count}"
        )
    return report


# index


def _index_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--load", metavar="FILE", help="reload an index and compare at -p"
    )


@app.command("index", "Emit or reload the JSON catalog index", _index_flags)
def cmd_index(args: argparse.Namespace, ctx: Context) -> Report:
    if not args.load:
        report = Report("index", {})
        report.result = {"index": catalog_index_json(indent=None)}
        report.lines.append(catalog_index_json())
        return report

    p = require_p(args)
    report = Report("index", {"load": args.load, "p": p})
    check = load_catalog_index(read_text(args.load), p)
    report.result = {"rows": check.rows, "instances": check.instances}
    report.lines.append(
        f"{check.instances} instantiations from {check.rows} rows rebuilt at p={p}"
    )
    for mismatch in check.mismatches:
        report.fail("index", mismatch)
    return report


# existence


@app.command("existence", "p-map existence on every Lie representative")
def cmd_existence(args: argparse.Namespace, ctx: Context) -> Report:
    p = require_p(args)
    report = Report("existence", {"p": p})
    matrix = existence_matrix(p)
    report.result = {
        "entries": [
            {
                "label": entry.label,
                "exists": entry.found,
                "unique": entry.unique,
                "expected": entry.expected,
            }
            for entry in matrix.entries
        ]
    }
    for entry in matrix.entries:
        state = "unique" if entry.unique else ("yes" if entry.found else "none")
        report.lines.append(f"{entry.label:<28} {state}")
    for entry in matrix.mismatches:
        report.fail(
            "existence",
            f"{entry.label}: found={entry.found} unique={entry.unique}, "
            f"expected={entry.expected}",
        )
    return report


# distinct


def _distinct_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sample", type=int, help="compare only this many pairs")


@app.command("distinct", "Pairwise non-isomorphism of catalog entries", _distinct_flags)
def cmd_distinct(args: argparse.Namespace, ctx: Context) -> Report:
    p = require_p(args)
    seed = ctx.settings.seed
    report = Report("distinct", {"p": p, "sample": args.sample, "seed": seed})
    result = pairwise_distinctness(p, args.sample, seed, ctx.budget)
    report.result = {
        "compared": result.compared,
        "witnesses": [
            {"first": w.first, "second": w.second, "degree": w.degree}
            for w in result.witnesses
        ],
    }
    report.lines.append(
        f"{result.compared} pairs compared, "
        f"{len(result.witnesses)} declared isomorphisms"
    )
    for counterexample in result.counterexamples:
        report.fail("isomorphic", counterexample)
    for undecided in result.undecided:
        report.fail("budget", undecided)
    return report


# classify


@app.command("classify", "Orbits of the 2-maps on L2 matched to catalog rows")
def cmd_classify(args: argparse.Namespace, ctx: Context) -> Report:
    report = Report("classify", {"family": "L2", "p": 2})
    result = classify_l2_pmaps_p2(ctx.budget)
    report.result = {
        "pmaps": result.pmaps,
        "automorphisms": result.automorphisms,
        "triples": [list(triple) for triple in result.triples],
        "classes": [
            {
                "representative": entry.representative,
                "size": entry.size,
                "triple": list(entry.triple),
                "matches": list(entry.matches),
            }
            for entry in result.classes
        ],
    }
    for entry in result.classes:
        matched = ", ".join(entry.matches) or "none"
        report.lines.append(f"{entry.size:>4}  {entry.representative:<40} {matched}")
        if not entry.resolved:
            report.fail("classify", f"{entry.representative} matches {matched}")
        if entry.triple not in result.listed_triples:
            report.fail(
                "triple", f"{entry.representative} has unlisted triple {entry.triple}"
            )
    return report


# parameterization


def _parameterization_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "family",
        help="closed-form id or Lie family ("
        + ", ".join(f"{e.id}={e.family}" for e in PARAMETERIZATIONS.values())
        + ")",
    )
    parser.add_argument("-q", dest="q", type=int, required=True, help="field order")
    parser.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")


@app.command(
    "parameterization",
    "Compare a closed-form automorphism group with brute force",
    _parameterization_flags,
)
def cmd_parameterization(args: argparse.Namespace, ctx: Context) -> Report:
    params = parse_params(args.param) or None
    report = Report(
        "parameterization", {"family": args.family, "q": args.q, "params": params}
    )
    result = compare_parameterization(args.family, args.q, params, ctx.budget)
    report.result = {
        "id": result.id,
        "family": result.family,
        "parameterized": result.parameterized,
        "bruteForce": result.brute_force,
    }
    report.lines.append(
        f"{result.id} ({result.family}) over F_{args.q}: "
        f"{result.parameterized} from the closed form, "
        f"{result.brute_force} by search"
    )
    for kind, matrices in (
        ("missing", result.missing),
        ("extra", result.extra),
        ("invalid", result.invalid),
    ):
        for matrix in matrices:
            report.fail(kind, str(_columns(matrix)))
    return report
