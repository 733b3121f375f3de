"""The classification as data: Lie families, restricted rows, counts and checks."""

from .classify import L2Classification, PMapClass, classify_l2_pmaps_p2
from .counting import (
    BurnsideReport,
    ClassCount,
    OrbitReport,
    burnside_count,
    class_formula,
    count_classes,
    orbit_formula,
    s3_orbits,
)
from .distinct import DistinctnessReport, pairwise_distinctness
from .equivalence import equivalence, s3_orbit
from .existence import ExistenceEntry, ExistenceReport, existence_matrix
from .families import (
    LIE_FAMILIES,
    CharCondition,
    LieFamily,
    get_family,
    lie_representative,
)
from .index import IndexCheck, catalog_index, catalog_index_json, load_catalog_index
from .params import ParamKind, ParamSet
from .rows import (
    ROWS,
    CatalogRow,
    Instance,
    get_row,
    instantiate,
    instantiate_all,
    parameter_set,
    restricted_representative,
    rows_of,
)
from .suites import (
    SUITE_ALIASES,
    SUITES,
    SuiteReport,
    get_suite,
    identity_suite,
    run_suites,
)
from .tables import (
    TABLES,
    Table,
    compare_tables,
    expected_table,
    get_table,
    regenerate_table,
)

__all__ = [
    "LieFamily",
    "LIE_FAMILIES",
    "CharCondition",
    "get_family",
    "lie_representative",
    "ParamKind",
    "ParamSet",
    "CatalogRow",
    "ROWS",
    "Instance",
    "get_row",
    "rows_of",
    "parameter_set",
    "restricted_representative",
    "instantiate",
    "instantiate_all",
    "equivalence",
    "s3_orbit",
    "OrbitReport",
    "BurnsideReport",
    "ClassCount",
    "s3_orbits",
    "burnside_count",
    "orbit_formula",
    "class_formula",
    "count_classes",
    "SUITES",
    "SUITE_ALIASES",
    "SuiteReport",
    "get_suite",
    "identity_suite",
    "run_suites",
    "TABLES",
    "Table",
    "get_table",
    "expected_table",
    "regenerate_table",
    "compare_tables",
    "ExistenceEntry",
    "ExistenceReport",
    "existence_matrix",
    "PMapClass",
    "L2Classification",
    "classify_l2_pmaps_p2",
    "DistinctnessReport",
    "pairwise_distinctness",
    "IndexCheck",
    "catalog_index",
    "catalog_index_json",
    "load_catalog_index",
]
