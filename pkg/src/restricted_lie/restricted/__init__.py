"""The p-map formalism: p-semilinear maps, p-maps, conjugation and invariants."""

from .invariants import InvariantProfile, invariant_profile, is_nilpotent_map
from .pmap import (
    PSemilinearMap,
    RestrictedLieAlgebra,
    conjugate,
    evaluate,
    is_p_map,
    jacobson_sum,
    order_independent,
    s_terms,
    transport,
)
from .solve import PMapFamily, enumerate_pmaps, solve_pmaps

__all__ = [
    "PSemilinearMap",
    "RestrictedLieAlgebra",
    "s_terms",
    "jacobson_sum",
    "evaluate",
    "order_independent",
    "is_p_map",
    "conjugate",
    "transport",
    "PMapFamily",
    "solve_pmaps",
    "enumerate_pmaps",
    "InvariantProfile",
    "invariant_profile",
    "is_nilpotent_map",
]
