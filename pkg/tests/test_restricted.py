"""Tests for p-semilinear maps, p-maps, conjugation and invariant profiles."""

import pytest

from restricted_lie.catalog.families import lie_representative
from restricted_lie.errors import (
    GuardrailError,
    NotAnAutomorphismError,
    ValidationError,
)
from restricted_lie.restricted import (
    PSemilinearMap,
    RestrictedLieAlgebra,
    conjugate,
    enumerate_pmaps,
    evaluate,
    invariant_profile,
    is_nilpotent_map,
    is_p_map,
    jacobson_sum,
    order_independent,
    s_terms,
    solve_pmaps,
)
from restricted_lie.substrate.fields import field_make
from restricted_lie.substrate.linalg import Matrix

W_TO_X_PLUS_W = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 0, 0, 1)]

# Evaluation tests


def test_zero_map_has_commutator_correction(l2_f2):
    """Test (x + w)^[2] = [x, w] = y when the basis images vanish."""
    zero = PSemilinearMap.zero(l2_f2)
    value = evaluate(zero, l2_f2.combination({"x": 1, "w": 1}))
    assert value.coordinates == (0, 1, 0, 0)


def test_s_terms_in_characteristic_two(l2_f2):
    """Test the single correction term over F_2 is the bracket."""
    (s1,) = s_terms(l2_f2.basis_element("x"), l2_f2.basis_element("w"))
    assert s1.coordinates == (0, 1, 0, 0)


def test_s_terms_on_l3(f3):
    """Test s_1(x, w) = z and s_2(x, w) = 0 on L3 over F_3."""
    algebra = lie_representative("L3", None, f3)
    s1, s2 = s_terms(algebra.basis_element("x"), algebra.basis_element("w"))
    assert s1.coordinates == (0, 0, 1, 0)
    assert s2.is_zero


def test_frobenius_on_coefficients(f4):
    """Test scalars enter p-semilinearly: (a e)^[p] = a^p e^[p]."""
    algebra = lie_representative("L1", None, f4)
    pmap = PSemilinearMap.from_images(algebra, {"x": {"x": 1}})
    value = pmap.evaluate_vector((2, 0, 0, 0))
    assert value == (f4.pow(2, 2), 0, 0, 0)


def test_evaluate_rejects_bad_order(l2_f2):
    """Test the summation order must be a permutation."""
    zero = PSemilinearMap.zero(l2_f2)
    with pytest.raises(ValidationError, match="not a permutation"):
        evaluate(zero, l2_f2.basis_element("x"), order=(0, 0, 1, 2))


def test_from_images_rejects_wrong_length(l2_f2):
    """Test a map needs one image per basis vector."""
    with pytest.raises(ValidationError, match="needs 4 images"):
        PSemilinearMap(l2_f2, ((0, 0, 0, 0),))


def test_describe_and_format(l2_f2):
    """Test the text forms of a map."""
    pmap = PSemilinearMap.from_images(l2_f2, {"w": {"y": 1}})
    assert pmap.describe() == "w -> y"
    assert pmap.format() == "pmap w = y"
    assert PSemilinearMap.zero(l2_f2).describe() == "trivial"


# p-map tests


def test_center_valued_maps_on_l2(l2_f3):
    """Test maps into the center are p-maps on L2 over F_3."""
    pmap = PSemilinearMap.from_images(l2_f3, {"x": {"z": 1}, "y": {"y": 1}})
    assert is_p_map(l2_f3, pmap)

    bad = PSemilinearMap.from_images(l2_f3, {"x": {"x": 1}})
    assert not is_p_map(l2_f3, bad)
    with pytest.raises(ValidationError, match="is not a p-map"):
        RestrictedLieAlgebra(l2_f3, bad)


def test_gl2_toral_map(gl2_f3):
    """Test z -> z is a p-map on gl2 over F_3."""
    pmap = PSemilinearMap.from_images(gl2_f3, {"z": {"z": 1}})
    assert is_p_map(gl2_f3, pmap)


def test_jacobson_sum_law(f3):
    """Test (u + v)^[p] = u^[p] + v^[p] + sum s_i(u, v) for a p-map."""
    algebra = lie_representative("L3", None, f3)
    pmap = solve_pmaps(algebra).particular
    u = algebra.basis_element("x")
    v = algebra.basis_element("w") + algebra.basis_element("y")
    assert pmap(u + v) == pmap(u) + pmap(v) + jacobson_sum(u, v)


def test_value_is_independent_of_order(f3):
    """Test every basis order gives the same p-th power."""
    algebra = lie_representative("L3", None, f3)
    pmap = solve_pmaps(algebra).particular
    assert order_independent(pmap, (1, 1, 1, 1))
    assert order_independent(pmap, (2, 0, 1, 1))


def test_debug_checks_pass_for_a_p_map(l2_f2):
    """Test p_power with order checks enabled."""
    restricted = RestrictedLieAlgebra(
        l2_f2, PSemilinearMap.zero(l2_f2), debug_checks=True
    )
    assert restricted.p_power((1, 0, 0, 1)) == (0, 1, 0, 0)
    assert restricted.p_power((1, 0, 0, 1), times=2) == (0, 0, 0, 0)


def test_restricted_lift(l2_f2, f4):
    """Test a restricted algebra lifts with its map."""
    pmap = PSemilinearMap.from_images(l2_f2, {"w": {"y": 1}})
    restricted = RestrictedLieAlgebra(l2_f2, pmap)
    lifted = restricted.lift(f4)
    assert lifted.field == f4
    assert lifted.pmap.images == restricted.pmap.images


# Solver tests


def test_l2_family_over_f2(l2_f2):
    """Test L2 over F_2 has 2^8 p-maps."""
    family = solve_pmaps(l2_f2)
    assert family.exists
    assert family.center.dim == 2
    assert family.free_parameters == 8
    assert family.count == 256
    assert len(list(enumerate_pmaps(l2_f2, family))) == 256


def test_unique_map_on_l6(f3):
    """Test L6(1, 1) has the single p-map w -> w."""
    algebra = lie_representative("L6", {"xi": 1, "eta": 1}, f3)
    family = solve_pmaps(algebra)
    assert family.count == 1
    assert family.particular.images[3] == (0, 0, 0, 1)
    assert family.describe().startswith("unique:")


def test_l7_has_no_p_map(f3):
    """Test no f has ad f = (ad w)^p on L7."""
    family = solve_pmaps(lie_representative("L7", None, f3))
    assert not family.exists
    assert family.count == 0
    assert 3 in family.unsolvable
    assert family.describe().startswith("none")
    assert list(enumerate_pmaps(family.algebra, family)) == []


def test_family_contains(gl2_f3):
    """Test membership in the solution coset."""
    family = solve_pmaps(gl2_f3)
    assert family.count == 81
    assert family.contains(PSemilinearMap.from_images(gl2_f3, {"z": {"z": 1}}))
    assert not family.contains(PSemilinearMap.from_images(gl2_f3, {"z": {"x": 1}}))


def test_abelian_enumeration(f2):
    """Test every linear map is a 2-map on the abelian algebra over F_2."""
    algebra = lie_representative("L1", None, f2)
    assert sum(1 for _ in enumerate_pmaps(algebra)) == 65536


def test_enumeration_guardrail(f5):
    """Test enumeration refuses more than 2^20 maps."""
    algebra = lie_representative("L1", None, f5)
    with pytest.raises(GuardrailError, match="exceeds the bound 2\\^20"):
        list(enumerate_pmaps(algebra))


# Conjugation tests


def test_conjugate_zero_map(l2_f2):
    """Test conjugating the zero map by w -> x + w gives w -> y."""
    phi = Matrix.from_columns(l2_f2.field, W_TO_X_PLUS_W)
    conjugated = conjugate(PSemilinearMap.zero(l2_f2), phi)
    assert conjugated == PSemilinearMap.from_images(l2_f2, {"w": {"y": 1}})
    assert is_p_map(l2_f2, conjugated)


def test_conjugate_rejects_non_automorphism(l2_f2):
    """Test conjugation needs an automorphism."""
    phi = Matrix.diagonal(l2_f2.field, [1, 0, 1, 1])
    with pytest.raises(NotAnAutomorphismError):
        conjugate(PSemilinearMap.zero(l2_f2), phi)


# Invariant tests


def test_profile_of_center_valued_map(l2_f3):
    """Test dimensions of L^[p], Z^[p] and [L,L]^[p]."""
    pmap = PSemilinearMap.from_images(l2_f3, {"x": {"z": 1}, "y": {"y": 1}})
    profile = invariant_profile(RestrictedLieAlgebra(l2_f3, pmap), 2)
    assert profile.triple() == (2, 1, 1)
    assert profile.column("LL") == (1, 1)
    assert not is_nilpotent_map(pmap)


def test_profile_of_trivial_map(l2_f3):
    """Test the zero map on L2 over F_3 has zero image spans."""
    zero = PSemilinearMap.zero(l2_f3)
    profile = invariant_profile(zero, 3)
    assert profile.dims == ((0, 0, 0),) * 3
    assert is_nilpotent_map(zero)


def test_profile_lookup_errors(l2_f3):
    """Test unknown spaces, depths and bad r_max."""
    profile = invariant_profile(PSemilinearMap.zero(l2_f3), 1)
    with pytest.raises(ValidationError, match="Unknown space"):
        profile.dim("Q")
    with pytest.raises(ValidationError, match="outside"):
        profile.dim("L", 2)
    with pytest.raises(ValidationError, match="Profile depth must be positive"):
        invariant_profile(PSemilinearMap.zero(l2_f3), 0)


def test_profile_guardrail():
    """Test profiles refuse fields with q^4 over 2^16."""
    f17 = field_make(17)
    algebra = lie_representative("L1", None, f17)
    with pytest.raises(GuardrailError, match="2\\^16"):
        invariant_profile(PSemilinearMap.zero(algebra))
