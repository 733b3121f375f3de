"""Tests for finite fields and field elements."""

import pytest

from restricted_lie.errors import GuardrailError, ValidationError
from restricted_lie.substrate.fields import (
    field_make,
    field_of_order,
    is_quadratic_residue,
    nth_root,
    primitive_root_mod,
    pth_root,
    quadratic_residues,
)

# Construction tests


@pytest.mark.parametrize(
    "p,k,modulus",
    [(2, 1, (1, 0)), (2, 2, (1, 1, 1)), (3, 2, (1, 0, 1)), (2, 3, (1, 0, 1, 1))],
)
def test_field_make_modulus(p, k, modulus):
    """Test the modulus is the smallest monic irreducible polynomial."""
    field = field_make(p, k)
    assert field.q == p**k
    assert field.modulus_coefficients == modulus


def test_field_make_is_cached():
    """Test equal parameters return the same field object."""
    assert field_make(3, 2) is field_make(3, 2)


def test_field_make_rejects_composite_characteristic():
    """Test a non-prime characteristic is rejected."""
    with pytest.raises(ValidationError, match="Characteristic must be prime"):
        field_make(6)


def test_field_make_rejects_bad_degree():
    """Test the extension degree must be positive."""
    with pytest.raises(ValidationError, match="Extension degree"):
        field_make(3, 0)


def test_field_make_guardrail():
    """Test fields beyond the order bound are refused."""
    with pytest.raises(GuardrailError, match="exceeds the bound 2\\^20"):
        field_make(2, 21)


def test_field_of_order():
    """Test fields are found from their order."""
    assert field_of_order(9) == field_make(3, 2)
    assert field_of_order(7) == field_make(7)

    with pytest.raises(ValidationError, match="prime power"):
        field_of_order(12)


def test_primitive_root_mod():
    """Test smallest primitive roots."""
    assert primitive_root_mod(2) == 1
    assert primitive_root_mod(5) == 2
    assert primitive_root_mod(7) == 3


# Arithmetic tests


def test_prime_field_operators(f5):
    """Test FieldElement operators mix with ints."""
    two = f5.element(2)
    assert two * 3 == 1
    assert two.inverse() == 3
    assert 1 / two == 3
    assert two - 4 == 3
    assert -two == 3
    assert two**4 == 1


def test_negative_ints_embed(f7):
    """Test negative ints embed through Z -> F_p."""
    assert f7.element(-1) == 6
    assert f7.element(-1).value == 6


def test_element_rejects_out_of_range(f4):
    """Test encodings at or above q are rejected."""
    with pytest.raises(ValidationError, match="not an element encoding"):
        f4.element(4)


def test_mixed_fields_rejected(f3, f9):
    """Test elements of different fields do not combine."""
    with pytest.raises(ValidationError, match="Field mismatch"):
        _ = f3.element(1) + f9.element(1)


def test_extension_generator_and_coordinates(f4):
    """Test F_4 encodings are base-p digits with x as the generator."""
    assert f4.generator == 2
    assert f4.coordinates(3) == (1, 1)
    assert f4.from_coordinates((1, 1)) == 3
    # x^2 = x + 1
    assert f4.mul(2, 2) == 3


@pytest.mark.parametrize("p,k", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_every_element_is_fixed_by_q_power(p, k):
    """Test a^q = a over the whole field."""
    field = field_make(p, k)
    assert all(field.pow(a, field.q) == a for a in field.elements())


def test_subfield(f9):
    """Test the prime subfield of F_9."""
    assert f9.subfield(1) == [0, 1, 2]

    with pytest.raises(ValidationError, match="not a subfield"):
        f9.subfield(3)


def test_half_undefined_in_characteristic_two(f2, f5):
    """Test 1/2 exists only in odd characteristic."""
    assert f5.half == 3
    with pytest.raises(ValidationError, match="characteristic 2"):
        _ = f2.half


# Root tests


def test_pth_root(f4, f9):
    """Test the p-th root inverts Frobenius."""
    assert pth_root(f4.element(2)).value == 3
    for a in f9.elements():
        assert f9.frobenius(pth_root(f9.element(a)).value) == a


def test_nth_root(f5):
    """Test smallest roots and their absence."""
    assert nth_root(f5.element(4), 2) == 2
    assert nth_root(f5.element(2), 2) is None
    assert nth_root(f5.element(0), 3) == 0


def test_nth_root_rejects_bad_index(f5):
    """Test the root index must be positive."""
    with pytest.raises(ValidationError, match="Root index"):
        nth_root(f5.element(1), 0)


# Quadratic residue tests


def test_quadratic_residue():
    """Test Euler's criterion."""
    assert is_quadratic_residue(field_make(7).element(2)) is True
    assert is_quadratic_residue(field_make(5).element(2)) is False
    assert quadratic_residues(7) == [1, 2, 4]
    assert quadratic_residues(5) == [1, 4]


@pytest.mark.parametrize(
    "p,k,value,message",
    [
        (2, 1, 1, "odd characteristic"),
        (3, 2, 1, "prime fields only"),
        (5, 1, 0, "nonzero element"),
    ],
)
def test_quadratic_residue_errors(p, k, value, message):
    """Test the residue test refuses p = 2, extensions and zero."""
    with pytest.raises(ValidationError, match=message):
        is_quadratic_residue(field_make(p, k).element(value))
