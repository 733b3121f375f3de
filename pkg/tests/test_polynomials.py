"""Tests for rational multivariate polynomials and vector polynomials."""

from fractions import Fraction

import pytest

from restricted_lie.errors import ValidationError
from restricted_lie.substrate.mpoly import RatMPoly
from restricted_lie.substrate.vecpoly import VecPoly

# RatMPoly tests


def test_difference_of_squares():
    """Test (a1 + a2)(a1 - a2) = a1^2 - a2^2."""
    a1, a2 = RatMPoly.generators(("a1", "a2"))
    assert (a1 + a2) * (a1 - a2) == a1**2 - a2**2


def test_terms_in_lex_order():
    """Test terms are listed lexicographically descending."""
    a1, a2 = RatMPoly.generators(("a1", "a2"))
    poly = a2**2 - a1**2 + 3
    assert poly.terms() == (
        ((2, 0), Fraction(-1)),
        ((0, 2), Fraction(1)),
        ((0, 0), Fraction(3)),
    )


def test_rational_coefficients():
    """Test scaling by fractions stays exact."""
    (t,) = RatMPoly.generators(("t",))
    half = t.scale(Fraction(1, 2))
    assert half + half == t
    assert (half * 2 - t).is_zero


def test_from_terms_and_constants():
    """Test construction from an exponent map."""
    poly = RatMPoly.from_terms(("u", "v"), {(1, 0): 2, (0, 0): -1, (0, 1): 0})
    u, _ = RatMPoly.generators(("u", "v"))
    assert poly == 2 * u - 1
    assert RatMPoly.constant(("u", "v"), 5) == 5


def test_variable_mismatch():
    """Test polynomials in different rings do not combine."""
    (a,) = RatMPoly.generators(("a",))
    (b,) = RatMPoly.generators(("b",))
    with pytest.raises(ValidationError, match="Variable mismatch"):
        _ = a + b


def test_invalid_construction():
    """Test bad variable lists, exponents and powers are refused."""
    with pytest.raises(ValidationError, match="distinct and nonempty"):
        RatMPoly.generators(("a", "a"))
    with pytest.raises(ValidationError, match="does not match 2 variables"):
        RatMPoly.from_terms(("a", "b"), {(1,): 1})
    (a,) = RatMPoly.generators(("a",))
    with pytest.raises(ValidationError, match="Negative powers"):
        _ = a**-1


# VecPoly tests


def test_trailing_zeros_trimmed(f3):
    """Test zero leading coefficients are dropped."""
    poly = VecPoly(f3, 2, ((1, 0), (0, 0), (0, 0)))
    assert poly.degree == 0
    assert VecPoly(f3, 2, ((0, 0),)).is_zero
    assert VecPoly(f3, 2, ()).degree == -1


def test_monomial_and_shift(f3):
    """Test multiplying by T raises the degree."""
    poly = VecPoly.monomial(f3, (1, 2), 2)
    assert poly.degree == 2
    assert poly.shift().coefficient(3) == (1, 2)
    assert poly.coefficient(7) == (0, 0)


def test_addition_cancels(f3):
    """Test addition reduces mod p and trims."""
    poly = VecPoly(f3, 2, ((1, 0), (1, 1)))
    assert (poly + poly.scale(2)).is_zero


def test_map_applies_linear_map(f5):
    """Test a linear map acts on every coefficient."""
    poly = VecPoly(f5, 2, ((1, 0), (0, 1)))
    swapped = poly.map(lambda v: (v[1], v[0]))
    assert swapped.coefficients == ((0, 1), (1, 0))


def test_dimension_mismatch(f5):
    """Test polynomials of different dimension do not add."""
    with pytest.raises(ValidationError, match="Dimension mismatch"):
        _ = VecPoly.constant(f5, (1,)) + VecPoly.constant(f5, (1, 0))
