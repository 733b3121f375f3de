"""Tests for the closed-form automorphism parameterizations."""

import pytest

from restricted_lie.errors import CharacteristicError, UsageError
from restricted_lie.iso_search import (
    PARAMETERIZATIONS,
    compare_parameterization,
    get_parameterization,
    verify_parameterization,
)

CLOSED_FORMS = [
    ("AutoLb", "L2"),
    ("AutoLc", "L3"),
    ("AutoLd", "L4"),
    ("isoformLe", "L5"),
    ("isoformLj", "N4"),
    ("AutoLk", "gl2"),
    ("AutoN2", "N2"),
]

# Registry tests


def test_registered_closed_forms():
    """Test the closed forms are keyed by their own ids."""
    assert list(PARAMETERIZATIONS) == [entry_id for entry_id, _ in CLOSED_FORMS]


@pytest.mark.parametrize("entry_id,family", CLOSED_FORMS)
def test_family_alias(entry_id, family):
    """Test the Lie family id resolves to the same closed form."""
    entry = get_parameterization(entry_id)
    assert entry.id == entry_id
    assert entry.family == family
    assert get_parameterization(family) is entry


def test_unknown_family():
    """Test families without a closed form are a usage error."""
    with pytest.raises(UsageError, match="Unknown parameterized family: L9"):
        compare_parameterization("L9", 2)


# Comparison tests


def test_autolb_over_f2():
    """Test AutoLb gives the 192 automorphisms of L2 over F_2."""
    report = compare_parameterization("AutoLb", 2)
    assert report.id == "AutoLb"
    assert report.family == "L2"
    assert report.matches
    assert report.parameterized == 192
    assert report.brute_force == 192
    assert verify_parameterization("AutoLb", 2)


def test_l2_alias_over_f2():
    """Test the L2 alias reports under the AutoLb id."""
    report = compare_parameterization("L2", 2)
    assert report.id == "AutoLb"
    assert report.parameterized == report.brute_force == 192


@pytest.mark.parametrize("entry_id", ["AutoLc", "AutoLd", "AutoN2"])
def test_small_closed_forms_over_f2(entry_id):
    """Test closed forms agree with the search over F_2."""
    report = compare_parameterization(entry_id, 2)
    assert report.id == entry_id
    assert report.matches


def test_isoformle_with_parameter():
    """Test the L5 closed form at a fixed xi."""
    report = compare_parameterization("isoformLe", 3, {"xi": 2})
    assert report.id == "isoformLe"
    assert report.matches
    assert report.params == {"xi": 2}


@pytest.mark.slow
def test_isoformle_every_xi():
    """Test L5 is checked for every unit xi when none is given."""
    assert verify_parameterization("isoformLe", 3)


@pytest.mark.slow
@pytest.mark.parametrize("entry_id", ["isoformLj", "AutoLk"])
def test_odd_characteristic_closed_forms(entry_id):
    """Test N4 and gl2 over F_3."""
    assert verify_parameterization(entry_id, 3)


@pytest.mark.parametrize("name", ["isoformLj", "N4", "AutoLk"])
def test_closed_form_needs_odd_characteristic(name):
    """Test N4 and gl2 have no closed form registered for p = 2."""
    with pytest.raises(CharacteristicError, match="needs p >= 3"):
        compare_parameterization(name, 2)
