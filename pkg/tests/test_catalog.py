"""Tests for Lie families, catalog rows, parameter domains and equivalences."""

import pytest

from restricted_lie.catalog import (
    LIE_FAMILIES,
    ROWS,
    equivalence,
    get_family,
    get_row,
    instantiate,
    instantiate_all,
    lie_representative,
    parameter_set,
    restricted_representative,
    rows_of,
)
from restricted_lie.catalog.params import ParamKind, shifted_residues, xi_set
from restricted_lie.errors import CharacteristicError, UsageError, ValidationError
from restricted_lie.lie_core import check_jacobi
from restricted_lie.substrate.fields import field_make

# Family tests


def test_family_registry():
    """Test every family id resolves."""
    assert {"L1", "L9", "N1", "N5", "gl2", "W1", "W2"} <= set(LIE_FAMILIES)
    with pytest.raises(UsageError, match="Unknown Lie family"):
        get_family("L10")


@pytest.mark.parametrize(
    "family,params,message",
    [
        ("L5", None, "needs parameter"),
        ("L2", {"xi": 1}, "takes no parameter"),
        ("L5", {"xi": 0}, "needs a nonzero 'xi'"),
    ],
)
def test_representative_parameter_errors(f5, family, params, message):
    """Test parameters are checked against the family."""
    with pytest.raises(ValidationError, match=message):
        lie_representative(family, params, f5)


def test_broken_presentation_rejected(f3):
    """Test N5 is refused outside characteristic 2."""
    with pytest.raises(CharacteristicError, match="is a Lie algebra only for"):
        lie_representative("N5", None, f3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_families_satisfy_jacobi(p):
    """Test every family admitted at p is a Lie algebra."""
    lie_field = field_make(p)
    for family in LIE_FAMILIES.values():
        if not family.jacobi.admits(p):
            continue
        params = {name: 1 for name in family.params}
        algebra = lie_representative(family.family_id, params or None, lie_field)
        assert check_jacobi(algebra) == [], family.family_id


# Row tests


def test_row_table():
    """Test the size and order of the catalog."""
    assert len(ROWS) == 67
    assert ROWS[45].row_id == "L5.3"
    assert len(rows_of("L2")) == 15
    assert len(rows_of("gl2")) == 5


def test_unknown_row():
    """Test unknown row ids are a usage error."""
    with pytest.raises(UsageError, match="Unknown catalog row"):
        get_row("L2.16")


def test_row_description():
    """Test rows describe their images."""
    assert get_row("L1.1").describe() == "trivial"
    assert get_row("L2.4").describe() == "x -> z, w -> y"
    assert get_row("L2.15").is_infinite


def test_restricted_representative(f3):
    """Test a row instantiates to a verified restricted algebra."""
    restricted = restricted_representative("L2.10", None, f3)
    assert restricted.name == "L2.10"
    assert restricted.pmap.images[0] == (0, 0, 1, 0)
    assert restricted.pmap.images[1] == (0, 1, 0, 0)


def test_representative_outside_characteristic(f2, f3):
    """Test rows valid only for some p are refused elsewhere."""
    with pytest.raises(CharacteristicError, match="is a class representative only for"):
        restricted_representative("N2.2", None, f3)
    with pytest.raises(CharacteristicError):
        restricted_representative("gl2.1", None, f2)


def test_representative_outside_domain(f5):
    """Test strict mode keeps parameters inside the row's domain."""
    with pytest.raises(ValidationError, match="lie outside"):
        restricted_representative("L5.3", {"xi": 1}, f5)
    relaxed = restricted_representative("L5.3", {"xi": 1}, f5, strict=False)
    assert relaxed.pmap.images[1] == (0, 0, 1, 0)


def test_field_parameter_is_free(f9):
    """Test lam ranges over the whole field, extensions included."""
    lam = f9.generator
    restricted = restricted_representative("L2.15", {"lam": lam}, f9)
    assert restricted.pmap.images[1] == (0, 1, lam, 0)


def test_instantiate_field_row(f3):
    """Test a lam row gives one instance per field element."""
    instances = list(instantiate(get_row("L2.15"), f3))
    assert [instance.params["lam"] for instance in instances] == [0, 1, 2]


@pytest.mark.integration
@pytest.mark.parametrize("p", [2, 3, 5])
def test_instantiate_all(p):
    """Test every catalog instantiation at p carries a p-map."""
    instances = instantiate_all(p)
    assert instances
    assert all(instance.restricted.field.p == p for instance in instances)
    assert len({instance.label for instance in instances}) == len(instances)


def test_instantiate_all_field_mismatch(f3):
    """Test the field must have characteristic p."""
    with pytest.raises(ValidationError, match="does not have characteristic 2"):
        instantiate_all(2, f3)


# Parameter tests


@pytest.mark.parametrize(
    "p,expected", [(2, [1]), (3, [1, 2]), (5, [1, 2, 4]), (7, [1, 3, 2, 6])]
)
def test_xi_set(p, expected):
    """Test xi values are the first powers of the primitive root."""
    assert xi_set(p) == expected


@pytest.mark.parametrize("p,expected", [(3, [0]), (5, [2, 0]), (7, [6, 0, 2])])
def test_shifted_residues(p, expected):
    """Test Q_p - 1/4 in residue order."""
    assert shifted_residues(p) == expected


def test_shifted_residues_need_odd_p():
    """Test the shifted residues are undefined for p = 2."""
    with pytest.raises(ValidationError, match="odd characteristic"):
        shifted_residues(2)


def test_parameter_sets():
    """Test realized domains, including empty ones."""
    assert len(parameter_set("L5.3", 3)) == 0
    assert (2,) in parameter_set("L5.3", 5)
    assert parameter_set("L5.4", 5).elements == ((2,), (4,))
    assert len(parameter_set("L6.1", 5)) == 16
    assert parameter_set("N3.1", 2).elements == ()
    assert parameter_set("L2.15", 3).kind is ParamKind.FIELD


# Equivalence tests


def test_unit_pair_equivalence():
    """Test L6.1 parameters related by a transposition are equivalent."""
    assert equivalence("L6.1", {"xi": 1, "eta": 2}, {"xi": 2, "eta": 1}, 5)
    assert not equivalence("L6.1", {"xi": 1, "eta": 1}, {"xi": 1, "eta": 2}, 5)


def test_unit_pair_rejects_zero():
    """Test L6.1 parameters must be units."""
    with pytest.raises(ValidationError, match="must be nonzero"):
        equivalence("L6.1", {"xi": 0, "eta": 1}, {"xi": 1, "eta": 1}, 5)


def test_lambda_equivalence():
    """Test L2.15 identifies nonzero lam over F_3 but not lam = 0."""
    assert equivalence("L2.15", {"lam": 1}, {"lam": 2}, 3)
    assert not equivalence("L2.15", {"lam": 0}, {"lam": 1}, 3)


def test_projective_equivalence(f9):
    """Test L4.11 separates rational and irrational lam."""
    assert equivalence("L4.11", {"lam": 0}, {"lam": 2}, 3)
    assert not equivalence("L4.11", {"lam": 1}, {"lam": f9.generator}, 3, f9)


def test_rows_without_equivalence():
    """Test only three rows carry an equivalence predicate."""
    with pytest.raises(UsageError, match="no equivalence predicate"):
        equivalence("L2.1", {}, {}, 3)
