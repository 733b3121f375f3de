"""Tests for settings, environment loading and the error hierarchy."""

import pytest

from restricted_lie.config import Settings, load_settings, parse_ladder
from restricted_lie.errors import (
    EXIT_CHECK_FAILED,
    EXIT_USAGE,
    BudgetExhaustedError,
    CharacteristicError,
    CheckFailure,
    GuardrailError,
    ParseError,
    UsageError,
    ValidationError,
)

# Settings tests


def test_defaults():
    """Test the default settings."""
    settings = Settings()
    assert settings.log_level == "WARNING"
    assert settings.max_candidates == 2_000_000
    assert settings.time_limit is None
    assert settings.ladder == (1, 2, 4)
    assert settings.threads == 1
    assert settings.seed == 0
    assert settings.profile_depth == 3
    assert settings.debug_checks is False


@pytest.mark.parametrize(
    "kwargs,message",
    [
        ({"log_level": "TRACE"}, "must be one of"),
        ({"max_candidates": 0}, "at least 1"),
        ({"threads": 0}, "at least 1"),
        ({"ladder": ()}, "at least 1 items"),
        ({"ladder": (2, 1)}, "ascending positive degrees"),
        ({"ladder": (0, 1)}, "ascending positive degrees"),
        ({"time_limit": -1.0}, "at least 0"),
    ],
)
def test_invalid_settings(kwargs, message):
    """Test settings are validated on construction."""
    with pytest.raises(ValidationError, match=message):
        Settings(**kwargs)


def test_with_overrides_ignores_none():
    """Test unset flags keep the current value."""
    settings = Settings().with_overrides(seed=7, threads=None, ladder=(1, 3))
    assert settings.seed == 7
    assert settings.threads == 1
    assert settings.ladder == (1, 3)


def test_search_budget():
    """Test settings produce the matching search budget."""
    budget = Settings(max_candidates=50, time_limit=2.0, ladder=(1, 2)).search_budget()
    assert budget.max_candidates == 50
    assert budget.time_limit == 2.0
    assert budget.ladder == (1, 2)


# Ladder tests


def test_parse_ladder():
    """Test comma-separated degrees."""
    assert parse_ladder("1,2,4") == (1, 2, 4)
    assert parse_ladder(" 1, 3 ") == (1, 3)


@pytest.mark.parametrize("text", ["", "1,x", ","])
def test_parse_ladder_invalid(text):
    """Test malformed ladders are rejected."""
    with pytest.raises(ValidationError, match="Invalid ladder"):
        parse_ladder(text)


# Environment tests


def test_load_settings_from_environment():
    """Test RESTRICTED_LIE_* variables are read."""
    settings = load_settings(
        {
            "RESTRICTED_LIE_LOG_LEVEL": "debug",
            "RESTRICTED_LIE_BUDGET": "1000",
            "RESTRICTED_LIE_TIME_LIMIT": "2.5",
            "RESTRICTED_LIE_THREADS": "4",
            "RESTRICTED_LIE_SEED": "9",
            "RESTRICTED_LIE_PROFILE_DEPTH": "2",
            "RESTRICTED_LIE_LADDER": "1,2",
            "RESTRICTED_LIE_DEBUG_CHECKS": "yes",
        }
    )
    assert settings.log_level == "DEBUG"
    assert settings.max_candidates == 1000
    assert settings.time_limit == 2.5
    assert settings.threads == 4
    assert settings.seed == 9
    assert settings.profile_depth == 2
    assert settings.ladder == (1, 2)
    assert settings.debug_checks is True


def test_empty_variables_are_ignored():
    """Test blank values fall back to defaults."""
    assert load_settings({"RESTRICTED_LIE_BUDGET": ""}) == Settings()
    assert load_settings({"RESTRICTED_LIE_DEBUG_CHECKS": "off"}).debug_checks is False


def test_invalid_environment_value():
    """Test non-numeric values are reported."""
    with pytest.raises(ValidationError, match="Invalid environment setting"):
        load_settings({"RESTRICTED_LIE_BUDGET": "lots"})


# Error hierarchy tests


def test_exit_codes():
    """Test usage errors exit 2 and check failures exit 1."""
    assert UsageError("bad").exit_code == EXIT_USAGE
    assert ValidationError("bad").exit_code == EXIT_USAGE
    assert CharacteristicError("bad").exit_code == EXIT_USAGE
    assert GuardrailError("big").exit_code == EXIT_CHECK_FAILED
    assert BudgetExhaustedError("slow", explored=5).exit_code == EXIT_CHECK_FAILED
    assert CheckFailure("wrong").exit_code == EXIT_CHECK_FAILED


def test_error_codes():
    """Test machine-readable codes."""
    assert ValidationError("bad").error_code == "validation"
    assert CharacteristicError("bad").error_code == "characteristic"
    assert GuardrailError("big").error_code == "guardrail"
    assert BudgetExhaustedError().error_code == "budget"


def test_parse_error_location():
    """Test parse errors carry line, column and the bare reason."""
    error = ParseError("Unknown basis name 'u'", 4, 3)
    assert str(error) == "4:3: Unknown basis name 'u'"
    assert error.reason == "Unknown basis name 'u'"
    assert (error.line, error.column) == (4, 3)
    assert isinstance(error, UsageError)


def test_check_failure_findings():
    """Test findings default to an empty list."""
    assert CheckFailure("wrong").findings == []
    assert CheckFailure("wrong", ["a"]).findings == ["a"]
