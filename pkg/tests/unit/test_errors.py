"""Unit tests for the error hierarchy, the code catalog and suggestions."""

import pytest

from twistlab.core.error_codes import (
    ERROR_CODES,
    format_diagnostic_with_code,
    get_error_code,
    list_error_codes,
)
from twistlab.core.errors import (
    ConfigError,
    DomainError,
    RegistryError,
    ResolutionError,
    TwistLabError,
)
from twistlab.core.suggestions import (
    find_close_matches,
    levenshtein_distance,
    suggest_did_you_mean,
)


class TestErrors:
    """Test exception formatting and hierarchy."""

    def test_message_carries_code_hint_and_note(self):
        """Test the rendered diagnostic."""
        error = ResolutionError("T003", "angle jumps", "Raise the number of loop samples")
        text = str(error)
        assert text.startswith("[error:T003] angle jumps")
        assert "hint: Raise the number of loop samples" in text
        assert "note: Consecutive rotation angles" in text

    def test_hierarchy(self):
        """Test every error is a TwistLabError."""
        for cls in (DomainError, ResolutionError, ConfigError, RegistryError):
            assert issubclass(cls, TwistLabError)

    def test_can_be_caught_as_base(self):
        """Test catching via the base class."""
        with pytest.raises(TwistLabError):
            raise DomainError("G001", "rotation axis is zero")


class TestCatalog:
    """Test the error-code catalog."""

    def test_codes_match_keys(self):
        """Test each entry is stored under its own code."""
        for key, entry in ERROR_CODES.items():
            assert entry.code == key

    def test_lookup(self):
        """Test known and unknown lookups."""
        assert get_error_code("C001").category == "compactify"
        assert get_error_code("Z999") is None

    def test_list_by_category(self):
        """Test filtering and ordering."""
        topology = list_error_codes("topology")
        assert [c.code for c in topology] == ["T001", "T002", "T003", "T004"]

    def test_format_without_hint(self):
        """Test a code without explanation renders one line."""
        assert format_diagnostic_with_code("error", "X002", "unknown map 'x'") == (
            "[error:X002] unknown map 'x'"
        )


class TestSuggestions:
    """Test did-you-mean hints."""

    def test_levenshtein(self):
        """Test the edit distance."""
        assert levenshtein_distance("tau", "tau") == 0
        assert levenshtein_distance("tua", "tau") == 2
        assert levenshtein_distance("", "abc") == 3

    def test_single_match(self):
        """Test one close name."""
        hint = suggest_did_you_mean("tau-symplectc", ["tau-symplectic", "moment-map"])
        assert hint == "Did you mean 'tau-symplectic'?"

    def test_no_match(self):
        """Test nothing close returns None."""
        assert suggest_did_you_mean("bogus", ["tau-symplectic", "moment-map"]) is None

    def test_ranking(self):
        """Test closer names come first."""
        matches = find_close_matches("h-windin", ["h-winding", "lambda-winding", "id"])
        assert matches[0] == "h-winding"

    def test_hyphenated_prefix(self):
        """Test abbreviated parts of a hyphenated name."""
        names = ["tau-symplectic", "tau-supports", "h-symplectic"]
        assert find_close_matches("tau-sym", names)[0] == "tau-symplectic"
        assert suggest_did_you_mean("h-sym", names) == "Did you mean 'h-symplectic'?"
