"""
Tests for enhanced patterns: validity, rank, efficiency and weights.
"""

import pytest

from src.algebra.polynomial import Monomial
from src.enhanced.patterns import (
    EnhancedPattern,
    connected_components,
    exponent_vector,
    is_efficient,
    is_valid,
    monomial,
    rank,
    reconstruct_edges,
    validate,
)
from src.gz.patterns import GZPattern
from src.utils.error_handler import DimensionError, PreconditionError, ReconstructionError


def four_row_pattern() -> EnhancedPattern:
    """Efficient pattern of rank 4 for lambda = (9, 7, 3, 1)."""
    base = GZPattern(((1, 3, 7, 9), (3, 4, 9), (3, 5), (4,)))
    return EnhancedPattern(base, frozenset({(1, 3), (2, 1)}), frozenset({(1, 3, "R"), (2, 1, "L")}))


@pytest.mark.unit
class TestValidity:
    """Test the local validity conditions."""

    def test_four_row_pattern_is_valid(self):
        """Test a valid pattern with one left and one right edge."""
        assert validate(four_row_pattern()) == []

    def test_uncircled_bottom_of_left_triangle(self):
        """Test that (0, 1 / 0) needs a circled entry joined left."""
        pattern = EnhancedPattern(GZPattern(((0, 1), (0,))))
        violations = validate(pattern)
        assert [v.condition for v in violations] == [5]
        assert not is_valid(pattern)

    def test_edge_between_unequal_entries(self):
        """Test that an edge must join equal entries."""
        pattern = EnhancedPattern(GZPattern(((0, 2), (1,))), frozenset({(1, 1)}), frozenset({(1, 1, "R")}))
        assert 2 in {v.condition for v in validate(pattern)}

    def test_equal_top_entries(self):
        """Test that equal entries of row 0 force a doubly joined circle below."""
        base = GZPattern(((1, 1), (1,)))
        assert not is_valid(EnhancedPattern(base, frozenset({(1, 1)}), frozenset({(1, 1, "R")})))
        assert is_valid(EnhancedPattern(base, frozenset({(1, 1)}), frozenset({(1, 1, "L"), (1, 1, "R")})))

    def test_invalid_base_raises(self):
        """Test that a base violating interlacing is rejected."""
        with pytest.raises(PreconditionError):
            validate(EnhancedPattern(GZPattern(((0, 1), (2,)))))

    def test_malformed_edge(self):
        """Test that edges must name a free place and a direction."""
        with pytest.raises(DimensionError):
            EnhancedPattern(GZPattern(((0, 1), (1,))), frozenset({(1, 1)}), frozenset({(1, 1, "X")}))


@pytest.mark.unit
class TestWeights:
    """Test rank, efficiency and the attached monomial."""

    def test_four_row_pattern_monomial(self):
        """Test beta^4 x1^4 x2^5 x3^9 x4^6."""
        pattern = four_row_pattern()
        assert rank(pattern) == 4
        assert is_efficient(pattern)
        assert exponent_vector(pattern) == (4, 5, 9, 6)
        assert monomial(pattern).terms() == [(Monomial(4, (4, 5, 9, 6)), 1)]

    def test_inefficient_pattern_has_zero_monomial(self):
        """Test that an (a, a / a) triangle without a right edge gives zero."""
        base = GZPattern(((0, 1, 2), (1, 1), (1,)))
        pattern = EnhancedPattern(
            base, frozenset({(1, 2), (2, 1)}), frozenset({(1, 2, "L"), (2, 1, "L")})
        )
        assert is_valid(pattern)
        assert not is_efficient(pattern)
        assert monomial(pattern).is_zero()

    def test_connected_components(self):
        """Test constant components of a pattern of GZ(1, 0)."""
        pattern = EnhancedPattern(GZPattern(((0, 1), (1,))), frozenset({(1, 1)}), frozenset({(1, 1, "R")}))
        components = connected_components(pattern)
        assert [c.top for c in components] == [(0, 1), (0, 2)]
        assert components[1].members == ((0, 2), (1, 1))
        assert all(c.is_constant for c in components)

    def test_variable_component(self):
        """Test that an uncircled entry heads a variable component."""
        components = connected_components(EnhancedPattern(GZPattern(((0, 1), (1,)))))
        variable = [c for c in components if not c.is_constant]
        assert [c.top for c in variable] == [(1, 1)]
        assert variable[0].value is None


@pytest.mark.unit
class TestReconstruction:
    """Test recovering edges from circles."""

    def test_reconstruct_four_row_pattern(self):
        """Test that the circles alone determine the edges."""
        pattern = four_row_pattern()
        assert reconstruct_edges(pattern.base, pattern.circled) == pattern

    def test_missing_circle(self):
        """Test that circles admitting no valid enhancement raise."""
        with pytest.raises(ReconstructionError):
            reconstruct_edges(GZPattern(((0, 1), (0,))), frozenset())

    def test_json_round_trip(self):
        """Test that from_json_dict inverts to_json_dict."""
        pattern = four_row_pattern()
        data = pattern.to_json_dict()
        assert data["rank"] == 4
        assert data["efficient"] is True
        assert EnhancedPattern.from_json_dict(data) == pattern
