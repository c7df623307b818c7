"""
Tests for enumerating enhanced patterns and the Grothendieck polynomial as their sum.
"""

import pytest

from src.algebra.operators import grothendieck
from src.enhanced.enumeration import (
    enhancements_of,
    enumerate_all,
    enumerate_efficient,
    grothendieck_via_patterns,
    local_choices,
)
from src.enhanced.patterns import is_efficient, is_valid
from src.gz.patterns import GZPattern


@pytest.mark.unit
class TestEnhancements:
    """Test enhancements of single integer patterns."""

    def test_strict_pattern_has_eight(self):
        """Test a base where every entry equals its upper-right neighbour."""
        base = GZPattern(((0, 1, 2), (1, 2), (2,)))
        patterns = enhancements_of(base)
        assert len(patterns) == 8
        assert all(is_valid(p) and is_efficient(p) for p in patterns)

    def test_repeated_entries(self):
        """Test a base with an (a, a / a) triangle: four enhancements, two efficient."""
        base = GZPattern(((0, 1, 2), (1, 1), (1,)))
        patterns = enhancements_of(base)
        assert len(patterns) == 4
        assert len([p for p in patterns if is_efficient(p)]) == 2
        assert all(is_valid(p) for p in patterns)

    def test_local_choices(self):
        """Test the options offered by each kind of triangle."""
        base = GZPattern(((0, 1, 2), (1, 1), (1,)))
        assert len(local_choices(base, 1, 1)) == 2
        assert local_choices(base, 1, 2) == [(True, frozenset({"L"}))]
        assert len(local_choices(base, 2, 1)) == 4


@pytest.mark.unit
class TestGrothendieckSum:
    """Test the sum of monomials of efficient patterns."""

    def test_single_box(self):
        """Test the three enhanced patterns of GZ(1, 0)."""
        assert len(enumerate_all((1, 0))) == 3
        assert len(enumerate_efficient((1, 0))) == 3
        assert grothendieck_via_patterns((1, 0)) == grothendieck((1, 0))

    @pytest.mark.parametrize("lam", [(2, 1, 0), (2, 0, 0), (1, 1, 0), (2, 2, 0)])
    def test_matches_operator_recursion(self, lam):
        """Test the pattern sum against pi-operators."""
        assert grothendieck_via_patterns(lam) == grothendieck(lam)

    def test_efficient_count_is_term_count(self):
        """Test that each efficient pattern contributes one monomial."""
        lam = (2, 1, 0)
        assert len(enumerate_efficient(lam)) == grothendieck(lam).term_count()
