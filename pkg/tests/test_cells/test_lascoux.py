"""
Tests for Lascoux polynomials as sums over cells in dual Kogan faces.
"""

import pytest

from src.algebra.operators import grothendieck, lascoux_w_lambda
from src.cells.lascoux import cell_in_face, efficient_cells, lascoux_via_cells, patterns_for_perm
from src.enhanced.patterns import EnhancedPattern
from src.gz.patterns import GZPattern
from src.kogan.faces import FaceDiagram, full_diagram
from src.perm.permutation import Permutation, all_permutations
from src.utils.error_handler import DimensionError


@pytest.mark.unit
class TestCellInFace:
    """Test whether face equalities hold on a whole cell."""

    def test_point_cell_in_full_face(self):
        """Test the maximal vertex of GZ(1, 0) against the one-edge face."""
        right = EnhancedPattern(GZPattern(((0, 1), (1,))), frozenset({(1, 1)}), frozenset({(1, 1, "R")}))
        assert cell_in_face(right, full_diagram(2))

    def test_open_cell_not_in_face(self):
        """Test that the open segment does not lie on y11 = y02."""
        middle = EnhancedPattern(GZPattern(((0, 1), (1,))))
        assert not cell_in_face(middle, full_diagram(2))
        assert cell_in_face(middle, FaceDiagram(2))

    def test_size_mismatch(self):
        """Test that faces and patterns must share n."""
        middle = EnhancedPattern(GZPattern(((0, 1), (1,))))
        with pytest.raises(DimensionError):
            cell_in_face(middle, FaceDiagram(3))


@pytest.mark.unit
class TestLascouxViaCells:
    """Test sums over selected efficient patterns against pi-operators."""

    def test_identity_selects_one_pattern(self):
        """Test that the identity selects only the maximal vertex."""
        patterns = patterns_for_perm(Permutation.identity(3), (3, 2, 0))
        assert len(patterns) == 1
        assert patterns[0].base.rows == ((0, 2, 3), (2, 3), (3,))

    @pytest.mark.parametrize("lam", [(3, 2, 0), (2, 1, 0)])
    def test_matches_operator_recursion(self, lam):
        """Test every permutation of S_3 with shared cells."""
        cells = efficient_cells(lam)
        for w in all_permutations(3):
            assert lascoux_via_cells(w, lam, cells) == lascoux_w_lambda(w, lam)

    def test_longest_gives_grothendieck(self):
        """Test that w0 selects every efficient pattern."""
        lam = (2, 1, 0)
        assert lascoux_via_cells(Permutation.longest(3), lam) == grothendieck(lam)

    def test_degree_mismatch(self):
        """Test that w and lambda must share n."""
        with pytest.raises(DimensionError):
            patterns_for_perm(Permutation.identity(2), (2, 1, 0))
