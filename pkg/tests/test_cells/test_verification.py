"""
Tests for the cell decomposition check.
"""

import pytest

from src.cells.verification import euler_characteristic, verify_cellular
from src.utils.error_handler import InvalidPartitionError


@pytest.mark.unit
class TestEulerCharacteristic:
    """Test the alternating count of cells by rank."""

    def test_single_box(self):
        """Test GZ(1, 0): two endpoints and one open interval."""
        assert euler_characteristic((1, 0)) == 1

    @pytest.mark.parametrize("lam", [(2, 1, 0), (1, 1, 0), (2, 0, 0)])
    def test_polytopes_are_contractible(self, lam):
        """Test that the cells of a polytope have Euler characteristic 1."""
        assert euler_characteristic(lam) == 1


@pytest.mark.unit
class TestVerifyCellular:
    """Test the grid check of the decomposition."""

    def test_single_box_on_half_grid(self):
        """Test GZ(1, 0) on the grid of step 1/2."""
        report = verify_cellular((1, 0), denominator=2)
        assert report.ok
        # zero cells, two checks for each of three points, Euler characteristic
        assert report.cases_run == 8

    def test_without_closure_checks(self):
        """Test that skipping closures records one check per point."""
        report = verify_cellular((1, 0), denominator=2, check_closure=False)
        assert report.ok
        assert report.cases_run == 5

    def test_three_rows(self):
        """Test GZ(2, 1, 0) on the half-integer grid."""
        assert verify_cellular((2, 1, 0), denominator=2).ok

    def test_bad_partition(self):
        """Test that an increasing sequence is rejected."""
        with pytest.raises(InvalidPartitionError):
            verify_cellular((0, 1))


@pytest.mark.slow
class TestCellularGrids:
    """Test the decomposition on the grids of step 1, 1/2 and 1/3."""

    @pytest.mark.parametrize("denominator", [1, 2, 3])
    @pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (3, 2, 0), (2, 2, 0)])
    def test_every_grid_point_has_one_cell(self, lam, denominator):
        """Test uniqueness, closure order, zero cells and Euler characteristic."""
        report = verify_cellular(lam, denominator)
        assert report.ok, report.render()
