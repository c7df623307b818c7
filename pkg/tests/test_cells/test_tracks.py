"""
Tests for tracks through the pi-operators and their patterns.
"""

import pytest

from src.algebra.polynomial import Monomial
from src.cells.tracks import (
    Track,
    TrackStep,
    block_sizes,
    enumerate_tracks,
    interlaces,
    track_to_pattern,
)
from src.enhanced.enumeration import enumerate_efficient
from src.enhanced.patterns import monomial
from src.utils.error_handler import DimensionError


def beta_track() -> Track:
    """x1^2 x2 -> b x1^2 x2^2 -> b^2 x1^2 x2 x3^2 -> b^2 x1^2 x2 x3^2."""
    return Track(
        (2, 1, 0),
        Monomial(0, (2, 1, 0)),
        (
            TrackStep(1, Monomial(1, (2, 2, 0))),
            TrackStep(2, Monomial(2, (2, 1, 2))),
            TrackStep(1, Monomial(2, (2, 1, 2))),
        ),
    )


@pytest.mark.unit
class TestTrackShape:
    """Test blocks and the interlacing filter."""

    def test_block_sizes(self):
        """Test that block k has n-k steps."""
        assert block_sizes(4) == [3, 2, 1]

    def test_interlaces(self):
        """Test the block-end condition."""
        assert interlaces((2, 1, 0), (2, 1, 2), 2)
        assert not interlaces((2, 1, 0), (0, 2, 1), 2)

    def test_blocks_of_track(self):
        """Test grouping steps and reading block ends."""
        track = beta_track()
        assert [len(block) for block in track.blocks()] == [2, 1]
        assert track.block_ends() == [Monomial(2, (2, 1, 2)), Monomial(2, (2, 1, 2))]
        assert track.final == Monomial(2, (2, 1, 2))
        assert track.render() == "x1^2*x2 -> b*x1^2*x2^2 -> b^2*x1^2*x2*x3^2 -> b^2*x1^2*x2*x3^2"


@pytest.mark.unit
class TestTracks:
    """Test enumeration and the bijection with efficient patterns."""

    def test_known_track_is_enumerated(self):
        """Test that the beta track appears exactly once."""
        tracks = enumerate_tracks((2, 1, 0))
        assert tracks.count(beta_track()) == 1

    def test_track_to_pattern(self):
        """Test rows from block ends and the circle where beta stays put."""
        pattern = track_to_pattern(beta_track())
        assert pattern.base.rows == ((0, 1, 2), (1, 2), (2,))
        assert pattern.circled == frozenset({(2, 1)})
        assert pattern.edges == frozenset({(2, 1, "R")})
        assert monomial(pattern).terms() == [(beta_track().final, 1)]

    @pytest.mark.parametrize("lam", [(1, 0), (2, 1, 0), (2, 0, 0), (1, 1, 0)])
    def test_bijection_with_efficient_patterns(self, lam):
        """Test that tracks map one-to-one onto efficient patterns."""
        tracks = enumerate_tracks(lam)
        patterns = [track_to_pattern(track) for track in tracks]
        assert len(set(patterns)) == len(tracks)
        assert set(patterns) == set(enumerate_efficient(lam))

    def test_final_monomial_matches_pattern(self):
        """Test that each track ends at its pattern's monomial."""
        for track in enumerate_tracks((2, 1, 0)):
            assert monomial(track_to_pattern(track)).terms() == [(track.final, 1)]

    def test_lambda_mismatch(self):
        """Test that a track is only read against its own lambda."""
        with pytest.raises(DimensionError):
            track_to_pattern(beta_track(), (3, 1, 0))

    def test_json(self):
        """Test the serialized form of a track."""
        data = beta_track().to_json_dict()
        assert data["generators"] == [1, 2, 1]
        assert data["monomials"][0] == {"beta": 0, "exps": [2, 1, 0]}
