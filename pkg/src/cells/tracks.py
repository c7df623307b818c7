"""
Tracks: chains of monomials chosen through pi_1, ..., pi_{n-k} for k = 1..n-1.

Block k applies pi_1 .. pi_{n-k} (the reversed letters of c_{n-k}); at each
block end only monomials whose exponents interlace the block start are kept.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from src.algebra.operators import demazure_lascoux
from src.algebra.polynomial import BetaPolynomial, Monomial
from src.enhanced.patterns import EnhancedPattern, reconstruct_edges
from src.gz.patterns import GZPattern, Position, top_row
from src.utils.error_handler import DimensionError, PreconditionError, check_partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TrackStep:
    generator: int
    monomial: Monomial


@dataclass(frozen=True)
class Track:
    lam: Tuple[int, ...]
    start: Monomial
    steps: Tuple[TrackStep, ...]

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def final(self) -> Monomial:
        return self.steps[-1].monomial if self.steps else self.start

    def monomials(self) -> List[Monomial]:
        return [self.start] + [step.monomial for step in self.steps]

    def blocks(self) -> List[Tuple[TrackStep, ...]]:
        """Steps grouped by block; block k has n-k steps."""
        grouped, offset = [], 0
        for size in block_sizes(self.n):
            grouped.append(self.steps[offset:offset + size])
            offset += size
        return grouped

    def block_ends(self) -> List[Monomial]:
        """End monomial of every block."""
        return [block[-1].monomial for block in self.blocks()]

    def render(self) -> str:
        return " -> ".join(
            BetaPolynomial(self.n, {mono: 1}).render() for mono in self.monomials()
        )

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "monomials": [{"beta": m.beta_deg, "exps": list(m.exps)} for m in self.monomials()],
            "generators": [step.generator for step in self.steps],
        }


def block_sizes(n: int) -> List[int]:
    return list(range(n - 1, 0, -1))


def interlaces(start: Sequence[int], end: Sequence[int], length: int) -> bool:
    """start_1 >= end_1 >= start_2 >= ... >= end_length >= start_{length+1}."""
    return all(start[k] >= end[k] >= start[k + 1] for k in range(length))


def _summands(mono: Monomial, i: int, n: int) -> List[Monomial]:
    image = demazure_lascoux(BetaPolynomial(n, {mono: 1}), i)
    terms = image.terms()
    if any(coeff != 1 for _, coeff in terms):
        raise PreconditionError(f"pi_{i} of {mono} is not multiplicity free")
    return [m for m, _ in terms]


def enumerate_tracks(lam: Sequence[int]) -> List[Track]:
    """Every track from x^lam, in the canonical order of the chosen summands."""
    lam = check_partition(lam)
    n = len(lam)
    start = Monomial(0, lam)
    tracks: List[Track] = []

    def run_block(k: int, block_start: Monomial, current: Monomial,
                  step: int, steps: Tuple[TrackStep, ...]):
        size = n - k
        if step > size:
            if not interlaces(block_start.exps, current.exps, size):
                return
            if k == n - 1:
                tracks.append(Track(lam, start, steps))
            else:
                run_block(k + 1, current, current, 1, steps)
            return
        for summand in _summands(current, step, n):
            run_block(k, block_start, summand, step + 1, steps + (TrackStep(step, summand),))

    if n == 1:
        tracks.append(Track(lam, start, ()))
    else:
        run_block(1, start, start, 1, ())
    logger.debug(f"Tracks for {lam}: {len(tracks)}")
    return tracks


def track_to_pattern(track: Track, lam: Sequence[int] = None) -> EnhancedPattern:
    """Rows from the block ends, circles where beta is unchanged, edges by reconstruction.

    Row k is (mu_{n-k}, ..., mu_1) for the end monomial mu of block k; step j
    of block k decides the circle on entry (k, n-k-j+1).
    """
    lam = check_partition(lam if lam is not None else track.lam)
    if tuple(track.lam) != lam:
        raise DimensionError(f"Track for {track.lam} used with lambda {lam}")
    n = len(lam)
    rows = [top_row(lam)]
    circled: List[Position] = []
    previous = track.start
    for k, block in enumerate(track.blocks(), start=1):
        end = block[-1].monomial
        rows.append(tuple(reversed(end.exps[:n - k])))
        for j, step in enumerate(block, start=1):
            if step.monomial.beta_deg == previous.beta_deg:
                circled.append((k, n - k - j + 1))
            previous = step.monomial
    return reconstruct_edges(GZPattern(tuple(rows)), circled)
