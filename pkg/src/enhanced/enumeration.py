"""
Enumeration of enhanced patterns and the Grothendieck polynomial as a sum over them.
"""

import itertools
import logging
from typing import FrozenSet, List, Sequence, Tuple

from src.algebra.polynomial import BetaPolynomial
from src.enhanced.patterns import (
    Edge,
    EnhancedPattern,
    edge_graph,
    is_efficient,
    monomial,
    triangle,
)
from src.gz.patterns import GZPattern, iter_gz_patterns
from src.utils.error_handler import check_partition

logger = logging.getLogger(__name__)

# (circled, joins) choices for one entry
Choice = Tuple[bool, FrozenSet[str]]

_PLAIN = (False, frozenset())
_CIRCLED = (True, frozenset())
_LEFT = (True, frozenset({"L"}))
_RIGHT = (True, frozenset({"R"}))
_BOTH = (True, frozenset({"L", "R"}))


def local_choices(base: GZPattern, i: int, j: int) -> List[Choice]:
    """Circle and edge options allowed by the conditions on one triangle."""
    a, b, c = triangle(base, i, j)
    if a == b == c:
        if i == 1:
            return [_BOTH]
        return [_PLAIN, _LEFT, _RIGHT, _BOTH]
    if c == a:
        return [_LEFT]
    if c == b:
        return [_PLAIN, _RIGHT]
    return [_PLAIN, _CIRCLED]


def _row_is_consistent(base: GZPattern, i: int, edges: FrozenSet[Edge], row: Sequence[Choice]) -> bool:
    """Diamond and connected-top conditions for bottoms in row i."""
    if i < 2:
        return True
    above = edge_graph(edges, max_row=i - 1)
    for j, (circled, joins) in enumerate(row, start=1):
        doubly = circled and joins == {"L", "R"}
        top_joined = (i - 1, j, "R") in edges and (i - 1, j + 1, "L") in edges
        if top_joined != doubly:
            return False
        a, b, c = triangle(base, i, j)
        if a == b == c and not doubly and above.connected((i - 1, j), (i - 1, j + 1)):
            return False
    return True


def enhancements_of(base: GZPattern) -> List[EnhancedPattern]:
    """Every valid enhancement of one integer pattern, in a fixed order."""
    n = base.n
    results: List[EnhancedPattern] = []

    def extend(i: int, circled: FrozenSet, edges: FrozenSet[Edge]):
        if i == n:
            results.append(EnhancedPattern(base, circled, edges))
            return
        options = [local_choices(base, i, j) for j in range(1, n - i + 1)]
        for row in itertools.product(*options):
            if not _row_is_consistent(base, i, edges, row):
                continue
            row_circled = {(i, j) for j, (c, _) in enumerate(row, start=1) if c}
            row_edges = {(i, j, d) for j, (_, joins) in enumerate(row, start=1) for d in sorted(joins)}
            extend(i + 1, circled | row_circled, edges | row_edges)

    extend(1, frozenset(), frozenset())
    return results


def enumerate_all(lam: Sequence[int]) -> List[EnhancedPattern]:
    """All enhanced patterns of lam, efficient or not."""
    lam = check_partition(lam)
    patterns = [p for base in iter_gz_patterns(lam) for p in enhancements_of(base)]
    logger.info(f"Enhanced patterns for {lam}: {len(patterns)}")
    return patterns


def enumerate_efficient(lam: Sequence[int]) -> List[EnhancedPattern]:
    return [p for p in enumerate_all(lam) if is_efficient(p)]


def grothendieck_via_patterns(lam: Sequence[int]) -> BetaPolynomial:
    """Sum of x^P over the efficient enhanced patterns of lam."""
    lam = check_partition(lam)
    result = BetaPolynomial.zero(len(lam))
    for pattern in enumerate_efficient(lam):
        result = result + monomial(pattern)
    return result
