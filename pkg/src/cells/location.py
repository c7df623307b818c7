"""
Point location: the cell containing a point, and the cells whose closure does.
"""

import itertools
import logging
from math import ceil, floor
from typing import List, Sequence, Set

from src.cells.constraints import cell_constraints
from src.enhanced.enumeration import enhancements_of
from src.enhanced.patterns import Edge, EnhancedPattern, rank
from src.gz.patterns import GZPattern, Position, RationalPoint, full_rows, gz_contains
from src.utils.error_handler import PointOutsidePolytopeError, check_partition

logger = logging.getLogger(__name__)


def _check_inside(lam: Sequence[int], p: RationalPoint) -> None:
    if not gz_contains(lam, p):
        raise PointOutsidePolytopeError(f"Point {p} is not in GZ{tuple(lam)}")


def point_to_pattern(lam: Sequence[int], p: RationalPoint) -> EnhancedPattern:
    """The enhanced pattern whose cell contains p.

    Rows are filled top to bottom. An entry equal to an upper neighbour is
    circled and joined to it. Otherwise an integer y >= a_{i-1,j} + 1 is
    circled with a = y; a smaller y takes a = min(a_{i-1,j} + 1, a_{i-1,j+1})
    uncircled, and any other y takes a = ceil(y) uncircled.

    Raises:
        PointOutsidePolytopeError: If p is not in GZ(lam)
    """
    lam = check_partition(lam)
    _check_inside(lam, p)
    y = full_rows(lam, p)
    n = len(lam)
    a: List[List[int]] = [list(y[0])]
    circled: Set[Position] = set()
    edges: Set[Edge] = set()
    for i in range(1, n):
        row = []
        for j in range(1, n - i + 1):
            value = y[i][j - 1]
            left, right = y[i - 1][j - 1], y[i - 1][j]
            a_left, a_right = a[i - 1][j - 1], a[i - 1][j]
            if value == left or value == right:
                circled.add((i, j))
                if value == left:
                    edges.add((i, j, "L"))
                if value == right:
                    edges.add((i, j, "R"))
                row.append(a_left if value == left else a_right)
            elif value.denominator == 1 and value >= a_left + 1:
                circled.add((i, j))
                row.append(int(value))
            elif value < a_left + 1:
                row.append(min(a_left + 1, a_right))
            else:
                row.append(ceil(value))
        a.append(row)
    pattern = EnhancedPattern(GZPattern(tuple(tuple(r) for r in a)), frozenset(circled), frozenset(edges))
    logger.debug(f"Located {p} in cell of rank {rank(pattern)}")
    return pattern


def _closure_bases(lam: Sequence[int], p: RationalPoint) -> List[GZPattern]:
    """Candidate bases: ceil(y) <= a at every coordinate, and a <= floor(y) + 1
    unless a is at most a_{i-1,j} + 1 or y is joined to its upper-right neighbour.
    """
    y = full_rows(lam, p)
    n = len(lam)
    bases: List[GZPattern] = []

    def extend(rows):
        i = len(rows)
        if i == n:
            bases.append(GZPattern(tuple(rows)))
            return
        above = rows[-1]
        ranges = []
        for j in range(n - i):
            value = y[i][j]
            low = max(above[j], ceil(value))
            high = min(above[j + 1], max(floor(value) + 1, above[j] + 1))
            values = list(range(low, high + 1))
            if value == y[i - 1][j + 1] and above[j + 1] > high:
                values.append(above[j + 1])
            ranges.append(values)
        for row in itertools.product(*ranges):
            extend(rows + [row])

    extend([tuple(y[0])])
    return bases


def closure_patterns(lam: Sequence[int], p: RationalPoint) -> List[EnhancedPattern]:
    """All enhanced patterns Q with p in the closure of the cell of Q, by rank then base."""
    lam = check_partition(lam)
    _check_inside(lam, p)
    found = [
        pattern
        for base in _closure_bases(lam, p)
        for pattern in enhancements_of(base)
        if cell_constraints(pattern, lam).contains(p, closed=True)
    ]
    patterns = sorted(found, key=lambda q: (rank(q), q.base.rows, sorted(q.circled), q.sorted_edges()))
    logger.debug(f"{len(patterns)} cells have {p} in their closure")
    return patterns
