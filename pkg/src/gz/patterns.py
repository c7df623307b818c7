"""
Gelfand-Zetlin patterns and polytopes.

Row 0 is the fixed top row (lambda_n, ..., lambda_1); rows 1..n-1 are free and
row i has n-i entries. Every pattern satisfies
a[i-1][j] <= a[i][j] <= a[i-1][j+1]. All modules share this indexing, with
1-based (i, j) positions.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from src.algebra.polynomial import BetaPolynomial, Monomial
from src.utils.error_handler import DimensionError, UsageError, check_partition

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]
Position = Tuple[int, int]
Number = Union[int, Fraction]


def positions(n: int) -> List[Position]:
    """Free positions (i, j), rows top to bottom, entries left to right."""
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def top_row(lam: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(tuple(lam)))


@dataclass(frozen=True)
class GZPattern:
    """Integer pattern; rows[0] is lambda reversed."""

    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(a) for a in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shape(rows, len(rows[0]) if rows else 0, include_top=True)

    @classmethod
    def from_free_rows(cls, lam: Sequence[int], free_rows: Sequence[Sequence[int]]) -> "GZPattern":
        return cls((top_row(lam),) + tuple(tuple(row) for row in free_rows))

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def lam(self) -> Partition:
        return top_row(self.rows[0])

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j - 1]

    def free_rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self.rows[1:]

    def as_point(self) -> "RationalPoint":
        return RationalPoint(tuple(tuple(Fraction(a) for a in row) for row in self.free_rows()))

    def is_valid(self) -> bool:
        return gz_contains(self.lam, self)

    def to_json_dict(self) -> dict:
        return {"lambda": list(self.lam), "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "GZPattern":
        rows = tuple(tuple(int(a) for a in row) for row in data["rows"])
        if tuple(data.get("lambda", top_row(rows[0]))) != top_row(rows[0]):
            raise DimensionError("Pattern JSON: lambda does not match row 0")
        return cls(rows)

    def render(self) -> str:
        return " / ".join(",".join(str(a) for a in row) for row in self.rows)

    def render_ascii(self) -> str:
        return render_triangle([[str(a) for a in row] for row in self.rows])

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class RationalPoint:
    """Point of R^{n(n-1)/2}; rows[i-1] holds y_{i,1..n-i}. Exact rationals only."""

    rows: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(y) for y in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shape(rows, len(rows) + 1, include_top=False)

    @property
    def n(self) -> int:
        return len(self.rows) + 1

    def coordinate(self, i: int, j: int) -> Fraction:
        return self.rows[i - 1][j - 1]

    def free_rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self.rows

    def is_integral(self) -> bool:
        return all(y.denominator == 1 for row in self.rows for y in row)

    def to_json_dict(self) -> dict:
        return {"rows": [[str(y) for y in row] for row in self.rows]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "RationalPoint":
        return cls(tuple(tuple(Fraction(y) for y in row) for row in data["rows"]))

    def render(self) -> str:
        return " / ".join(",".join(str(y) for y in row) for row in self.rows)

    def __str__(self) -> str:
        return self.render()


def _check_shape(rows, n: int, include_top: bool) -> None:
    offset = 0 if include_top else 1
    expected = n - 1 + (1 if include_top else 0)
    if len(rows) != expected:
        raise DimensionError(f"Expected {expected} rows for n={n}, got {len(rows)}")
    for k, row in enumerate(rows):
        if len(row) != n - k - offset:
            raise DimensionError(
                f"Row {k + offset} has {len(row)} entries, expected {n - k - offset}"
            )


def parse_partition(text: str) -> Partition:
    """Parse "3,2,0" into a validated partition."""
    try:
        parts = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"Cannot parse partition {text!r}")
    return check_partition(parts)


def parse_point(text: str) -> RationalPoint:
    """Parse "5/2,31/10,9;5/2,19/5;37/10": rows separated by ";"."""
    try:
        rows = tuple(
            tuple(Fraction(t) for t in row.replace(" ", "").split(",") if t)
            for row in text.split(";")
            if row.strip()
        )
        return RationalPoint(rows)
    except (ValueError, ZeroDivisionError, DimensionError) as e:
        raise UsageError(f"Cannot parse point {text!r}: {e}")


def full_rows(lam: Sequence[int], z: Union[GZPattern, RationalPoint]) -> List[Tuple[Number, ...]]:
    """Rows 0..n-1 of z with row 0 filled from lambda."""
    lam = check_partition(lam)
    if z.n != len(lam):
        raise DimensionError(f"Point of size n={z.n} does not match lambda {lam}")
    return [top_row(lam)] + [tuple(row) for row in z.free_rows()]


def gz_contains(lam: Sequence[int], p: Union[GZPattern, RationalPoint]) -> bool:
    """All interlacing inequalities hold (non-strict)."""
    rows = full_rows(lam, p)
    for i in range(1, len(rows)):
        above, row = rows[i - 1], rows[i]
        for j in range(len(row)):
            if not above[j] <= row[j] <= above[j + 1]:
                return False
    return True


def _row_choices(above: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    ranges = [range(above[j], above[j + 1] + 1) for j in range(len(above) - 1)]
    return itertools.product(*ranges)


def iter_gz_patterns(lam: Sequence[int]) -> Iterator[GZPattern]:
    lam = check_partition(lam)
    n = len(lam)

    def extend(rows):
        if len(rows) == n:
            yield GZPattern(tuple(rows))
            return
        for row in _row_choices(rows[-1]):
            yield from extend(rows + [row])

    yield from extend([top_row(lam)])


def enumerate_gz_patterns(lam: Sequence[int]) -> List[GZPattern]:
    """All integer points of GZ(lam), lexicographic by rows."""
    patterns = list(iter_gz_patterns(lam))
    logger.debug(f"GZ{tuple(lam)}: {len(patterns)} integer points")
    return patterns


def weyl_dimension(lam: Sequence[int]) -> int:
    """prod_{i<j} (lam_i - lam_j - i + j) / (j - i)."""
    lam = check_partition(lam)
    result = Fraction(1)
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            result *= Fraction(lam[i] - lam[j] + j - i, j - i)
    if result.denominator != 1:
        raise ArithmeticError(f"Weyl dimension of {lam} is not an integer: {result}")
    return int(result)


def project_weight(lam: Sequence[int], z: Union[GZPattern, RationalPoint]) -> Tuple[Number, ...]:
    """a_k = S_{n-k} - S_{n-k+1}, S_i the sum of row i and S_n = 0."""
    rows = full_rows(lam, z)
    n = len(rows)
    sums = [sum(row) for row in rows] + [0]
    weight = tuple(sums[n - k] - sums[n - k + 1] for k in range(1, n + 1))
    if isinstance(z, GZPattern):
        return tuple(int(a) for a in weight)
    return weight


def character_of_points(lam: Sequence[int], pts: Iterable[GZPattern]) -> BetaPolynomial:
    """Sum of x^weight over the points; repeated weights accumulate."""
    n = len(lam)
    terms = {}
    for z in pts:
        mono = Monomial(0, project_weight(lam, z))
        terms[mono] = terms.get(mono, 0) + 1
    return BetaPolynomial(n, terms)


def shift_partition(lam: Sequence[int], k: int) -> Partition:
    """lam + (k, ..., k)."""
    return check_partition(tuple(part + k for part in lam))


def shift_pattern(pattern: GZPattern, k: int) -> GZPattern:
    """Translate every entry, row 0 included, by k."""
    return GZPattern(tuple(tuple(a + k for a in row) for row in pattern.rows))


def maximal_vertex(lam: Sequence[int]) -> GZPattern:
    """The vertex with y_{ij} = y_{i-1,j+1} everywhere; row i is row 0 without its first i entries."""
    top = top_row(check_partition(lam))
    return GZPattern(tuple(top[i:] for i in range(len(top))))


def grid_points(lam: Sequence[int], denominator: int) -> List[RationalPoint]:
    """All points of GZ(lam) whose coordinates lie in (1/denominator)Z."""
    lam = check_partition(lam)
    if denominator < 1:
        raise UsageError(f"Grid denominator must be positive, got {denominator}")
    n = len(lam)
    step = Fraction(1, denominator)

    def row_choices(above):
        ranges = []
        for j in range(len(above) - 1):
            low = ceil(above[j] * denominator)
            high = floor(above[j + 1] * denominator)
            ranges.append([k * step for k in range(low, high + 1)])
        return itertools.product(*ranges)

    points: List[RationalPoint] = []

    def extend(rows):
        if len(rows) == n:
            points.append(RationalPoint(tuple(rows[1:])))
            return
        for row in row_choices(rows[-1]):
            extend(rows + [row])

    extend([tuple(Fraction(a) for a in top_row(lam))])
    logger.debug(f"Grid 1/{denominator} of GZ{lam}: {len(points)} points")
    return points


def render_triangle(labels: Sequence[Sequence[str]], links: Iterable[Tuple[int, int, str]] = ()) -> str:
    """Draw rows of labels as a triangle.

    A link (i, j, "R") joins (i, j) to (i-1, j+1) and is drawn as "/";
    (i, j, "L") joins it to (i-1, j) and is drawn as a backslash.
    """
    width = max((len(label) for row in labels for label in row), default=1)
    links = set(links)

    def start(i: int, j: int) -> int:
        return i * width + (j - 1) * 2 * width

    lines: List[str] = []
    for i, row in enumerate(labels):
        if i > 0:
            link_line = [" "] * (start(i, len(row)) + 2 * width)
            for j in range(1, len(row) + 1):
                if (i, j, "L") in links:
                    link_line[start(i, j) - 1] = "\\"
                if (i, j, "R") in links:
                    link_line[start(i, j) + width] = "/"
            lines.append("".join(link_line).rstrip())
        text = [" "] * (start(i, len(row)) + width)
        for j, label in enumerate(row, start=1):
            cell = label.center(width)
            text[start(i, j):start(i, j) + width] = list(cell)
        lines.append("".join(text).rstrip())
    return "\n".join(lines)
