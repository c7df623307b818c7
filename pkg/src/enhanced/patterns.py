"""
Enhanced Gelfand-Zetlin patterns.

An enhanced pattern is an integer GZ pattern together with circles on some
entries of rows 1..n-1 (row 0 is always circled) and upward edges. An edge
(i, j, "L") joins a_{i,j} to a_{i-1,j}; (i, j, "R") joins it to a_{i-1,j+1}.

Validity conditions, numbered as they are reported by validate():
    2  an edge joins equal entries and its lower entry is circled
    3  in a diamond, the middle pair is joined to the apex iff the bottom is
       joined to both middle entries
    4  below equal entries of row 0 the entry is circled and joined to both
    5  in a triangle (a, b / a) with a < b the bottom is circled and joined left
    6  in a triangle (a, b / b) with a < b a circled bottom is joined right
    7  in a triangle (a, a / a) whose top pair is connected above, the bottom
       is circled and joined to both
    8  in a triangle (a, a / a) a circled bottom is joined to at least one entry
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Mapping, NamedTuple, Optional, Set, Tuple

from src.algebra.polynomial import BetaPolynomial, Monomial
from src.gz.patterns import GZPattern, Position, positions, render_triangle
from src.utils.error_handler import DimensionError, PreconditionError, ReconstructionError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, str]
DIRECTIONS = ("L", "R")


def upper_end(i: int, j: int, direction: str) -> Position:
    return (i - 1, j) if direction == "L" else (i - 1, j + 1)


class Violation(NamedTuple):
    condition: int
    position: Position
    message: str


class Component(NamedTuple):
    """A connected component of the edge graph; value is None for variable components."""
    members: Tuple[Position, ...]
    top: Position
    value: Optional[int]

    @property
    def is_constant(self) -> bool:
        return self.value is not None


class UnionFind:
    def __init__(self):
        self._parent: Dict[Position, Position] = {}

    def find(self, p: Position) -> Position:
        parent = self._parent.setdefault(p, p)
        if parent != p:
            parent = self._parent[p] = self.find(parent)
        return parent

    def union(self, p: Position, q: Position) -> None:
        self._parent[self.find(p)] = self.find(q)

    def connected(self, p: Position, q: Position) -> bool:
        return self.find(p) == self.find(q)


def edge_graph(edges: Iterable[Edge], max_row: Optional[int] = None) -> UnionFind:
    """Union-find over the edges whose lower entry lies in a row <= max_row."""
    uf = UnionFind()
    for i, j, d in edges:
        if max_row is None or i <= max_row:
            uf.union((i, j), upper_end(i, j, d))
    return uf


@dataclass(frozen=True)
class EnhancedPattern:
    base: GZPattern
    circled: FrozenSet[Position] = frozenset()
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "circled", frozenset((int(i), int(j)) for i, j in self.circled))
        object.__setattr__(self, "edges", frozenset((int(i), int(j), str(d)) for i, j, d in self.edges))
        n = self.base.n
        for i, j in self.circled:
            if not (1 <= i <= n - 1 and 1 <= j <= n - i):
                raise DimensionError(f"Circle at ({i},{j}) outside rows 1..{n - 1}")
        for i, j, d in self.edges:
            if d not in DIRECTIONS or not (1 <= i <= n - 1 and 1 <= j <= n - i):
                raise DimensionError(f"Malformed edge ({i},{j},{d!r}) for n={n}")

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def lam(self) -> Tuple[int, ...]:
        return self.base.lam

    def entry(self, i: int, j: int) -> int:
        return self.base.entry(i, j)

    def is_circled(self, i: int, j: int) -> bool:
        return i == 0 or (i, j) in self.circled

    def joins(self, i: int, j: int) -> FrozenSet[str]:
        return frozenset(d for d in DIRECTIONS if (i, j, d) in self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def to_json_dict(self) -> dict:
        mono = monomial(self)
        terms = mono.to_json_dict()["terms"]
        return {
            "base": self.base.to_json_dict(),
            "circled": [list(p) for p in sorted(self.circled)],
            "edges": [list(e) for e in self.sorted_edges()],
            "rank": rank(self),
            "efficient": is_efficient(self),
            "monomial": terms[0] if terms else None,
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "EnhancedPattern":
        return cls(
            GZPattern.from_json_dict(data["base"]),
            frozenset(tuple(p) for p in data.get("circled", [])),
            frozenset(tuple(e) for e in data.get("edges", [])),
        )


def triangle(base: GZPattern, i: int, j: int) -> Tuple[int, int, int]:
    """(upper-left, upper-right, bottom) around (i, j)."""
    return base.entry(i - 1, j), base.entry(i - 1, j + 1), base.entry(i, j)


def validate(pattern: EnhancedPattern) -> List[Violation]:
    """Check every validity condition; an empty list means the pattern is valid."""
    base = pattern.base
    if not base.is_valid():
        raise PreconditionError(f"Base {base} is not a GZ pattern")
    n = pattern.n
    violations: List[Violation] = []

    for i, j, d in pattern.sorted_edges():
        if base.entry(*upper_end(i, j, d)) != base.entry(i, j):
            violations.append(Violation(2, (i, j), f"edge {d} joins unequal entries"))
        if (i, j) not in pattern.circled:
            violations.append(Violation(2, (i, j), f"edge {d} hangs from an uncircled entry"))

    for i, j in positions(n):
        a, b, c = triangle(base, i, j)
        circled = (i, j) in pattern.circled
        joins = pattern.joins(i, j)
        if i == 1 and a == b and not (circled and joins == {"L", "R"}):
            violations.append(Violation(4, (i, j), "equal top-row entries need a doubly joined circle below"))
        if a < b and c == a and not (circled and "L" in joins):
            violations.append(Violation(5, (i, j), f"({a},{b}/{c}) needs a circled bottom joined left"))
        if a < b and c == b and circled and "R" not in joins:
            violations.append(Violation(6, (i, j), f"circled ({a},{b}/{c}) must be joined right"))
        if a == b == c and circled and not joins:
            violations.append(Violation(8, (i, j), "circled bottom of (a,a/a) must be joined"))

    for i in range(2, n):
        above = edge_graph(pattern.edges, max_row=i - 1)
        for j in range(1, n - i + 1):
            a, b, c = triangle(base, i, j)
            doubly = (i, j) in pattern.circled and pattern.joins(i, j) == {"L", "R"}
            top_joined = (i - 1, j, "R") in pattern.edges and (i - 1, j + 1, "L") in pattern.edges
            if top_joined != doubly:
                violations.append(Violation(3, (i, j), "diamond joins disagree"))
            if a == b == c and above.connected((i - 1, j), (i - 1, j + 1)) and not doubly:
                violations.append(Violation(7, (i, j), "connected top pair needs a doubly joined circle below"))
    return violations


def is_valid(pattern: EnhancedPattern) -> bool:
    return not validate(pattern)


def rank(pattern: EnhancedPattern) -> int:
    """Number of uncircled entries in rows 1..n-1."""
    return len(positions(pattern.n)) - len(pattern.circled)


def is_efficient(pattern: EnhancedPattern) -> bool:
    """No (a, a / a) triangle whose bottom misses its upper-right edge."""
    for i, j in positions(pattern.n):
        a, b, c = triangle(pattern.base, i, j)
        if a == b == c and (i, j, "R") not in pattern.edges:
            return False
    return True


def connected_components(pattern: EnhancedPattern) -> List[Component]:
    """Components of the edge graph over rows 0..n-1, ordered by their top entry.

    A component is constant when it reaches row 0 or its top entry is
    circled; otherwise its unique top entry is uncircled and it is variable.
    """
    n = pattern.n
    uf = edge_graph(pattern.edges)
    groups: Dict[Position, List[Position]] = {}
    everything = [(0, j) for j in range(1, n + 1)] + positions(n)
    for p in everything:
        groups.setdefault(uf.find(p), []).append(p)
    components = []
    for members in groups.values():
        members.sort()
        top = members[0]
        constant = pattern.is_circled(*top)
        value = pattern.entry(*top) if constant else None
        components.append(Component(tuple(members), top, value))
    components.sort(key=lambda comp: comp.top)
    return components


def row_sums(pattern: EnhancedPattern) -> List[int]:
    """S_0, ..., S_{n-1}, S_n with S_n = 0."""
    return [sum(row) for row in pattern.base.rows] + [0]


def uncircled_counts(pattern: EnhancedPattern) -> List[int]:
    """D_0, ..., D_n; D_0 = D_n = 0."""
    n = pattern.n
    counts = [0] * (n + 1)
    for i, j in positions(n):
        if (i, j) not in pattern.circled:
            counts[i] += 1
    return counts


def exponent_vector(pattern: EnhancedPattern) -> Tuple[int, ...]:
    """d with d_{n+1-i} = S_{i-1} - S_i + D_i for i = 1..n."""
    n = pattern.n
    sums = row_sums(pattern)
    uncircled = uncircled_counts(pattern)
    exps = [0] * n
    for i in range(1, n + 1):
        exps[n - i] = sums[i - 1] - sums[i] + uncircled[i]
    return tuple(exps)


def monomial(pattern: EnhancedPattern) -> BetaPolynomial:
    """beta^rank x^d for an efficient pattern, 0 otherwise."""
    if not is_efficient(pattern):
        return BetaPolynomial.zero(pattern.n)
    return BetaPolynomial(pattern.n, {Monomial(rank(pattern), exponent_vector(pattern)): 1})


def reconstruct_edges(base: GZPattern, circled: Iterable[Position]) -> EnhancedPattern:
    """The efficient enhancement of base with the given circles.

    Rows are scanned top to bottom. A circled entry is joined to its only
    equal upper neighbour; with two equal neighbours it is joined to both
    when they are already connected (or lie in row 0) and to the right one
    otherwise.

    Raises:
        ReconstructionError: If no efficient enhancement has these circles
    """
    circled = frozenset(circled)
    n = base.n
    edges: Set[Edge] = set()
    for i in range(1, n):
        above = edge_graph(edges, max_row=i - 1)
        for j in range(1, n - i + 1):
            if (i, j) not in circled:
                continue
            a, b, c = triangle(base, i, j)
            if a == c and b == c:
                if i == 1 or above.connected((i - 1, j), (i - 1, j + 1)):
                    edges.update({(i, j, "L"), (i, j, "R")})
                else:
                    edges.add((i, j, "R"))
            elif a == c:
                edges.add((i, j, "L"))
            elif b == c:
                edges.add((i, j, "R"))
    pattern = EnhancedPattern(base, circled, frozenset(edges))
    violations = validate(pattern)
    if violations:
        first = violations[0]
        raise ReconstructionError(
            f"Circles {sorted(circled)} on {base} admit no valid enhancement: "
            f"condition {first.condition} at {first.position}, {first.message}"
        )
    if not is_efficient(pattern):
        raise ReconstructionError(f"Circles {sorted(circled)} on {base} leave an inefficient pattern")
    return pattern


def render_ascii(pattern: EnhancedPattern) -> str:
    """Circled entries as (a); edges as "/" and a backslash."""
    labels = []
    for i, row in enumerate(pattern.base.rows):
        labels.append([
            f"({a})" if pattern.is_circled(i, j) else f" {a} "
            for j, a in enumerate(row, start=1)
        ])
    return render_triangle(labels, pattern.edges)
