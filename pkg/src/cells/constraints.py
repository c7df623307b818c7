"""
Constraint systems of cells.

Each coordinate y_{ij} of a cell is pinned to an upper coordinate, pinned to a
constant, or confined to an open interval whose ends are a constant and/or
coordinates. The strict GZ inequalities that survive on the cell's affine hull
are attached to the intervals, or kept as extra inequalities; inequalities that
the hull forces to be equalities are kept non-strict.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import numpy as np

from src.enhanced.patterns import (
    EnhancedPattern,
    UnionFind,
    connected_components,
    upper_end,
    validate,
)
from src.gz.patterns import Position, RationalPoint, gz_contains, positions, top_row
from src.utils.error_handler import DimensionError, PreconditionError, check_partition

logger = logging.getLogger(__name__)

Term = Union[int, Position]
ZERO = "zero"


@dataclass(frozen=True)
class EqualsCoordinate:
    target: Position


@dataclass(frozen=True)
class EqualsConstant:
    value: int


@dataclass(frozen=True)
class OpenInterval:
    """max(lower) < y < min(upper)."""
    lower: Tuple[Term, ...]
    upper: Tuple[Term, ...]


@dataclass(frozen=True)
class Inequality:
    left: Term
    right: Term
    strict: bool = True


Constraint = Union[EqualsCoordinate, EqualsConstant, OpenInterval]


def render_term(term: Term) -> str:
    if isinstance(term, tuple):
        return f"y{term[0]}{term[1]}"
    return str(term)


def _term_json(term: Term):
    return list(term) if isinstance(term, tuple) else term


def _term_from_json(data) -> Term:
    return tuple(data) if isinstance(data, list) else int(data)


@dataclass
class CellConstraints:
    lam: Tuple[int, ...]
    coordinates: Dict[Position, Constraint]
    extras: List[Inequality] = field(default_factory=list)
    hull_classes: Dict[Position, Term] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.lam)

    def value(self, p: RationalPoint, term: Term) -> Fraction:
        if isinstance(term, tuple):
            i, j = term
            if i == 0:
                return Fraction(top_row(self.lam)[j - 1])
            return p.coordinate(i, j)
        return Fraction(term)

    def contains(self, p: RationalPoint, closed: bool = False) -> bool:
        """Exact evaluation; closed=True relaxes every strict inequality."""
        if p.n != self.n:
            raise DimensionError(f"Point of size n={p.n} used with a cell for n={self.n}")
        if not gz_contains(self.lam, p):
            return False

        def less(a: Fraction, b: Fraction, strict: bool) -> bool:
            return a < b if strict and not closed else a <= b

        for (i, j), constraint in self.coordinates.items():
            y = p.coordinate(i, j)
            if isinstance(constraint, EqualsCoordinate):
                if y != self.value(p, constraint.target):
                    return False
            elif isinstance(constraint, EqualsConstant):
                if y != constraint.value:
                    return False
            else:
                if not all(less(self.value(p, t), y, True) for t in constraint.lower):
                    return False
                if not all(less(y, self.value(p, t), True) for t in constraint.upper):
                    return False
        return all(
            less(self.value(p, ineq.left), self.value(p, ineq.right), ineq.strict)
            for ineq in self.extras
        )

    def dimension(self) -> int:
        """Number of free variable classes of the affine hull."""
        return len({rep for rep in self.hull_classes.values() if isinstance(rep, tuple)})

    def render(self) -> str:
        """Text form, e.g. "2<y11<3, y21=y11, y21<y31<min(4,y22)"."""
        parts = []
        for pos in positions(self.n):
            constraint = self.coordinates[pos]
            name = render_term(pos)
            if isinstance(constraint, EqualsCoordinate):
                parts.append(f"{name}={render_term(constraint.target)}")
            elif isinstance(constraint, EqualsConstant):
                parts.append(f"{name}={constraint.value}")
            else:
                parts.append(f"{_render_bound(constraint.lower, 'max')}<{name}<{_render_bound(constraint.upper, 'min')}")
        for ineq in self.extras:
            op = "<" if ineq.strict else "<="
            parts.append(f"{render_term(ineq.left)}{op}{render_term(ineq.right)}")
        return ", ".join(parts)

    def to_json_dict(self) -> dict:
        items = []
        for pos in positions(self.n):
            constraint = self.coordinates[pos]
            entry = {"coord": list(pos)}
            if isinstance(constraint, EqualsCoordinate):
                entry.update(kind="eq-coord", target=list(constraint.target))
            elif isinstance(constraint, EqualsConstant):
                entry.update(kind="eq-const", value=constraint.value)
            else:
                entry.update(
                    kind="interval",
                    lower=[_term_json(t) for t in constraint.lower],
                    upper=[_term_json(t) for t in constraint.upper],
                )
            items.append(entry)
        return {
            "lambda": list(self.lam),
            "constraints": items,
            "extras": [
                {"left": _term_json(e.left), "right": _term_json(e.right), "strict": e.strict}
                for e in self.extras
            ],
            "dimension": self.dimension(),
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "CellConstraints":
        coordinates: Dict[Position, Constraint] = {}
        for entry in data["constraints"]:
            pos = tuple(entry["coord"])
            if entry["kind"] == "eq-coord":
                coordinates[pos] = EqualsCoordinate(tuple(entry["target"]))
            elif entry["kind"] == "eq-const":
                coordinates[pos] = EqualsConstant(int(entry["value"]))
            else:
                coordinates[pos] = OpenInterval(
                    tuple(_term_from_json(t) for t in entry["lower"]),
                    tuple(_term_from_json(t) for t in entry["upper"]),
                )
        extras = [
            Inequality(_term_from_json(e["left"]), _term_from_json(e["right"]), bool(e["strict"]))
            for e in data.get("extras", [])
        ]
        return cls(tuple(data["lambda"]), coordinates, extras)


def _render_bound(terms: Sequence[Term], op: str) -> str:
    if len(terms) == 1:
        return render_term(terms[0])
    return f"{op}({','.join(render_term(t) for t in terms)})"


class _Interval:
    """Mutable interval while the system is being built."""

    def __init__(self):
        self.lower_const: Optional[int] = None
        self.upper_const: Optional[int] = None
        self.lower_coords: Set[Position] = set()
        self.upper_coords: Set[Position] = set()

    def add_lower(self, term: Term) -> None:
        if isinstance(term, tuple):
            self.lower_coords.add(term)
        else:
            self.lower_const = term if self.lower_const is None else max(self.lower_const, term)

    def add_upper(self, term: Term) -> None:
        if isinstance(term, tuple):
            self.upper_coords.add(term)
        else:
            self.upper_const = term if self.upper_const is None else min(self.upper_const, term)

    def freeze(self) -> OpenInterval:
        lower = ((self.lower_const,) if self.lower_const is not None else ()) + tuple(sorted(self.lower_coords))
        upper = ((self.upper_const,) if self.upper_const is not None else ()) + tuple(sorted(self.upper_coords))
        return OpenInterval(lower, upper)


def _gz_inequalities(n: int) -> List[Tuple[Position, Position]]:
    """Pairs (u, v) meaning y_u <= y_v, in position order."""
    pairs = []
    for i, j in positions(n):
        pairs.append(((i - 1, j), (i, j)))
        pairs.append(((i, j), (i - 1, j + 1)))
    return pairs


def _shortest_paths(nodes: List, edges: Dict[Tuple[int, int], int]) -> np.ndarray:
    """Floyd-Warshall; dist[a, b] bounds x_b - x_a from above."""
    size = len(nodes)
    dist = np.full((size, size), np.inf)
    np.fill_diagonal(dist, 0.0)
    for (a, b), w in edges.items():
        dist[a, b] = min(dist[a, b], w)
    for k in range(size):
        dist = np.minimum(dist, dist[:, k, None] + dist[None, k, :])
    return dist


def cell_constraints(pattern: EnhancedPattern, lam: Optional[Sequence[int]] = None) -> CellConstraints:
    """Constraint system of the cell of an enhanced pattern.

    Args:
        pattern: A valid enhanced pattern
        lam: Partition; defaults to the pattern's top row

    Returns:
        The CellConstraints, with the hull refinement applied

    Raises:
        PreconditionError: If the pattern is invalid
    """
    lam = check_partition(lam if lam is not None else pattern.lam)
    if pattern.lam != lam:
        raise DimensionError(f"Pattern for {pattern.lam} used with lambda {lam}")
    violations = validate(pattern)
    if violations:
        raise PreconditionError(f"Invalid enhanced pattern: {violations[0].message} at {violations[0].position}")
    n = len(lam)
    base = pattern.base

    class_of: Dict[Position, Term] = {}
    for comp in connected_components(pattern):
        rep = comp.value if comp.is_constant else comp.top
        for member in comp.members:
            class_of[member] = rep

    def literal(pos: Position) -> Term:
        rep = class_of[pos]
        return rep if isinstance(rep, int) else pos

    coordinates: Dict[Position, Constraint] = {}
    intervals: Dict[Position, _Interval] = {}
    for i, j in positions(n):
        joins = pattern.joins(i, j)
        a = base.entry(i, j)
        if joins:
            target = upper_end(i, j, "L" if "L" in joins else "R")
            if target[0] == 0:
                coordinates[(i, j)] = EqualsConstant(base.entry(*target))
            else:
                coordinates[(i, j)] = EqualsCoordinate(target)
        elif (i, j) in pattern.circled:
            coordinates[(i, j)] = EqualsConstant(a)
        else:
            interval = _Interval()
            if a - base.entry(i - 1, j) >= 2:
                interval.add_lower(a - 1)
            else:
                interval.add_lower(literal((i - 1, j)))
            if base.entry(i - 1, j + 1) == a:
                interval.add_upper(literal((i - 1, j + 1)))
            else:
                interval.add_upper(a)
            intervals[(i, j)] = interval

    roots = sorted({rep for rep in class_of.values() if isinstance(rep, tuple)})
    nodes = [ZERO] + roots
    index = {node: k for k, node in enumerate(nodes)}

    def node_of(pos: Position) -> Tuple[int, int]:
        rep = class_of[pos]
        return (0, rep) if isinstance(rep, int) else (index[rep], 0)

    edges: Dict[Tuple[int, int], int] = {}
    for u, v in _gz_inequalities(n):
        (nu, ou), (nv, ov) = node_of(u), node_of(v)
        # x_nu - x_nv <= ov - ou
        key = (nv, nu)
        edges[key] = min(edges.get(key, ov - ou), ov - ou)
    dist = _shortest_paths(nodes, edges)

    def const_upper(pos: Position) -> Optional[int]:
        rep = class_of[pos]
        if isinstance(rep, int):
            return rep
        return intervals[rep].upper_const

    def const_lower(pos: Position) -> Optional[int]:
        rep = class_of[pos]
        if isinstance(rep, int):
            return rep
        return intervals[rep].lower_const

    hull = UnionFind()
    extras: List[Inequality] = []
    for u, v in _gz_inequalities(n):
        (nu, ou), (nv, ov) = node_of(u), node_of(v)
        if (nu, ou) == (nv, ov) or (nu == 0 and nv == 0):
            continue
        if dist[nu, nv] + (ov - ou) <= 0:
            hull.union(nodes[nu], nodes[nv])
            extras.append(Inequality(literal(u), literal(v), strict=False))
            continue
        cu, cv = const_upper(u), const_lower(v)
        if cu is not None and cv is not None and cu <= cv:
            continue
        if u in intervals and literal(v) in intervals[u].upper_coords:
            continue
        if v in intervals and literal(u) in intervals[v].lower_coords:
            continue
        if u in intervals:
            intervals[u].add_upper(literal(v))
        elif v in intervals:
            intervals[v].add_lower(literal(u))
        else:
            extras.append(Inequality(literal(u), literal(v), strict=True))

    for pos, interval in intervals.items():
        coordinates[pos] = interval.freeze()

    hull_classes: Dict[Position, Term] = {}
    zero_root = hull.find(ZERO)
    for pos in positions(n):
        rep = class_of[pos]
        if isinstance(rep, int):
            hull_classes[pos] = rep
        elif hull.find(rep) == zero_root:
            hull_classes[pos] = int(-dist[index[rep], 0])
        else:
            hull_classes[pos] = hull.find(rep)
    return CellConstraints(lam, coordinates, extras, hull_classes)


def cell_contains(pattern: EnhancedPattern, lam: Sequence[int], p: RationalPoint) -> bool:
    return cell_constraints(pattern, lam).contains(p)


def closure_contains(pattern: EnhancedPattern, lam: Sequence[int], p: RationalPoint) -> bool:
    """Membership in the closure of the cell (all inequalities non-strict)."""
    return cell_constraints(pattern, lam).contains(p, closed=True)


def cell_dimension(pattern: EnhancedPattern, lam: Optional[Sequence[int]] = None) -> int:
    return cell_constraints(pattern, lam).dimension()


def render(pattern: EnhancedPattern, lam: Optional[Sequence[int]] = None) -> str:
    return cell_constraints(pattern, lam).render()
