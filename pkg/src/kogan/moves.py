"""
Edge moves between dual Kogan faces with the same permutation.

An edge at (t, c) slides along its diagonal block: when the m places
(t+k, c-k) and (t+k, c-k+1), k = 1..m, are all filled, the edge may move to
(t+m+1, c-m) ("down"), or back ("up"). The face permutation is preserved.
"""

import logging
from collections import deque
from typing import List, Set

from src.gz.patterns import Position
from src.kogan.faces import FaceDiagram, place_exists
from src.utils.error_handler import MoveNotApplicableError

logger = logging.getLogger(__name__)

DIRECTIONS = ("down", "up")


def _empty_or_missing(face: FaceDiagram, i: int, j: int) -> bool:
    return not place_exists(face.n, i, j) or (i, j) not in face.edges


def _move_down(face: FaceDiagram, t: int, c: int) -> Position:
    m = 0
    while (t + m + 1, c - m - 1) in face.edges:
        m += 1
    for k in range(1, m + 1):
        if (t + k, c - k + 1) not in face.edges:
            raise MoveNotApplicableError(f"Place ({t + k},{c - k + 1}) of the block is empty")
    target = (t + m + 1, c - m)
    if not place_exists(face.n, *target):
        raise MoveNotApplicableError(f"Target place {target} does not exist for n={face.n}")
    if target in face.edges:
        raise MoveNotApplicableError(f"Target place {target} is already filled")
    if not _empty_or_missing(face, t, c + 1):
        raise MoveNotApplicableError(f"Place ({t},{c + 1}) next to the edge is filled")
    return target


def _move_up(face: FaceDiagram, r: int, c: int) -> Position:
    m = 0
    while (r - m - 1, c + m) in face.edges:
        m += 1
    for k in range(1, m + 1):
        if (r - k, c + k) not in face.edges:
            raise MoveNotApplicableError(f"Place ({r - k},{c + k}) of the block is empty")
    target = (r - m - 1, c + m)
    if not place_exists(face.n, *target):
        raise MoveNotApplicableError(f"Target place {target} does not exist for n={face.n}")
    if target in face.edges:
        raise MoveNotApplicableError(f"Target place {target} is already filled")
    if not _empty_or_missing(face, target[0], target[1] + 1):
        raise MoveNotApplicableError(f"Place ({target[0]},{target[1] + 1}) next to the target is filled")
    if not _empty_or_missing(face, r, c - 1):
        raise MoveNotApplicableError(f"Place ({r},{c - 1}) next to the edge is filled")
    return target


def edge_move(face: FaceDiagram, edge: Position, direction: str = "down") -> FaceDiagram:
    """Move one edge across a filled diagonal block.

    Args:
        face: Diagram containing the edge
        edge: Place (i, j) of the edge to move
        direction: "down" or "up"

    Returns:
        The diagram with the edge moved

    Raises:
        MoveNotApplicableError: If the local configuration does not allow the move
    """
    edge = tuple(edge)
    if edge not in face.edges:
        raise MoveNotApplicableError(f"No edge at {edge}")
    if direction == "down":
        target = _move_down(face, *edge)
    elif direction == "up":
        target = _move_up(face, *edge)
    else:
        raise MoveNotApplicableError(f"Unknown direction {direction!r}")
    return face.with_edges((face.edges - {edge}) | {target})


def applicable_moves(face: FaceDiagram) -> List[FaceDiagram]:
    """Every diagram one admissible move away, in sorted edge order."""
    results = []
    for edge in face.sorted_edges():
        for direction in DIRECTIONS:
            try:
                results.append(edge_move(face, edge, direction))
            except MoveNotApplicableError:
                continue
    return results


def move_orbit(face: FaceDiagram) -> List[FaceDiagram]:
    """All diagrams reachable from face by edge moves in either direction."""
    seen: Set[FaceDiagram] = {face}
    order = [face]
    queue = deque([face])
    while queue:
        current = queue.popleft()
        for neighbour in applicable_moves(current):
            if neighbour not in seen:
                seen.add(neighbour)
                order.append(neighbour)
                queue.append(neighbour)
    logger.debug(f"Move orbit of {face.sorted_edges()}: {len(order)} diagrams")
    return order
