"""
Lascoux polynomials as sums over the cells lying in dual Kogan faces.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from src.algebra.polynomial import BetaPolynomial
from src.cells.constraints import CellConstraints, cell_constraints
from src.enhanced.enumeration import enumerate_efficient
from src.enhanced.patterns import EnhancedPattern, monomial
from src.gz.patterns import Position, top_row
from src.kogan.faces import FaceDiagram, enumerate_reduced_faces
from src.perm.permutation import Permutation
from src.utils.error_handler import DimensionError, check_partition

logger = logging.getLogger(__name__)


def _hull_class(system: CellConstraints, pos: Position):
    if pos[0] == 0:
        return top_row(system.lam)[pos[1] - 1]
    return system.hull_classes[pos]


def system_in_face(system: CellConstraints, face: FaceDiagram) -> bool:
    """Every edge equality of the face holds on the whole cell."""
    return all(
        _hull_class(system, (i, j)) == _hull_class(system, (i - 1, j + 1))
        for i, j in face.edges
    )


def cell_in_face(pattern: EnhancedPattern, face: FaceDiagram,
                 lam: Optional[Sequence[int]] = None) -> bool:
    """True iff each y_{i,j} = y_{i-1,j+1} of the face is implied by the cell's constraints.

    Both coordinates must share an equality class of the cell's affine hull,
    or be pinned to the same constant.
    """
    if face.n != pattern.n:
        raise DimensionError(f"Face for n={face.n} used with a pattern for n={pattern.n}")
    return system_in_face(cell_constraints(pattern, lam), face)


def efficient_cells(lam: Sequence[int]) -> List[Tuple[EnhancedPattern, CellConstraints]]:
    """Efficient patterns of lam paired with their cell systems."""
    lam = check_partition(lam)
    return [(pattern, cell_constraints(pattern, lam)) for pattern in enumerate_efficient(lam)]


def select_in_faces(cells: Sequence[Tuple[EnhancedPattern, CellConstraints]],
                    faces: Sequence[FaceDiagram]) -> List[EnhancedPattern]:
    return [pattern for pattern, system in cells if any(system_in_face(system, face) for face in faces)]


def patterns_for_perm(w: Permutation, lam: Sequence[int],
                      cells: Optional[Sequence[Tuple[EnhancedPattern, CellConstraints]]] = None) -> List[EnhancedPattern]:
    """Efficient patterns whose cell lies in some reduced face with permutation w.

    Pass precomputed cells when many permutations share one lambda.
    """
    lam = check_partition(lam)
    if w.n != len(lam):
        raise DimensionError(f"Permutation of degree {w.n} does not match lambda {lam}")
    if cells is None:
        cells = efficient_cells(lam)
    selected = select_in_faces(cells, enumerate_reduced_faces(w.n, w))
    logger.debug(f"P+({w}, {lam}): {len(selected)} of {len(cells)} efficient patterns")
    return selected


def lascoux_via_cells(w: Permutation, lam: Sequence[int],
                      cells: Optional[Sequence[Tuple[EnhancedPattern, CellConstraints]]] = None) -> BetaPolynomial:
    result = BetaPolynomial.zero(len(lam))
    for pattern in patterns_for_perm(w, lam, cells):
        result = result + monomial(pattern)
    return result
