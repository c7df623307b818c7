"""
Integer points of dual Kogan faces and key polynomials as their characters.
"""

import logging
from typing import List, Sequence

from src.algebra.polynomial import BetaPolynomial
from src.gz.patterns import GZPattern, character_of_points, iter_gz_patterns
from src.kogan.faces import FaceDiagram, enumerate_reduced_faces
from src.perm.permutation import Permutation
from src.utils.error_handler import DimensionError, check_partition

logger = logging.getLogger(__name__)


def in_face(pattern: GZPattern, face: FaceDiagram) -> bool:
    return all(pattern.entry(i, j) == pattern.entry(i - 1, j + 1) for i, j in face.edges)


def face_integer_points(face: FaceDiagram, lam: Sequence[int]) -> List[GZPattern]:
    lam = check_partition(lam)
    if face.n != len(lam):
        raise DimensionError(f"Face for n={face.n} used with lambda {lam}")
    return [z for z in iter_gz_patterns(lam) if in_face(z, face)]


def key_points(w: Permutation, lam: Sequence[int]) -> List[GZPattern]:
    """Integer points of the union of reduced faces with permutation w, each once."""
    lam = check_partition(lam)
    if w.n != len(lam):
        raise DimensionError(f"Permutation of degree {w.n} does not match lambda {lam}")
    faces = enumerate_reduced_faces(w.n, w)
    return [z for z in iter_gz_patterns(lam) if any(in_face(z, face) for face in faces)]


def key_polynomial(w: Permutation, lam: Sequence[int]) -> BetaPolynomial:
    """Character of the union of the dual Kogan faces with permutation w."""
    points = key_points(w, lam)
    logger.debug(f"Key polynomial {w}, {tuple(lam)}: {len(points)} points")
    return character_of_points(lam, points)
