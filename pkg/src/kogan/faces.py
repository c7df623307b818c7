"""
Dual Kogan faces of GZ(lambda) as edge diagrams.

An edge at (i, j) imposes y_{i,j} = y_{i-1,j+1} and carries the label s_{n-j}.
The face word reads rows n-1 down to 1, each row right to left; the
permutation of a face is w0 composed with the product of its word.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Mapping, Optional

from src.gz.patterns import Position, positions, render_triangle
from src.perm.permutation import (
    Permutation,
    Word,
    canonical_block_lengths,
    word_product,
)
from src.utils.error_handler import DimensionError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FaceDiagram:
    n: int
    edges: FrozenSet[Position] = frozenset()

    def __post_init__(self):
        edges = frozenset((int(i), int(j)) for i, j in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, j in edges:
            if not (1 <= i <= self.n - 1 and 1 <= j <= self.n - i):
                raise DimensionError(f"Edge place ({i},{j}) does not exist for n={self.n}")

    def __contains__(self, place) -> bool:
        return tuple(place) in self.edges

    def with_edges(self, edges: Iterable[Position]) -> "FaceDiagram":
        return FaceDiagram(self.n, frozenset(edges))

    def sorted_edges(self) -> List[Position]:
        return sorted(self.edges)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "FaceDiagram":
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))


def place_exists(n: int, i: int, j: int) -> bool:
    return 1 <= i <= n - 1 and 1 <= j <= n - i


def edge_label(n: int, place: Position) -> int:
    return n - place[1]


def reading_places(n: int) -> List[Position]:
    """Rows n-1 down to 1, right to left; labels along it give w0_word_reading(n)."""
    return [(i, j) for i in range(n - 1, 0, -1) for j in range(n - i, 0, -1)]


def face_word(face: FaceDiagram) -> Word:
    return tuple(edge_label(face.n, place) for place in reading_places(face.n) if place in face.edges)


def is_reduced_face(face: FaceDiagram) -> bool:
    word = face_word(face)
    return word_product(word, face.n).length() == len(word)


def face_permutation(face: FaceDiagram) -> Permutation:
    """w0 o product(face_word); logged when the face is not reduced."""
    if not is_reduced_face(face):
        logger.debug(f"Permutation requested for non-reduced face {face.sorted_edges()}")
    return Permutation.longest(face.n).compose(word_product(face_word(face), face.n))


def full_diagram(n: int) -> FaceDiagram:
    return FaceDiagram(n, frozenset(positions(n)))


def face_dimension(face: FaceDiagram) -> int:
    """Number of free coordinates, n(n-1)/2 minus the edge count."""
    return face.n * (face.n - 1) // 2 - len(face.edges)


def enumerate_reduced_faces(n: int, w: Optional[Permutation] = None) -> List[FaceDiagram]:
    """All reduced faces, optionally only those with face_permutation == w.

    Backtracks along the reading order and abandons a branch as soon as the
    partial word stops being reduced. Faces come out with "place empty"
    explored before "place filled".
    """
    if w is not None and w.n != n:
        raise DimensionError(f"Permutation of degree {w.n} used with n={n}")
    places = reading_places(n)
    faces: List[FaceDiagram] = []

    def extend(k: int, chosen: List[Position], product: Permutation):
        if k == len(places):
            faces.append(FaceDiagram(n, frozenset(chosen)))
            return
        extend(k + 1, chosen, product)
        a = edge_label(n, places[k])
        # product o s_a is longer iff product(a) < product(a+1)
        if product(a) < product(a + 1):
            extend(k + 1, chosen + [places[k]], product.compose(Permutation.simple(n, a)))

    extend(0, [], Permutation.identity(n))
    if w is not None:
        faces = [face for face in faces if face_permutation(face) == w]
    logger.debug(f"Reduced faces for n={n}, w={w}: {len(faces)}")
    return faces


def row_run(face: FaceDiagram, i: int) -> List[int]:
    return sorted((j for (r, j) in face.edges if r == i), reverse=True)


def is_right_adjusted(face: FaceDiagram) -> bool:
    """Every row's edges form a run ending at the rightmost place j = n-i."""
    for i in range(1, face.n):
        run = row_run(face, i)
        if run != list(range(face.n - i, face.n - i - len(run), -1)):
            return False
    return True


def right_adjusted_of(w: Permutation) -> FaceDiagram:
    """The right-adjusted reduced face with permutation w.

    Its word is the canonical reduced word of w0 o w; block B_i of length k_i
    sits in row i at places n-i down to n-i-k_i+1.
    """
    n = w.n
    lengths = canonical_block_lengths(Permutation.longest(n).compose(w))
    edges = [
        (i, n - i - t)
        for i, k in enumerate(lengths, start=1)
        for t in range(k)
    ]
    return FaceDiagram(n, frozenset(edges))


def empty_places_permutation(face: FaceDiagram) -> Permutation:
    """Product of s_{n-i-j+1} over empty places, rows n-1 down to 1, each row left to right."""
    if not is_right_adjusted(face):
        raise PreconditionError(f"Face {face.sorted_edges()} is not right-adjusted")
    n = face.n
    word = tuple(
        n - i - j + 1
        for i in range(n - 1, 0, -1)
        for j in range(1, n - i + 1)
        if (i, j) not in face.edges
    )
    return word_product(word, n)


def render_ascii(face: FaceDiagram) -> str:
    labels = [["*"] * (face.n - i) for i in range(face.n)]
    return render_triangle(labels, ((i, j, "R") for i, j in face.edges))
