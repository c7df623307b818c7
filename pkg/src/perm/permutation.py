"""
Symmetric group S_n in one-line notation.

Composition convention: (u o v)(k) = u(v(k)). A word (a_1, ..., a_k) stands for
the product s_{a_1} o ... o s_{a_k}; the leftmost factor is outermost.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np

from src.utils.error_handler import DimensionError, IndexRangeError, UsageError, check_same_n

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    one_line: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.one_line)
        object.__setattr__(self, "one_line", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise DimensionError(f"{values} is not a permutation of 1..{len(values)}")

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, k: int) -> int:
        return self.one_line[k - 1]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, n: int, i: int) -> "Permutation":
        if not 1 <= i <= n - 1:
            raise IndexRangeError(f"s{i} does not exist in S_{n}")
        values = list(range(1, n + 1))
        values[i - 1], values[i] = values[i], values[i - 1]
        return cls(tuple(values))

    def compose(self, other: "Permutation") -> "Permutation":
        """self o other."""
        check_same_n(self.n, other.n, "permutation")
        return Permutation(tuple(self(other(k)) for k in range(1, self.n + 1)))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        values = [0] * self.n
        for k, v in enumerate(self.one_line, start=1):
            values[v - 1] = k
        return Permutation(tuple(values))

    def length(self) -> int:
        return sum(
            1
            for a, b in itertools.combinations(range(self.n), 2)
            if self.one_line[a] > self.one_line[b]
        )

    def right_descents(self) -> List[int]:
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def reduced_word(self) -> Word:
        return canonical_reduced_word(self)

    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, self.n + 1))

    def render(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)

    def __str__(self) -> str:
        return self.render()


def compose(u: Permutation, v: Permutation) -> Permutation:
    return u.compose(v)


def length(w: Permutation) -> int:
    """Number of inversions."""
    return w.length()


def word_product(word: Sequence[int], n: int) -> Permutation:
    """s_{a_1} o s_{a_2} o ... o s_{a_k}."""
    values = list(range(1, n + 1))
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise IndexRangeError(f"Letter {letter} out of range 1..{n - 1}")
        # right multiplication by s_a swaps positions a and a+1
        values[letter - 1], values[letter] = values[letter], values[letter - 1]
    return Permutation(tuple(values))


def is_reduced(word: Sequence[int], n: int) -> bool:
    return word_product(word, n).length() == len(word)


def canonical_block_lengths(w: Permutation) -> List[int]:
    """(k_1, ..., k_{n-1}): B_i = (i, i+1, ..., i+k_i-1) in the canonical word.

    k_i is the distance the value i still has to travel once B_1..B_{i-1}
    are peeled from the right.
    """
    n = w.n
    lengths: List[int] = []
    current = w
    for i in range(1, n):
        k = current.inverse()(i) - i
        lengths.append(k)
        if k:
            block = tuple(range(i, i + k))
            current = current.compose(word_product(block, n).inverse())
    return lengths


def canonical_reduced_word(w: Permutation) -> Word:
    """The reduced word B_{n-1} ... B_2 B_1; block starts strictly decrease."""
    lengths = canonical_block_lengths(w)
    return tuple(
        letter
        for i in range(len(lengths), 0, -1)
        for letter in range(i, i + lengths[i - 1])
    )


@lru_cache(maxsize=None)
def _reduced_words(one_line: Tuple[int, ...]) -> Tuple[Word, ...]:
    w = Permutation(one_line)
    if w.is_identity():
        return ((),)
    words = []
    for i in w.right_descents():
        shorter = w.compose(Permutation.simple(w.n, i))
        words.extend(prefix + (i,) for prefix in _reduced_words(shorter.one_line))
    return tuple(sorted(set(words)))


def reduced_words(w: Permutation) -> List[Word]:
    """All reduced words of w, sorted."""
    return list(_reduced_words(w.one_line))


def _rank_matrix(w: Permutation) -> np.ndarray:
    """r[i, j] = #{a <= i+1 : w(a) >= j+1}."""
    matrix = np.zeros((w.n, w.n), dtype=np.int64)
    for a in range(1, w.n + 1):
        matrix[a - 1, w(a) - 1] = 1
    tails = np.cumsum(matrix[:, ::-1], axis=1)[:, ::-1]
    return np.cumsum(tails, axis=0)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """u <= w in Bruhat order, by rank-matrix dominance."""
    check_same_n(u.n, w.n, "permutation")
    return bool(np.all(_rank_matrix(u) <= _rank_matrix(w)))


def bruhat_leq_subword(u: Permutation, w: Permutation) -> bool:
    """u <= w iff some subword of a reduced word of w is a reduced word of u."""
    check_same_n(u.n, w.n, "permutation")
    word = canonical_reduced_word(w)
    target = u.length()
    for positions in itertools.combinations(range(len(word)), target):
        sub = tuple(word[p] for p in positions)
        if word_product(sub, w.n) == u:
            return True
    return False


def w0_word_reading(n: int) -> Word:
    """(n-1; n-2, n-1; ...; 1, 2, ..., n-1): every edge place of the full face diagram."""
    return tuple(letter for i in range(n - 1, 0, -1) for letter in range(i, n))


def w0_word_coxeter(n: int) -> Word:
    """c_1 c_2 ... c_{n-1} with c_k = s_k ... s_1, i.e. (1, 2,1, 3,2,1, ...)."""
    return tuple(letter for k in range(1, n) for letter in range(k, 0, -1))


def apply_to_composition(w: Permutation, lam: Sequence[int]) -> Tuple[int, ...]:
    """alpha with alpha_{w(i)} = lam_i."""
    if len(lam) != w.n:
        raise DimensionError(f"Permutation of degree {w.n} applied to {len(lam)} parts")
    alpha = [0] * w.n
    for i, part in enumerate(lam, start=1):
        alpha[w(i) - 1] = int(part)
    return tuple(alpha)


def all_permutations(n: int) -> List[Permutation]:
    """S_n in lexicographic one-line order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def minimal_permutation_for(alpha: Sequence[int]) -> Tuple[Permutation, Tuple[int, ...]]:
    """Shortest w with alpha = w(lam), lam the decreasing rearrangement of alpha."""
    lam = tuple(sorted(alpha, reverse=True))
    candidates = [w for w in all_permutations(len(alpha)) if apply_to_composition(w, lam) == tuple(alpha)]
    return min(candidates, key=lambda w: (w.length(), w.one_line)), lam


def parse_word(text: str) -> Word:
    """Accept "s1 s2 s1", "s1s2s1" or "1,2,1"."""
    text = text.strip()
    if not text:
        return ()
    if "s" in text:
        tokens = re.findall(r"s(\d+)", text)
    else:
        tokens = [t for t in re.split(r"[,\s]+", text) if t]
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise UsageError(f"Cannot parse word: {text!r}")


def parse_permutation(text: str, n: int = None) -> Permutation:
    """One-line form ("321" or "3,2,1") or a word in generators ("s2 s1").

    n is required for the word form; it is checked against the one-line form.
    """
    text = text.strip()
    if "s" in text or text in ("", "id", "e"):
        if n is None:
            raise UsageError("A word needs --n to fix the degree")
        word = parse_word(text) if text not in ("id", "e") else ()
        return word_product(word, n)
    if "," in text or " " in text:
        tokens = [t for t in re.split(r"[,\s]+", text) if t]
    else:
        tokens = list(text)
    try:
        w = Permutation(tuple(int(t) for t in tokens))
    except (ValueError, DimensionError) as e:
        raise UsageError(f"Cannot parse permutation {text!r}: {e}")
    if n is not None and w.n != n:
        raise UsageError(f"Permutation {text!r} has degree {w.n}, expected {n}")
    return w


def permutations_by_length(n: int) -> Dict[int, List[Permutation]]:
    grouped: Dict[int, List[Permutation]] = {}
    for w in all_permutations(n):
        grouped.setdefault(w.length(), []).append(w)
    return grouped


def iter_bruhat_pairs(n: int) -> Iterator[Tuple[Permutation, Permutation]]:
    """All pairs u <= w in S_n."""
    perms = all_permutations(n)
    for u in perms:
        for w in perms:
            if bruhat_leq(u, w):
                yield u, w
