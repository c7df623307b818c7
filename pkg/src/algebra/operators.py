"""
Divided differences, Demazure-Lascoux operators and Lascoux polynomials.

Word convention: apply_word(p, (a_1, ..., a_k)) = pi_{a_1}(...(pi_{a_k}(p))),
i.e. the leftmost letter acts last. With w = s_{a_1}...s_{a_k} reduced this is
pi_w, and lascoux_w_lambda(w, lam) = pi_w(x^lam).
"""

import logging
from functools import lru_cache
from math import comb
from typing import Dict, Sequence, Tuple

from src.algebra.polynomial import BetaPolynomial, Monomial
from src.perm.permutation import Permutation
from src.utils.error_handler import (
    DimensionError,
    ExactDivisionError,
    InvalidPartitionError,
    check_index,
    check_partition,
)

logger = logging.getLogger(__name__)


def _divide_pair_polynomial(numerator: Dict[Tuple[int, int], int]) -> Dict[Tuple[int, int], int]:
    """Exact quotient of a polynomial in (x_i, x_{i+1}) by x_i - x_{i+1}.

    The numerator is rewritten in t = x_i - x_{i+1} and u = x_{i+1}, every
    term is divided by t, and the result is rewritten back.
    """
    in_tu: Dict[Tuple[int, int], int] = {}
    for (p, q), coeff in numerator.items():
        for k in range(p + 1):
            key = (k, p - k + q)
            in_tu[key] = in_tu.get(key, 0) + coeff * comb(p, k)

    remainder = {key: c for key, c in in_tu.items() if key[0] == 0 and c}
    if remainder:
        raise ExactDivisionError(
            f"Numerator not divisible by x_i - x_(i+1); remainder terms {sorted(remainder)}"
        )

    quotient: Dict[Tuple[int, int], int] = {}
    for (k, m), coeff in in_tu.items():
        if k == 0 or not coeff:
            continue
        a = k - 1
        for l in range(a + 1):
            key = (l, a - l + m)
            sign = -1 if (a - l) % 2 else 1
            quotient[key] = quotient.get(key, 0) + sign * coeff * comb(a, l)
    return {key: c for key, c in quotient.items() if c}


def divided_difference(p: BetaPolynomial, i: int) -> BetaPolynomial:
    """(p - s_i p) / (x_i - x_{i+1}); beta is a passive coefficient."""
    check_index(i, p.n)
    # group by everything except the exponents of x_i and x_{i+1}
    groups: Dict[Tuple[int, Tuple[int, ...]], Dict[Tuple[int, int], int]] = {}
    for mono, coeff in p:
        exps = mono.exps
        rest = exps[:i - 1] + (0, 0) + exps[i + 1:]
        group = groups.setdefault((mono.beta_deg, rest), {})
        pair = (exps[i - 1], exps[i])
        group[pair] = group.get(pair, 0) + coeff
        swapped = (exps[i], exps[i - 1])
        group[swapped] = group.get(swapped, 0) - coeff

    result: Dict[Monomial, int] = {}
    for (beta_deg, rest), numerator in groups.items():
        numerator = {pair: c for pair, c in numerator.items() if c}
        if not numerator:
            continue
        for (a, b), coeff in _divide_pair_polynomial(numerator).items():
            exps = list(rest)
            exps[i - 1], exps[i] = a, b
            key = Monomial(beta_deg, tuple(exps))
            result[key] = result.get(key, 0) + coeff
    return BetaPolynomial(p.n, result)


@lru_cache(maxsize=65536)
def _demazure_on_exps(i: int, exps: Tuple[int, ...]) -> Tuple[Tuple[Monomial, int], ...]:
    n = len(exps)
    x_i = BetaPolynomial.variable(n, i)
    x_j = BetaPolynomial.variable(n, i + 1)
    f = BetaPolynomial.monomial(n, exps)
    image = divided_difference(x_i * f + BetaPolynomial.beta(n) * x_i * x_j * f, i)
    return tuple(image.terms())


def demazure_lascoux(p: BetaPolynomial, i: int) -> BetaPolynomial:
    """pi_i(p) = d_i(x_i p + beta x_i x_{i+1} p)."""
    check_index(i, p.n)
    result: Dict[Monomial, int] = {}
    for mono, coeff in p:
        for image, image_coeff in _demazure_on_exps(i, mono.exps):
            key = Monomial(image.beta_deg + mono.beta_deg, image.exps)
            result[key] = result.get(key, 0) + coeff * image_coeff
    return BetaPolynomial(p.n, result)


def apply_word(p: BetaPolynomial, word: Sequence[int]) -> BetaPolynomial:
    """Apply pi along a word, rightmost letter first. Non-reduced words are allowed."""
    for letter in word:
        check_index(letter, p.n)
    for letter in reversed(tuple(word)):
        p = demazure_lascoux(p, letter)
    return p


@lru_cache(maxsize=4096)
def _lascoux_cached(alpha: Tuple[int, ...], pick_last: bool) -> BetaPolynomial:
    n = len(alpha)
    ascents = [k for k in range(1, n) if alpha[k - 1] < alpha[k]]
    if not ascents:
        return BetaPolynomial.monomial(n, alpha)
    i = ascents[-1] if pick_last else ascents[0]
    swapped = list(alpha)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return demazure_lascoux(_lascoux_cached(tuple(swapped), pick_last), i)


def lascoux_of_composition(alpha: Sequence[int], n: int = None,
                           pick_last: bool = False) -> BetaPolynomial:
    """L_alpha by the descent recursion.

    Args:
        alpha: Weak composition with n entries
        n: Optional expected length
        pick_last: Use the last ascent instead of the first; the result is
            the same, the flag exists so the two can be compared

    Returns:
        The Lascoux polynomial of alpha
    """
    alpha = tuple(int(a) for a in alpha)
    if n is not None and len(alpha) != n:
        raise DimensionError(f"Composition {alpha} does not have {n} entries")
    if any(a < 0 for a in alpha):
        raise InvalidPartitionError(f"Negative entry in composition {alpha}")
    return _lascoux_cached(alpha, pick_last)


def lascoux_w_lambda(w: Permutation, lam: Sequence[int]) -> BetaPolynomial:
    """pi_w(x^lam) along a reduced word of w."""
    lam = check_partition(lam)
    if w.n != len(lam):
        raise DimensionError(f"Permutation of degree {w.n} does not match {len(lam)} parts")
    return apply_word(BetaPolynomial.monomial(len(lam), lam), w.reduced_word())


def grothendieck(lam: Sequence[int]) -> BetaPolynomial:
    """Grassmannian Grothendieck polynomial, L_{w0, lam}."""
    return lascoux_w_lambda(Permutation.longest(len(lam)), lam)


def key_from_operators(w: Permutation, lam: Sequence[int]) -> BetaPolynomial:
    return lascoux_w_lambda(w, lam).specialize_beta(0)


def schur(lam: Sequence[int]) -> BetaPolynomial:
    return grothendieck(lam).specialize_beta(0)


def coxeter_block_word(k: int) -> Tuple[int, ...]:
    """Word of c_k = s_k s_{k-1} ... s_1."""
    return tuple(range(k, 0, -1))
