"""
Tests for divided differences, Demazure-Lascoux operators and Lascoux polynomials.
"""

import numpy as np
import pytest
import sympy

from src.algebra.operators import (
    apply_word,
    coxeter_block_word,
    demazure_lascoux,
    divided_difference,
    grothendieck,
    key_from_operators,
    lascoux_of_composition,
    lascoux_w_lambda,
    schur,
)
from src.algebra.polynomial import BetaPolynomial, Monomial
from src.gz.patterns import shift_partition
from src.perm.permutation import Permutation, all_permutations, reduced_words
from src.utils.error_handler import IndexRangeError, InvalidPartitionError
from src.verification.suites import random_polynomial

B, X1, X2, X3 = sympy.symbols("b x1 x2 x3")
XS = (X1, X2, X3)


def to_sympy(p: BetaPolynomial):
    expr = 0
    for mono, coeff in p:
        term = coeff * B ** mono.beta_deg
        for x, e in zip(XS, mono.exps):
            term *= x ** e
        expr += term
    return sympy.expand(expr)


def poly(n, *terms):
    """Build a polynomial from (coeff, beta_deg, exps) triples."""
    return BetaPolynomial(n, {Monomial(b, tuple(e)): c for c, b, e in terms})


@pytest.mark.unit
class TestDividedDifference:
    """Test the divided difference against sympy's exact division."""

    def setup_method(self):
        """Seeded generator for random polynomials in three variables."""
        self.rng = np.random.default_rng(7)

    @pytest.mark.parametrize("i", [1, 2])
    def test_matches_sympy_quotient(self, i):
        """Test (f - s_i f) / (x_i - x_{i+1}) on random polynomials."""
        xi, xj = XS[i - 1], XS[i]
        for _ in range(10):
            p = random_polynomial(self.rng, 3)
            f = to_sympy(p)
            swapped = f.subs({xi: xj, xj: xi}, simultaneous=True)
            expected = sympy.cancel((f - swapped) / (xi - xj))
            assert sympy.expand(to_sympy(divided_difference(p, i)) - expected) == 0

    def test_symmetric_input_is_killed(self):
        """Test that d_1 vanishes on polynomials symmetric in x1, x2."""
        p = poly(2, (1, 0, (2, 1)), (1, 0, (1, 2)), (3, 1, (0, 0)))
        assert divided_difference(p, 1).is_zero()

    def test_index_out_of_range(self):
        """Test that generator indices outside 1..n-1 are rejected."""
        with pytest.raises(IndexRangeError):
            divided_difference(BetaPolynomial.variable(2, 1), 2)


@pytest.mark.unit
class TestDemazureLascoux:
    """Test pi_i and words of operators."""

    def test_pi1_of_x1(self):
        """Test pi_1(x1) = x1 + x2 + beta x1 x2."""
        result = demazure_lascoux(BetaPolynomial.variable(2, 1), 1)
        assert result == poly(2, (1, 0, (1, 0)), (1, 0, (0, 1)), (1, 1, (1, 1)))

    def test_pi1_of_x2(self):
        """Test pi_1(x2) = -beta x1 x2."""
        assert demazure_lascoux(BetaPolynomial.variable(2, 2), 1) == poly(2, (-1, 1, (1, 1)))

    def test_symmetric_polynomials_are_fixed(self):
        """Test that pi_1 fixes polynomials symmetric in x1, x2."""
        p = poly(3, (1, 0, (1, 1, 0)), (2, 1, (0, 0, 3)))
        assert demazure_lascoux(p, 1) == p

    def test_idempotent_and_braid(self):
        """Test pi_i^2 = pi_i and the braid relation on a fixed polynomial."""
        p = poly(3, (1, 0, (2, 0, 1)), (-2, 1, (0, 1, 0)))
        once = demazure_lascoux(p, 2)
        assert demazure_lascoux(once, 2) == once
        assert apply_word(p, (1, 2, 1)) == apply_word(p, (2, 1, 2))

    def test_apply_word_acts_right_to_left(self):
        """Test that the rightmost letter is applied first."""
        p = BetaPolynomial.monomial(3, (2, 0, 0))
        assert apply_word(p, (2, 1)) == demazure_lascoux(demazure_lascoux(p, 1), 2)

    def test_coxeter_block_word(self):
        """Test c_k = s_k ... s_1."""
        assert coxeter_block_word(3) == (3, 2, 1)
        assert coxeter_block_word(1) == (1,)


@pytest.mark.unit
class TestLascouxPolynomials:
    """Test Lascoux, key, Grothendieck and Schur values."""

    def setup_method(self):
        """Use lambda = (3, 2, 0)."""
        self.lam = (3, 2, 0)

    def test_identity_gives_monomial(self):
        """Test L_{id, lambda} = x^lambda."""
        assert lascoux_w_lambda(Permutation.identity(3), self.lam) == BetaPolynomial.monomial(3, self.lam)

    def test_s1_value(self):
        """Test L_{s1, (3,2,0)} = x1^3 x2^2 + x1^2 x2^3 + beta x1^3 x2^3."""
        expected = poly(3, (1, 0, (3, 2, 0)), (1, 0, (2, 3, 0)), (1, 1, (3, 3, 0)))
        assert lascoux_w_lambda(Permutation.simple(3, 1), self.lam) == expected

    def test_s2_value(self):
        """Test L_{s2, (3,2,0)} = x1^3 pi_2(x2^2)."""
        expected = poly(
            3,
            (1, 0, (3, 2, 0)), (1, 0, (3, 1, 1)), (1, 0, (3, 0, 2)),
            (1, 1, (3, 2, 1)), (1, 1, (3, 1, 2)),
        )
        assert lascoux_w_lambda(Permutation.simple(3, 2), self.lam) == expected

    def test_longest_element_full_expansion(self):
        """Test every term of L_{w0, (2,1,0)}, including 2 beta^2 x1^2 x2 x3^2."""
        expected = poly(
            3,
            (1, 0, (2, 1, 0)), (1, 0, (1, 2, 0)), (1, 0, (2, 0, 1)), (2, 0, (1, 1, 1)),
            (1, 0, (0, 2, 1)), (1, 0, (1, 0, 2)), (1, 0, (0, 1, 2)),
            (1, 1, (2, 2, 0)), (1, 1, (2, 0, 2)), (1, 1, (0, 2, 2)),
            (3, 1, (2, 1, 1)), (3, 1, (1, 2, 1)), (3, 1, (1, 1, 2)),
            (2, 2, (2, 2, 1)), (2, 2, (2, 1, 2)), (2, 2, (1, 2, 2)),
            (1, 3, (2, 2, 2)),
        )
        value = lascoux_w_lambda(Permutation.longest(3), (2, 1, 0))
        assert value == expected
        assert value.coefficient(Monomial(2, (2, 1, 2))) == 2
        assert value == grothendieck((2, 1, 0))

    def test_grothendieck_of_single_box(self):
        """Test G_{(1,0)} = x1 + x2 + beta x1 x2."""
        assert grothendieck((1, 0)) == poly(2, (1, 0, (1, 0)), (1, 0, (0, 1)), (1, 1, (1, 1)))

    @pytest.mark.parametrize("lam,count", [((2, 1, 0), 8), ((3, 2, 0), 15), ((1, 1, 0), 3)])
    def test_schur_term_counts(self, lam, count):
        """Test that the Schur polynomial has Weyl-dimension many monomials."""
        assert schur(lam).term_count() == count

    def test_schur_is_symmetric(self):
        """Test that s_{(2,1,0)} is fixed by every variable swap."""
        s = schur((2, 1, 0))
        assert s.swap(1) == s
        assert s.swap(2) == s

    def test_key_is_lascoux_at_beta_zero(self):
        """Test that the key polynomial drops every beta term."""
        w = Permutation.simple(3, 1)
        assert key_from_operators(w, self.lam) == lascoux_w_lambda(w, self.lam).specialize_beta(0)

    def test_composition_recursion_matches_perm_form(self):
        """Test L_alpha with alpha = w(lambda) against L_{w, lambda}."""
        assert lascoux_of_composition((2, 3, 0)) == lascoux_w_lambda(Permutation.simple(3, 1), self.lam)

    def test_first_and_last_ascent_agree(self):
        """Test that the ascent choice in the recursion does not matter."""
        for alpha in [(0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 2, 2)]:
            assert lascoux_of_composition(alpha) == lascoux_of_composition(alpha, pick_last=True)

    def test_reduced_word_independence(self):
        """Test that every reduced word of w0 gives the same polynomial."""
        w0 = Permutation.longest(3)
        x = BetaPolynomial.monomial(3, (2, 1, 0))
        values = {apply_word(x, word) for word in reduced_words(w0)}
        assert len(values) == 1

    def test_shift_identity(self):
        """Test L_{w, lambda + 1} = x1 x2 x3 L_{w, lambda}."""
        x_all = BetaPolynomial.monomial(3, (1, 1, 1))
        for w in all_permutations(3):
            shifted = lascoux_w_lambda(w, shift_partition((2, 1, 0), 1))
            assert shifted == x_all * lascoux_w_lambda(w, (2, 1, 0))

    def test_non_partition_rejected(self):
        """Test that an increasing lambda is rejected."""
        with pytest.raises(InvalidPartitionError):
            lascoux_w_lambda(Permutation.identity(3), (0, 1, 2))
