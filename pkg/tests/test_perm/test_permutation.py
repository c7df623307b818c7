"""
Tests for permutations, reduced words and the Bruhat order.
"""

import itertools

import pytest

from src.perm.permutation import (
    Permutation,
    all_permutations,
    apply_to_composition,
    bruhat_leq,
    bruhat_leq_subword,
    canonical_block_lengths,
    canonical_reduced_word,
    is_reduced,
    minimal_permutation_for,
    parse_permutation,
    parse_word,
    reduced_words,
    w0_word_coxeter,
    w0_word_reading,
    word_product,
)
from src.utils.error_handler import DimensionError, IndexRangeError, UsageError


@pytest.mark.unit
class TestPermutation:
    """Test the one-line permutation type."""

    def setup_method(self):
        """Fix the generators of S_3."""
        self.s1 = Permutation.simple(3, 1)
        self.s2 = Permutation.simple(3, 2)

    def test_constructors(self):
        """Test identity, longest element and simple transpositions."""
        assert Permutation.identity(3).one_line == (1, 2, 3)
        assert Permutation.longest(3).one_line == (3, 2, 1)
        assert self.s1.one_line == (2, 1, 3)

    def test_composition_is_right_to_left(self):
        """Test (s1 o s2)(k) = s1(s2(k))."""
        assert self.s1.compose(self.s2).one_line == (2, 3, 1)
        assert word_product((1, 2), 3) == self.s1 * self.s2

    def test_length_and_inverse(self):
        """Test inversion counts and inverses."""
        w = Permutation((2, 3, 1))
        assert w.length() == 2
        assert w.compose(w.inverse()).is_identity()
        assert Permutation.longest(4).length() == 6

    def test_invalid_one_line_raises(self):
        """Test that a non-permutation is rejected."""
        with pytest.raises(DimensionError):
            Permutation((1, 1, 2))

    def test_word_letter_out_of_range(self):
        """Test that letters outside 1..n-1 are rejected."""
        with pytest.raises(IndexRangeError):
            word_product((3,), 3)


@pytest.mark.unit
class TestReducedWords:
    """Test canonical and complete sets of reduced words."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_canonical_word_is_reduced_and_correct(self, n):
        """Test that the canonical word multiplies back to w and has length l(w)."""
        for w in all_permutations(n):
            word = canonical_reduced_word(w)
            assert word_product(word, n) == w
            assert len(word) == w.length()
            assert sum(canonical_block_lengths(w)) == w.length()

    def test_reduced_words_of_w0(self):
        """Test that w0 in S_3 has exactly the words 121 and 212."""
        assert set(reduced_words(Permutation.longest(3))) == {(1, 2, 1), (2, 1, 2)}

    def test_is_reduced(self):
        """Test reducedness of a word with a repeated letter."""
        assert is_reduced((1, 2, 1), 3)
        assert not is_reduced((1, 1), 3)

    def test_w0_words(self):
        """Test both ambient words of the longest element."""
        assert w0_word_reading(3) == (2, 1, 2)
        assert w0_word_coxeter(3) == (1, 2, 1)
        for n in (2, 3, 4):
            assert word_product(w0_word_reading(n), n) == Permutation.longest(n)
            assert word_product(w0_word_coxeter(n), n) == Permutation.longest(n)


@pytest.mark.unit
class TestBruhatOrder:
    """Test the rank-matrix and subword criteria of the Bruhat order."""

    def test_identity_and_longest_are_extremes(self):
        """Test that id <= w <= w0 for every w in S_3."""
        e, w0 = Permutation.identity(3), Permutation.longest(3)
        for w in all_permutations(3):
            assert bruhat_leq(e, w)
            assert bruhat_leq(w, w0)

    def test_generators_are_incomparable(self):
        """Test that s1 and s2 are incomparable."""
        s1, s2 = Permutation.simple(3, 1), Permutation.simple(3, 2)
        assert not bruhat_leq(s1, s2)
        assert not bruhat_leq(s2, s1)

    @pytest.mark.parametrize("n", [3, 4])
    def test_criteria_agree(self, n):
        """Test the rank-matrix criterion against the subword criterion."""
        for u, w in itertools.product(all_permutations(n), repeat=2):
            assert bruhat_leq(u, w) == bruhat_leq_subword(u, w)


@pytest.mark.unit
class TestParsingAndCompositions:
    """Test text forms and the action on compositions."""

    def test_parse_one_line(self):
        """Test plain and comma-separated one-line forms."""
        assert parse_permutation("312").one_line == (3, 1, 2)
        assert parse_permutation("3,1,2", 3).one_line == (3, 1, 2)

    def test_parse_word_forms(self):
        """Test generator words and digit lists."""
        assert parse_word("s1 s2 s1") == (1, 2, 1)
        assert parse_word("s1s2s1") == (1, 2, 1)
        assert parse_word("1,2,1") == (1, 2, 1)
        assert parse_permutation("s1 s2", 3) == Permutation((2, 3, 1))

    def test_word_needs_degree(self):
        """Test that a word without n is a usage error."""
        with pytest.raises(UsageError):
            parse_permutation("s1 s2")

    def test_degree_mismatch(self):
        """Test that a one-line form of the wrong degree is a usage error."""
        with pytest.raises(UsageError):
            parse_permutation("21", 3)

    def test_apply_to_composition(self):
        """Test alpha_{w(i)} = lambda_i."""
        assert apply_to_composition(Permutation.simple(3, 1), (3, 2, 0)) == (2, 3, 0)

    def test_minimal_permutation(self):
        """Test recovering (w, lambda) from a composition."""
        w, lam = minimal_permutation_for((2, 3, 0))
        assert lam == (3, 2, 0)
        assert w == Permutation.simple(3, 1)
