from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_words
from penney.correlation import (bad_prefix_sets, bad_prefixes, correlation_poly,
                                forward_propagation_holds, overlap_set, period_set)
from penney.words import Word, WordError, bitflip

bits = st.text(alphabet="01", min_size=1, max_size=16)
V, WW = Word("1101110"), Word("0110")


def words(*xs):
    return {Word(x) for x in xs}


class TestOverlapSet:
    def test_worked_example(self):
        assert overlap_set(V, V).lengths == (3, 7)
        assert overlap_set(WW, WW).lengths == (1, 4)
        assert overlap_set(WW, V).lengths == (3,)
        assert overlap_set(V, WW).lengths == (1,)
        assert overlap_set(V, V).words() == [Word("110"), V]
        assert overlap_set(WW, V).words() == [Word("110")]

    @given(bits, bits)
    def test_definition(self, x, y):
        got = overlap_set(Word(x), Word(y)).lengths
        want = tuple(r for r in range(1, min(len(x), len(y)) + 1) if x[-r:] == y[:r])
        assert got == want

    @given(bits)
    def test_full_self_overlap(self, x):
        assert len(x) in overlap_set(Word(x), Word(x))

    @given(bits, bits)
    def test_flip_and_reversal(self, x, y):
        a, b = Word(x), Word(y)
        lengths = overlap_set(a, b).lengths
        assert overlap_set(bitflip(a), bitflip(b)).lengths == lengths
        assert overlap_set(b.reverse(), a.reverse()).lengths == lengths

    def test_empty_rejected(self):
        with pytest.raises(WordError):
            overlap_set(Word(""), V)


class TestCorrelationPoly:
    def test_worked_example(self):
        assert correlation_poly(V, V).terms == {(5, 2): 1, (2, 1): 1}
        assert correlation_poly(WW, WW).terms == {(2, 2): 1, (0, 1): 1}
        assert correlation_poly(V, WW).terms == {(0, 1): 1}
        assert correlation_poly(WW, V).terms == {(2, 1): 1}

    def test_empty_table_is_zero(self):
        assert correlation_poly(Word("01"), Word("01111")).terms == {(1, 1): 1}
        zero = correlation_poly(Word("11"), Word("00"))
        assert zero.terms == {} and zero.at(Fraction(1, 3)) == 0

    def test_shared_profile_counts(self):
        # 0101 overlaps 0101 at lengths 2 and 4: words 01 and 0101
        assert correlation_poly(Word("0101"), Word("0101")).terms == {(1, 1): 1, (2, 2): 1}
        # 0110 against 1001 overlaps only at r = 2 (word 10)
        assert correlation_poly(Word("0110"), Word("1001")).terms == {(1, 1): 1}

    @given(bits, bits)
    def test_half_value(self, x, y):
        c = correlation_poly(Word(x), Word(y))
        assert c.at_half() == sum(2 ** r for r in overlap_set(Word(x), Word(y)).lengths)
        assert c.at(Fraction(1, 2)) == c.at_half()

    def test_at_rational(self):
        c = correlation_poly(V, V)
        q = Fraction(1, 3)
        assert c.at(q) == 1 / (q ** 5 * (1 - q) ** 2) + 1 / (q ** 2 * (1 - q))


class TestBadPrefixes:
    def test_worked_example(self):
        sets = bad_prefix_sets(V, WW)
        assert sets.dvv == words("1101")
        assert sets.dvw == words("110111")
        assert sets.dww == words("011")
        assert sets.dwv == words("0")
        assert sets.f == words("0", "011", "1101", "110111")

    def test_equal_length_mode(self):
        with pytest.raises(WordError):
            bad_prefix_sets(V, WW, equal_length=True)
        sets = bad_prefix_sets(Word("000100"), Word("001110"), equal_length=True)
        assert sets.f == words("0001", "00010", "00111")

    def test_full_overlap_excluded(self):
        assert bad_prefixes(V, V) == words("1101")
        assert Word("") not in bad_prefixes(V, V)


class TestForwardPropagation:
    def test_examples(self):
        assert period_set(Word("1100")) == {0}
        assert period_set(Word("10101")) == {0, 2, 4}
        assert forward_propagation_holds(Word("1100"))
        assert forward_propagation_holds(Word("10101"))

    def test_exhaustive_to_12(self):
        for n in range(1, 13):
            assert all(forward_propagation_holds(Word(x)) for x in all_words(n)), n
