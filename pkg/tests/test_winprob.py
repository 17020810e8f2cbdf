import random
from fractions import Fraction

import pytest

from conftest import valid_pairs
from penney.automaton import absorption_win, build
from penney.properties import has_property_r
from penney.ratfunc import IntPoly, P, RatFunc, evaluate, limit_at_zero, normalize, reflect
from penney.winprob import (classify_symmetry, classify_symmetry_fast, conway_polynomials,
                            expected_hitting_time, win_probability, zero_limit,
                            zero_limit_combinatorial)
from penney.words import SubwordError, Word, WordError, bitflip

Q = 1 - P


def win(v, w):
    return win_probability(Word(v), Word(w))


class TestWinProbability:
    def test_worked_example(self):
        want = normalize(P ** 4 * IntPoly([1, 1, -1]), IntPoly([1, 0, 0, 1]))
        assert win("1101110", "0110") == want
        assert evaluate(want, Fraction(1, 2)) == Fraction(5, 72)

    def test_named_formulas(self):
        assert win("100010", "001100") == normalize(1 - P * Q ** 4, IntPoly([2]))
        assert win("1100", "1010") == normalize(P * Q + 1, P * Q + 2)
        assert win("1000", "0110") == RatFunc.poly([1, -1])

    def test_property_r_formula(self):
        for v, w in valid_pairs(7, min_len=2):
            if len(v) != len(w) or not has_property_r(Word(v), Word(w)):
                continue
            s = v.count("1") - w.count("1")
            ps, qs = (P ** s, Q ** s) if s >= 0 else (Q ** -s, P ** -s)
            assert win(v, w) == normalize(ps, ps + qs), (v, w)

    def test_preconditions(self):
        with pytest.raises(WordError, match="identical"):
            win("11", "11")
        with pytest.raises(SubwordError) as err:
            win("0110", "11")
        assert err.value.position == 2

    def test_unreduced_polynomials(self):
        num, den = conway_polynomials(Word("1100"), Word("1010"))
        assert normalize(num, den) == win("1100", "1010")

    def test_complement_and_flip_exhaustive(self):
        for v, w in valid_pairs(6):
            f = win(v, w)
            assert f + win(w, v) == 1
            fv, fw = bitflip(Word(v)), bitflip(Word(w))
            assert f == reflect(win_probability(fv, fw))

    def test_complement_random_long(self):
        rng = random.Random(5)
        done = 0
        while done < 200:
            v = "".join(rng.choice("01") for _ in range(rng.randint(8, 14)))
            w = "".join(rng.choice("01") for _ in range(rng.randint(8, 14)))
            if v == w or v in w or w in v:
                continue
            assert win(v, w) + win(w, v) == 1
            done += 1

    def test_matches_automaton_small(self):
        for v, w in valid_pairs(5):
            g = build(Word(v), Word(w))
            for q in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
                assert absorption_win(g, q) == evaluate(win(v, w), q)


class TestExpectedTime:
    def test_examples(self):
        t = expected_hitting_time(Word("11"))
        assert t == normalize(P + 1, P ** 2)
        assert evaluate(t, Fraction(1, 2)) == 6
        assert evaluate(expected_hitting_time(Word("0")), Fraction(1, 2)) == 2
        assert expected_hitting_time(Word("0")) == normalize(IntPoly([1]), Q)
        want = RatFunc.poly([1]) / (RatFunc.poly([0, 1]) ** 5 * RatFunc.poly([1, -1]) ** 2) \
            + RatFunc.poly([1]) / (RatFunc.poly([0, 1]) ** 2 * RatFunc.poly([1, -1]))
        assert expected_hitting_time(Word("1101110")) == want
        assert evaluate(want, Fraction(1, 2)) == 136


class TestSymmetry:
    def test_examples(self):
        f = classify_symmetry(Word("1000"), Word("0110"))
        assert f.odd and not f.even and f.label() == "odd"
        f = classify_symmetry(Word("1100"), Word("1010"))
        assert f.even and not f.constant and f.label() == "even"
        f = classify_symmetry(Word("01100101"), Word("01010110"))
        assert f.constant and f.odd and f.even

    def test_bitflip_pairs_odd(self):
        rng = random.Random(8)
        for _ in range(60):
            v = Word("".join(rng.choice("01") for _ in range(rng.randint(1, 12))))
            assert classify_symmetry(v, bitflip(v)).odd

    def test_fast_path_agrees(self):
        for v, w in valid_pairs(5):
            a = classify_symmetry(Word(v), Word(w))
            assert classify_symmetry_fast(Word(v), Word(w)) == a, (v, w)

    def test_fast_path_long_pairs(self):
        rng = random.Random(9)
        for _ in range(40):
            n = rng.randint(9, 13)
            v = "".join(rng.choice("01") for _ in range(n))
            w = v[3:] + v[:3] if rng.random() < 0.5 else "".join(rng.choice("01") for _ in range(n))
            if v == w or v in w or w in v:
                continue
            assert classify_symmetry_fast(Word(v), Word(w)) == classify_symmetry(Word(v), Word(w))

    def test_flag_invariants(self):
        for v, w in valid_pairs(5):
            f = classify_symmetry_fast(Word(v), Word(w))
            if f.constant:
                assert f.odd and f.even
            else:
                assert not (f.odd and f.even)

    def test_r_with_equal_weights_is_constant(self):
        for v, w in valid_pairs(7, min_len=2):
            if len(v) == len(w) and v.count("1") == w.count("1") \
                    and has_property_r(Word(v), Word(w)):
                assert classify_symmetry_fast(Word(v), Word(w)).constant


class TestZeroLimit:
    def test_examples(self):
        assert zero_limit_combinatorial(Word("100010"), Word("001100")) == Fraction(1, 2)
        assert zero_limit_combinatorial(Word("1000"), Word("0110")) == 1
        assert zero_limit_combinatorial(Word("1101110"), Word("0110")) == 0

    def test_both_sides_agree(self):
        for v, w in valid_pairs(6):
            got = zero_limit_combinatorial(Word(v), Word(w))
            assert got in (0, Fraction(1, 2), 1)
            assert got == zero_limit(Word(v), Word(w)), (v, w)

    def test_numeric_sanity(self):
        q = Fraction(1, 10 ** 9)
        for v, w in list(valid_pairs(5))[::7]:
            f = win(v, w)
            assert abs(evaluate(f, q) - limit_at_zero(f)) < Fraction(1, 10 ** 6)
