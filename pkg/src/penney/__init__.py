"""Exact win probabilities and structural properties for binary word races."""

from penney.automaton import absorption_win, build, build_single, expected_absorption_time
from penney.correlation import bad_prefix_sets, correlation_poly, overlap_set
from penney.properties import has_property_r, property_e_witness, verify_phi_bijection
from penney.ratfunc import IntPoly, RatFunc, evaluate, limit_at_zero, reflect
from penney.winprob import classify_symmetry, expected_hitting_time, win_probability
from penney.words import Word, WordError, make_word

__all__ = [
    "IntPoly", "RatFunc", "Word", "WordError", "absorption_win", "bad_prefix_sets",
    "build", "build_single", "classify_symmetry", "correlation_poly", "evaluate",
    "expected_absorption_time", "expected_hitting_time", "has_property_r",
    "limit_at_zero", "make_word", "overlap_set", "property_e_witness", "reflect",
    "verify_phi_bijection", "win_probability",
]
