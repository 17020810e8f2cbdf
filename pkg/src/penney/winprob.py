"""Win probabilities, expected waiting times and their symmetries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from penney.correlation import CorrelationPoly, correlation_poly, overlap_lengths
from penney.ratfunc import IntPoly, RatFunc, limit_at_zero, normalize, reflect
from penney.words import Word, check_race_pair


@lru_cache(maxsize=None)
def _term(a: int, b: int) -> IntPoly:
    """p^a (1-p)^b."""
    return (IntPoly([1, -1]) ** b).shift(a)


def _cleared(table: CorrelationPoly, a: int, b: int) -> IntPoly:
    """table * p^a (1-p)^b as a polynomial; needs a, b >= every exponent."""
    acc = IntPoly()
    for (i, j), c in table.terms.items():
        acc = acc + _term(a - i, b - j) * c
    return acc


def correlation_tables(v: Word, w: Word):
    """(vv, ww, vw, wv) correlation tables."""
    return (correlation_poly(v, v), correlation_poly(w, w),
            correlation_poly(v, w), correlation_poly(w, v))


def _common_exponents(tables) -> tuple[int, int]:
    a = b = 0
    for t in tables:
        i, j = t.max_exponents()
        a, b = max(a, i), max(b, j)
    return a, b


def conway_polynomials(v: Word, w: Word) -> tuple[IntPoly, IntPoly]:
    """Unreduced numerator ww - wv and denominator ww + vv - wv - vw,
    both multiplied by the common p^a (1-p)^b."""
    vv, ww, vw, wv = tables = correlation_tables(v, w)
    a, b = _common_exponents(tables)
    cvv, cww, cvw, cwv = (_cleared(t, a, b) for t in tables)
    return cww - cwv, cww + cvv - cwv - cvw


def win_probability(v: Word, w: Word) -> RatFunc:
    """P_p(v occurs before w) as a canonical rational function of p."""
    check_race_pair(v, w)
    return normalize(*conway_polynomials(v, w))


def expected_hitting_time(v: Word) -> RatFunc:
    """E_p of the first occurrence time of v, i.e. the self-correlation vv_p."""
    vv = correlation_poly(v, v)
    a, b = vv.max_exponents()
    return normalize(_cleared(vv, a, b), _term(a, b))


@dataclass(frozen=True)
class SymmetryFlags:
    odd: bool
    even: bool
    constant: bool

    def label(self) -> str:
        if self.constant:
            return "constant"
        if self.odd:
            return "odd"
        if self.even:
            return "even"
        return "none"


def classify_symmetry(v: Word, w: Word) -> SymmetryFlags:
    f = win_probability(v, w)
    r = reflect(f)
    return SymmetryFlags(odd=(f + r == 1),
                         even=(f == r),
                         constant=(f.num * 2 == f.den))


def _count_with_ones(x: str, y: str, r: int) -> int:
    return sum(1 for k in overlap_lengths(x, y) if y[:k].count("1") == r)


def zero_limit_combinatorial(v: Word, w: Word) -> Fraction:
    """lim p -> 0 of the win probability, read off from overlap words.

    Only overlap words carrying the maximal number r of ones survive the
    limit, so the answer is a ratio of their counts; it is 1/2 exactly when
    both words have r ones and no cross overlap word does.
    """
    check_race_pair(v, w)
    x, y = v.digits, w.digits
    r = max(v.ones, w.ones)
    if v.ones == w.ones and not (_count_with_ones(x, y, r) or _count_with_ones(y, x, r)):
        return Fraction(1, 2)
    a_vv, a_ww = _count_with_ones(x, x, r), _count_with_ones(y, y, r)
    a_vw, a_wv = _count_with_ones(x, y, r), _count_with_ones(y, x, r)
    den = a_ww + a_vv - a_wv - a_vw
    if den == 0:
        raise ArithmeticError(f"degenerate leading coefficients for ({v}, {w})")
    return Fraction(a_ww - a_wv, den)


def zero_limit(v: Word, w: Word) -> Fraction:
    """Analytic p -> 0 limit of :func:`win_probability`."""
    return limit_at_zero(win_probability(v, w))


# -- evaluation-based fast paths ---------------------------------------------

def _eval_terms(table: CorrelationPoly, a: int, b: int, x: int) -> int:
    return sum(c * x ** (a - i) * (1 - x) ** (b - j) for (i, j), c in table.terms.items())


def classify_symmetry_fast(v: Word, w: Word) -> SymmetryFlags:
    """Same flags as :func:`classify_symmetry` without polynomial gcds.

    With f = N/D unreduced, each symmetry is a polynomial identity such as
    N(p) D(1-p) + N(1-p) D(p) - D(p) D(1-p) = 0.  An integer polynomial
    whose coefficients are bounded by C vanishes identically iff it vanishes
    at an integer X >= C + 2, so one big-integer evaluation decides it.
    """
    check_race_pair(v, w)
    tables = correlation_tables(v, w)
    a, b = _common_exponents(tables)
    nterms = sum(sum(t.terms.values()) for t in tables)
    # every cleared sum has coefficient 1-norm <= nterms * 2^(a+b)
    bound = 3 * (nterms << (a + b)) ** 2
    x = 1 << (bound.bit_length() + 1)
    vv, ww, vw, wv = tables

    def nd(at):
        cvv, cww, cvw, cwv = (_eval_terms(t, a, b, at) for t in (vv, ww, vw, wv))
        return cww - cwv, cww + cvv - cwv - cvw

    n, d = nd(x)
    nr, dr = nd(1 - x)
    constant = 2 * n == d
    odd = n * dr + nr * d == d * dr
    even = n * dr == nr * d
    return SymmetryFlags(odd=odd, even=even, constant=constant)
