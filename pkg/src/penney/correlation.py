"""Overlap sets, correlation polynomials and bad-prefix sets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from penney.words import Word, WordError


def overlap_lengths(x: str, y: str) -> tuple[int, ...]:
    """Lengths r >= 1 for which the r-suffix of x equals the r-prefix of y."""
    n = len(x)
    return tuple(r for r in range(1, min(n, len(y)) + 1) if x[n - r:] == y[:r])


@dataclass(frozen=True)
class OverlapSet:
    source: Word
    target: Word
    lengths: tuple[int, ...]

    def words(self) -> list[Word]:
        return [self.target.prefix(r) for r in self.lengths]

    def __contains__(self, r: int) -> bool:
        return r in self.lengths


def overlap_set(v: Word, w: Word) -> OverlapSet:
    if not v.digits or not w.digits:
        raise WordError("empty word")
    return OverlapSet(v, w, overlap_lengths(v.digits, w.digits))


@dataclass(frozen=True)
class CorrelationPoly:
    """Sum of c * p^-i (1-p)^-j over the table ``{(i, j): c}``."""

    terms: dict[tuple[int, int], int]

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def at(self, q: Fraction) -> Fraction:
        q = Fraction(q)
        return sum((c / (q ** i * (1 - q) ** j) for (i, j), c in self.terms.items()),
                   Fraction(0))

    def at_half(self) -> int:
        return sum(c * 2 ** (i + j) for (i, j), c in self.terms.items())

    def max_exponents(self) -> tuple[int, int]:
        if not self.terms:
            return 0, 0
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))


def correlation_from_lengths(target: str, lengths) -> CorrelationPoly:
    counts = Counter()
    for r in lengths:
        u = target[:r]
        ones = u.count("1")
        counts[(ones, r - ones)] += 1
    return CorrelationPoly(dict(counts))


def correlation_poly(v: Word, w: Word) -> CorrelationPoly:
    """Correlation table of ``v`` against ``w`` (the ``vw_p`` polynomial)."""
    ov = overlap_set(v, w)
    return correlation_from_lengths(w.digits, ov.lengths)


def bad_prefixes(x: Word, y: Word) -> frozenset[Word]:
    """D(x, y): prefixes x[:n-k] for every overlap length k of (x, y) with k < n."""
    n = len(x)
    return frozenset(x.prefix(n - k) for k in overlap_lengths(x.digits, y.digits) if k < n)


class BadPrefixSets(NamedTuple):
    dvv: frozenset
    dww: frozenset
    dvw: frozenset
    dwv: frozenset
    f: frozenset


def bad_prefix_sets(v: Word, w: Word, *, equal_length: bool = False) -> BadPrefixSets:
    """D(v,v), D(w,w), D(v,w), D(w,v) and their union F(v,w).

    Unequal lengths are accepted unless ``equal_length`` is set; the
    property-R decider sets it.
    """
    if equal_length and len(v) != len(w):
        raise WordError(f"words of unequal length {len(v)} and {len(w)}")
    dvv, dww = bad_prefixes(v, v), bad_prefixes(w, w)
    dvw, dwv = bad_prefixes(v, w), bad_prefixes(w, v)
    return BadPrefixSets(dvv, dww, dvw, dwv, dvv | dww | dvw | dwv)


def period_set(v: Word) -> frozenset[int]:
    """{n - i : the i-prefix of v is a self-overlap} (0 included)."""
    n = len(v)
    return frozenset(n - r for r in overlap_lengths(v.digits, v.digits))


def forward_propagation_holds(v: Word) -> bool:
    """Check that the period set is closed under sums below ``len(v)``."""
    n = len(v)
    periods = period_set(v)
    return all(s + t in periods for s in periods for t in periods if s + t < n)
