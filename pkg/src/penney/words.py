"""Binary words, occurrence counting and race-outcome membership."""

from __future__ import annotations

import enum
from dataclasses import dataclass

MAX_LENGTH = 63


class WordError(ValueError):
    """Raised for malformed word text or violated word preconditions."""


@dataclass(frozen=True, slots=True, order=True)
class Word:
    """Finite word over {0,1}, leftmost digit first.

    The empty word is allowed only as an automaton vertex label; use
    :func:`make_word` to parse user input.
    """

    digits: str

    def __post_init__(self):
        if self.digits.strip("01"):
            raise WordError(f"non-binary digits in {self.digits!r}")

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return self.digits

    def __repr__(self):
        return f"Word({self.digits!r})"

    def __add__(self, other: Word) -> Word:
        return Word(self.digits + other.digits)

    def __getitem__(self, key) -> Word:
        return Word(self.digits[key])

    @property
    def ones(self) -> int:
        return self.digits.count("1")

    @property
    def zeros(self) -> int:
        return self.digits.count("0")

    @property
    def bits(self) -> int:
        """Digits packed into an integer, leftmost digit most significant."""
        return int(self.digits, 2) if self.digits else 0

    def prefix(self, r: int) -> Word:
        return Word(self.digits[:r])

    def suffix(self, r: int) -> Word:
        return Word(self.digits[len(self.digits) - r:])

    def reverse(self) -> Word:
        return Word(self.digits[::-1])

    def power(self, m: int) -> Word:
        return Word(self.digits * m)


def make_word(text: str) -> Word:
    """Parse '0'/'1' text into a :class:`Word`.

    >>> make_word("0110").ones
    2
    """
    if not text:
        raise WordError("empty word")
    for pos, ch in enumerate(text, start=1):
        if ch not in "01":
            raise WordError(f"invalid digit {ch!r} at position {pos}")
    if len(text) > MAX_LENGTH:
        raise WordError(f"word longer than {MAX_LENGTH} digits")
    return Word(text)


def bitflip(u: Word) -> Word:
    return Word(u.digits.translate(_FLIP))


_FLIP = str.maketrans("01", "10")


def failure_function(pattern: str) -> list[int]:
    """KMP failure table: ``f[i]`` is the longest proper border of ``pattern[:i]``."""
    f = [0] * (len(pattern) + 1)
    f[0] = -1
    k = -1
    for i, ch in enumerate(pattern):
        while k >= 0 and pattern[k] != ch:
            k = f[k]
        k += 1
        f[i + 1] = k
    return f


def occurrence_positions(pattern: str, text: str) -> list[int]:
    """0-based start positions of every (possibly overlapping) occurrence."""
    m = len(pattern)
    if m == 0:
        raise WordError("empty pattern")
    f = failure_function(pattern)
    out = []
    k = 0
    for i, ch in enumerate(text):
        while k >= 0 and (k == m or pattern[k] != ch):
            k = f[k]
        k += 1
        if k == m:
            out.append(i - m + 1)
    return out


def occurrences(pattern: Word, text: Word) -> int:
    """Number of start positions where ``pattern`` occurs in ``text``."""
    return len(occurrence_positions(pattern.digits, text.digits))


def is_subword(u: Word, v: Word) -> bool:
    """True if ``u`` occurs as a contiguous block of ``v``."""
    return u.digits in v.digits


class OmegaClass(enum.Enum):
    IN_OMEGA_V = "v"
    IN_OMEGA_W = "w"
    NOT_IN_OMEGA = "none"

    def swapped(self) -> OmegaClass:
        if self is OmegaClass.IN_OMEGA_V:
            return OmegaClass.IN_OMEGA_W
        if self is OmegaClass.IN_OMEGA_W:
            return OmegaClass.IN_OMEGA_V
        return self


def _ends_race(u: str, winner: str, rival: str) -> bool:
    # winner occurs exactly once, as the suffix, and rival never occurs
    return (u.endswith(winner)
            and u.find(winner) == len(u) - len(winner)
            and rival not in u)


def omega_class(u: Word, v: Word, w: Word) -> OmegaClass:
    """Classify ``u`` as a finished race won by ``v``, by ``w``, or neither.

    Membership in the v-class requires ``u`` to end with ``v``, contain
    ``v`` exactly once and never contain ``w``.
    """
    if v == w:
        raise WordError("identical words")
    if not v.digits or not w.digits:
        raise WordError("empty word")
    if _ends_race(u.digits, v.digits, w.digits):
        return OmegaClass.IN_OMEGA_V
    if _ends_race(u.digits, w.digits, v.digits):
        return OmegaClass.IN_OMEGA_W
    return OmegaClass.NOT_IN_OMEGA


class SubwordError(WordError):
    """One word of a race pair occurs inside the other."""

    def __init__(self, inner: Word, outer: Word, position: int):
        super().__init__(f"{inner} is a subword of {outer} at position {position}")
        self.inner, self.outer, self.position = inner, outer, position


def check_race_pair(v: Word, w: Word) -> None:
    """Reject identical words and pairs where one word contains the other.

    Positions in the error are 1-based.
    """
    if not v.digits or not w.digits:
        raise WordError("empty word")
    if v == w:
        raise WordError("identical words")
    for inner, outer in ((w, v), (v, w)):
        pos = outer.digits.find(inner.digits)
        if pos >= 0:
            raise SubwordError(inner, outer, pos + 1)
