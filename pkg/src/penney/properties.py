"""Deciders for the suffix-swap property R and the split property E.

Property R: replacing the final v of a finished race by w (or vice versa)
never creates another occurrence.  Property E: v = ab, w = ba with a
measure-preserving bijection x a^j v -> x b^j w between race outcomes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import ceil

from penney.automaton import enumerate_omega
from penney.correlation import bad_prefix_sets, bad_prefixes, overlap_lengths
from penney.words import OmegaClass, Word, WordError, omega_class


def _check_same_length_pair(v: Word, w: Word) -> None:
    if len(v) != len(w):
        raise WordError(f"words of unequal length {len(v)} and {len(w)}")
    if v == w:
        raise WordError("identical words")
    if not v.digits:
        raise WordError("empty word")


def _wins(u: str, winner: str, rival: str) -> bool:
    return rival not in u and u.find(winner) == len(u) - len(winner)


def _raw_bad_prefixes(x: str, y: str) -> set[str]:
    n = len(x)
    return {x[:n - k] for k in overlap_lengths(x, y) if k < n}


def property_r_raw(v: str, w: str) -> bool:
    """Bad-prefix R test on equal-length distinct digit strings."""
    bad = (_raw_bad_prefixes(v, v) | _raw_bad_prefixes(w, w)
           | _raw_bad_prefixes(v, w) | _raw_bad_prefixes(w, v))
    for f in bad:
        if _wins(f + v, v, w) or _wins(f + w, w, v):
            return False
    return True


def has_property_r(v: Word, w: Word) -> bool:
    """True iff f v and f w both fail to be finished races for every bad prefix f."""
    _check_same_length_pair(v, w)
    sets = bad_prefix_sets(v, w, equal_length=True)
    for f in sets.f:
        if (omega_class(f + v, v, w) is not OmegaClass.NOT_IN_OMEGA
                or omega_class(f + w, v, w) is not OmegaClass.NOT_IN_OMEGA):
            return False
    return True


def property_r_bruteforce(v: Word, w: Word) -> bool:
    """R by comparing x v and x w over every x of length n - 1."""
    _check_same_length_pair(v, w)
    vs, ws = v.digits, w.digits
    for bits in product("01", repeat=len(v) - 1):
        x = "".join(bits)
        if _wins(x + vs, vs, ws) != _wins(x + ws, ws, vs):
            return False
    return True


def trivial_overlaps(v: str, w: str) -> bool:
    """No cross overlaps and only the full self-overlap for both words."""
    n = len(v)
    return (not overlap_lengths(v, w) and not overlap_lengths(w, v)
            and overlap_lengths(v, v) == (n,) and overlap_lengths(w, w) == (len(w),))


# -- property E -------------------------------------------------------------------

@dataclass(frozen=True)
class EWitness:
    a: Word
    b: Word
    s_set: frozenset = field(default_factory=frozenset)
    bound_m: int = 0

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b),
                "S": sorted(str(s) for s in self.s_set), "bound_m": self.bound_m}


def _stabilization_bound(n: int, piece: int) -> int:
    return ceil((n + piece) / piece) + 1


def _check_split(v: Word, w: Word, i: int, strict: bool) -> EWitness | None:
    a, b = v.prefix(i), Word(v.digits[i:])
    # phi must keep P_p, so a and b need the same zeros as well as the same ones
    if w != b + a or a == b or a.ones != b.ones or len(a) != len(b):
        return None
    dv = bad_prefixes(v, v) | bad_prefixes(w, v)
    dw = bad_prefixes(w, w) | bad_prefixes(v, w)
    # the v-side set carries b and the w-side set carries a
    if b not in dv or a not in dw:
        return None
    s = dv - {b}
    if dw - {a} != s:
        return None
    allowed = s | {a, b}
    big_m = max(_stabilization_bound(len(v), len(a)), _stabilization_bound(len(v), len(b)))
    vs, ws = v.digits, w.digits
    for m in range(1, big_m + 1):
        am, bm = a.power(m), b.power(m)
        if m >= 2:
            if not (bad_prefixes(v, am) | bad_prefixes(w, am)) <= allowed:
                return None
            if not (bad_prefixes(v, bm) | bad_prefixes(w, bm)) <= allowed:
                return None
            if strict and not (bad_prefixes(v, am) | bad_prefixes(w, bm)) <= allowed:
                return None
            if any(x in y for x in (vs, ws) for y in (am.digits, bm.digits)):
                return None
        if not _wins((am + b).digits, vs, ws) or not _wins((bm + a).digits, ws, vs):
            return None
    return EWitness(a, b, frozenset(s), big_m)


def property_e_witnesses(v: Word, w: Word, *, strict: bool = False) -> list[EWitness]:
    """Every split witnessing property E, in increasing |a|."""
    _check_same_length_pair(v, w)
    if len(v) < 2:
        raise WordError("property E needs words of length >= 2")
    out = []
    for i in range(1, len(v)):
        wit = _check_split(v, w, i, strict)
        if wit is not None:
            out.append(wit)
    return out


def property_e_witness(v: Word, w: Word, *, strict: bool = False) -> EWitness | None:
    found = property_e_witnesses(v, w, strict=strict)
    return found[0] if found else None


def phi_map(z: Word, witness: EWitness, v: Word, w: Word, *, inverse: bool = False) -> Word:
    """x a^j v -> x b^j w with j maximal (or the reverse map when ``inverse``)."""
    a, b, src, dst = witness.a, witness.b, v, w
    want = OmegaClass.IN_OMEGA_V
    if inverse:
        a, b, src, dst = b, a, w, v
        want = OmegaClass.IN_OMEGA_W
    if omega_class(z, v, w) is not want:
        raise WordError(f"{z} is not a race won by {src}")
    head = z.digits[:len(z) - len(src)]
    j = 0
    while head.endswith(a.digits * (j + 1)):
        j += 1
    x = head[:len(head) - j * len(a)]
    return Word(x + b.digits * j + dst.digits)


@dataclass
class PhiReport:
    passed: bool
    max_len: int
    count_v: int
    count_w: int
    checked: int
    counterexample: str | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


def verify_phi_bijection(v: Word, w: Word, witness: EWitness, max_len: int) -> PhiReport:
    """Check phi on every race of length <= max_len: lands in the w-class,
    keeps the (zeros, ones) profile, is injective and inverted by the
    swapped map."""
    members = enumerate_omega(v, w, max_len)
    omega_v = [z for z, c in members if c is OmegaClass.IN_OMEGA_V]
    omega_w = {z for z, c in members if c is OmegaClass.IN_OMEGA_W}
    report = PhiReport(True, max_len, len(omega_v), len(omega_w), 0)

    def fail(z, why):
        report.passed, report.counterexample, report.reason = False, str(z), why
        return report

    images = set()
    for z in omega_v:
        y = phi_map(z, witness, v, w)
        report.checked += 1
        if y not in omega_w:
            return fail(z, f"image {y} is not a race won by {w}")
        if (y.zeros, y.ones) != (z.zeros, z.ones):
            return fail(z, f"image {y} changes the digit profile")
        if y in images:
            return fail(z, f"image {y} is hit twice")
        images.add(y)
        if phi_map(y, witness, v, w, inverse=True) != z:
            return fail(z, "reverse map does not return the original word")
    if images != omega_w:
        missing = min(omega_w - images, key=lambda u: (len(u), u.digits))
        return fail(missing, "race won by w has no preimage")
    return report


def family_pair(k: int) -> tuple[Word, Word]:
    """(ab, ba) with a = 0 1^k 0 and b = 0 1^(k-1) 0 1."""
    a = Word("0" + "1" * k + "0")
    b = Word("0" + "1" * (k - 1) + "01")
    return a + b, b + a
