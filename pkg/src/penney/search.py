"""Exhaustive and sampled sweeps over pair space.

All values are exact.  Sweeps evaluate Conway's odds directly from overlap
lengths at a fixed rational p (no rational-function construction), using
integer weights that share one common scaling factor.
"""

from __future__ import annotations

import logging
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from penney.correlation import overlap_lengths
from penney.properties import property_e_witness, property_r_raw, trivial_overlaps
from penney.ratfunc import IntPoly, isolate_roots
from penney.winprob import classify_symmetry_fast, zero_limit_combinatorial
from penney.words import Word

log = logging.getLogger(__name__)

RNG_ALGORITHM = "python-random-MT19937/randrange+getrandbits"
LONG_RUN_DENSITY = 13


class RangeError(ValueError):
    """Parameters outside an operation's supported range."""


@dataclass
class SearchReport:
    operation: str
    parameters: dict
    verdict: str
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0
    seed: int | None = None

    def to_json(self, timing: bool = False) -> dict:
        out = {"operation": self.operation, "parameters": self.parameters,
               "verdict": self.verdict, "witnesses": self.witnesses,
               "counts": self.counts, "details": self.details}
        if self.seed is not None:
            out["seed"] = self.seed
            out["rng"] = RNG_ALGORITHM
        if timing:
            out["elapsed"] = self.elapsed
        return out


def words_of_length(n: int) -> list[str]:
    return [format(i, f"0{n}b") for i in range(1 << n)]


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _run_shards(func, shards, threads: int | None):
    """Map ``func`` over shards, results in shard order."""
    threads = threads or os.cpu_count() or 1
    if threads <= 1 or len(shards) <= 1:
        return [func(s) for s in shards]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, shards))


def _shards(count: int, size: int) -> list[tuple[int, int]]:
    return [(i, min(i + size, count)) for i in range(0, count, size)]


# -- Conway odds from overlap lengths -------------------------------------------

class Weights:
    """Integer stand-ins for 1/P_p(u) sharing a common factor.

    For p = a/b and a length cap N, a word u gets weight
    b^|u| a^(N - ones) (b - a)^(N - zeros), which is 1/P_p(u) multiplied by
    a^N (b - a)^N.  Conway's odds are ratios of sums of these weights.
    """

    def __init__(self, q: Fraction, cap: int):
        q = Fraction(q)
        if not 0 < q < 1:
            raise RangeError("p must lie strictly between 0 and 1")
        self.q, self.cap = q, cap
        a, b = q.numerator, q.denominator
        self._pa = [a ** k for k in range(cap + 1)]
        self._pc = [(b - a) ** k for k in range(cap + 1)]
        self._pb = [b ** k for k in range(cap + 1)]
        self._cache = {}

    def prefixes(self, y: str) -> list[int]:
        """Weights of y[:r] for r = 0..len(y)."""
        got = self._cache.get(y)
        if got is None:
            cap, ones = self.cap, 0
            got = [self._pa[cap] * self._pc[cap]]
            for r, ch in enumerate(y, start=1):
                ones += ch == "1"
                got.append(self._pb[r] * self._pa[cap - ones] * self._pc[cap - r + ones])
            self._cache[y] = got
        return got

    def correlation(self, x: str, y: str) -> int:
        wy = self.prefixes(y)
        return sum(wy[r] for r in overlap_lengths(x, y))


def _half_correlation(x: str, y: str) -> int:
    return sum(1 << r for r in overlap_lengths(x, y))


def conway_odds(v: str, w: str, weights: Weights | None = None) -> tuple[int, int]:
    """(ww - wv, vv - vw): the odds for v against w (p = 1/2 if no weights)."""
    corr = weights.correlation if weights is not None else _half_correlation
    return corr(w, w) - corr(w, v), corr(v, v) - corr(v, w)


def win_at(v: str, w: str, q=Fraction(1, 2)) -> Fraction:
    """Exact Win(v, w; q) for a valid pair given as digit strings."""
    q = Fraction(q)
    wts = None if q == Fraction(1, 2) else Weights(q, max(len(v), len(w)))
    x, y = conway_odds(v, w, wts)
    return Fraction(x, x + y)


# -- longer word by one --------------------------------------------------------------

def tightness_pair(m: int) -> tuple[str, str]:
    """v = 11(10)^m, w = (10)^m 1."""
    return "11" + "10" * m, "10" * m + "1"


def tightness_gap(m: int) -> Fraction:
    """1/2 - Win(v, w; 1/2) for the tightness pair."""
    v, w = tightness_pair(m)
    return Fraction(1, 2) - win_at(v, w)


def _longer_by_one_shard(args):
    n, lo, hi = args
    longs = words_of_length(n + 1)
    auto_long = {v: _half_correlation(v, v) for v in longs}
    uniform = {"0" * n, "1" * n}
    favorable, best, best_pair, checked = [], None, None, 0
    for w in words_of_length(n)[lo:hi]:
        ww = _half_correlation(w, w)
        for v in longs:
            if w in v:
                continue
            checked += 1
            x = ww - _half_correlation(w, v)
            y = auto_long[v] - _half_correlation(v, w)
            if x >= y:
                favorable.append((v, w, x, x + y))
            if w not in uniform:
                val = Fraction(x, x + y)
                if best is None or val > best:
                    best, best_pair = val, (v, w)
    return checked, favorable, best, best_pair


def verify_longer_by_one(n: int, threads: int | None = None) -> SearchReport:
    """Check that only w in {0^n, 1^n} lose (weakly) to a word one digit longer at p = 1/2."""
    if not 2 <= n <= 12:
        raise RangeError("n must satisfy 2 <= n <= 12")
    start = time.perf_counter()
    shards = [(n, lo, hi) for lo, hi in _shards(1 << n, max(1, (1 << n) // 16))]
    checked, favorable, best, best_pair = 0, [], None, None
    for c, fav, b, bp in _run_shards(_longer_by_one_shard, shards, threads):
        checked += c
        favorable.extend(fav)
        if b is not None and (best is None or b > best or (b == best and bp < best_pair)):
            best, best_pair = b, bp
    uniform = {"0" * n, "1" * n}
    violators = [f for f in favorable if f[1] not in uniform]
    witnesses = [{"v": v, "w": w, "win": _frac(Fraction(x, d))} for v, w, x, d in favorable]
    details = {"max_win_other_w": _frac(best) if best is not None else None,
               "max_win_other_pair": list(best_pair) if best_pair else None,
               "favorable_targets": sorted({f[1] for f in favorable})}
    if n % 2 == 1:
        m = (n - 1) // 2
        details["tightness"] = {"pair": list(tightness_pair(m)), "gap": _frac(tightness_gap(m))}
    return SearchReport(
        "longer-by-one", {"n": n}, "fail" if violators else "pass",
        witnesses=witnesses,
        counts={"pairs": checked, "favorable": len(favorable), "violations": len(violators)},
        details=details, elapsed=time.perf_counter() - start)


# -- longer by k -----------------------------------------------------------------------

def gap_bound(k: int) -> Fraction:
    return Fraction(2, 1 + 2 ** k)


def extremal_pair(n: int, k: int) -> tuple[str, str]:
    return "0" * (k + 1) + "1" * (n - 1), "1" * n


def _gap_shard(args):
    n, k, lo, hi = args
    longs = words_of_length(n + k)
    auto_long = {v: _half_correlation(v, v) for v in longs}
    num, den = 2, 1 + 2 ** k
    best, best_pair, checked, violations = None, None, 0, []
    for w in words_of_length(n)[lo:hi]:
        ww = _half_correlation(w, w)
        for v in longs:
            if w in v:
                continue
            checked += 1
            x = ww - _half_correlation(w, v)
            y = auto_long[v] - _half_correlation(v, w)
            if den * x >= num * (x + y):
                violations.append((v, w))
            val = Fraction(x, x + y)
            if best is None or val > best:
                best, best_pair = val, (v, w)
    return checked, violations, best, best_pair


def verify_length_gap_bound(n: int, k: int, threads: int | None = None) -> SearchReport:
    """Check Win(v, w; 1/2) < 2/(1 + 2^k) for |v| = n + k, |w| = n."""
    if not (2 <= n <= 10 and 0 <= k <= 4):
        raise RangeError("need 2 <= n <= 10 and 0 <= k <= 4")
    start = time.perf_counter()
    shards = [(n, k, lo, hi) for lo, hi in _shards(1 << n, max(1, (1 << n) // 16))]
    checked, violations, best, best_pair = 0, [], None, None
    for c, viol, b, bp in _run_shards(_gap_shard, shards, threads):
        checked += c
        violations.extend(viol)
        if b is not None and (best is None or b > best or (b == best and bp < best_pair)):
            best, best_pair = b, bp
    bound = gap_bound(k)
    ev, ew = extremal_pair(n, k)
    extremal_gap = bound - win_at(ev, ew)
    return SearchReport(
        "gap-bound", {"n": n, "k": k}, "fail" if violations else "pass",
        witnesses=[{"v": best_pair[0], "w": best_pair[1], "win": _frac(best)}],
        counts={"pairs": checked, "violations": len(violations)},
        details={"bound": _frac(bound), "max_win": _frac(best),
                 "max_gap": _frac(bound - best),
                 "extremal_pair": [ev, ew], "extremal_gap": _frac(extremal_gap),
                 "extremal_within_2^(2-n)": extremal_gap <= Fraction(4, 2 ** n)},
        elapsed=time.perf_counter() - start)


# -- thresholds and closed forms ------------------------------------------------------

def threshold_polynomial(k: int) -> IntPoly:
    """(1 - 2z)(1 - z)^k - z^2."""
    return IntPoly([1, -2]) * IntPoly([1, -1]) ** k - IntPoly([0, 0, 1])


def threshold_root(k: int, tol=Fraction(1, 10 ** 9)) -> tuple[Fraction, Fraction]:
    """Rational interval of width <= tol around the unique root in (0, 1/2).

    For k = 1 the polynomial is z^2 - 3z + 1, whose root is (3 - sqrt 5)/2.
    """
    if k < 1:
        raise RangeError("k must be >= 1")
    roots = isolate_roots(threshold_polynomial(k), 0, Fraction(1, 2), Fraction(tol))
    if len(roots) != 1:
        raise ArithmeticError(f"expected one root in (0, 1/2), found {len(roots)}")
    return roots[0]


def threshold_approximation(k: int) -> float:
    return (k + 2 - math.sqrt(k * k - 4 * k + 8)) / (4 * k - 2)


def bound_branches(k: int, q) -> tuple[Fraction, Fraction]:
    """(small-p branch, large-p branch) of the conjectured maximal win probability."""
    p = Fraction(q)
    if k == 1:
        return 1 - p, 1 / (2 - p)
    c = (1 - p) ** k
    return c / (1 - p * (1 - c) + p * p), (1 - p) ** (k - 1) / (1 + c)


def closed_form_bounds(k: int, q) -> dict:
    q = Fraction(q)
    if k < 1 or not 0 < q < Fraction(1, 2):
        raise RangeError("need k >= 1 and 0 < p < 1/2")
    low, high = bound_branches(k, q)
    lo, hi = threshold_root(k)
    side = "small_p" if q < lo else "large_p" if q > hi else "threshold"
    return {"k": k, "p": _frac(q), "small_p_branch": _frac(low),
            "large_p_branch": _frac(high), "applicable": side,
            "threshold_interval": [_frac(lo), _frac(hi)]}


# -- argmax over W(n, k) ---------------------------------------------------------------

def conjectured_pair(n: int, k: int, small_p: bool) -> tuple[str, str]:
    if k == 1:
        if small_p:
            return "00" + "1" * (n - 1), "1" * (n - 1) + "0"
        return "10" + "1" * (n - 1), "1" * n
    if not small_p:
        return "0" * (k - 1) + "10" + "1" * (n - 1), "1" * n
    m, odd = divmod(n, 2)
    if odd:
        return "0" * (k + 1) + "01" * m, "01" * m + "0"
    return "0" * (k + 1) + "10" * (m - 1) + "1", "10" * m


@dataclass(frozen=True)
class PairFilter:
    """Which (v, w) pairs of given lengths a sweep visits."""

    len_v: int
    len_w: int
    require_equal_ones: bool = False
    require_no_subword: bool = True
    canonical_only: bool = False

    def __post_init__(self):
        if not self.len_v >= self.len_w >= 1:
            raise RangeError("need len_v >= len_w >= 1")

    def pairs(self):
        """Matching pairs in lexicographic order of (v, w)."""
        flip = str.maketrans("01", "10")
        by_ones = {}
        for w in words_of_length(self.len_w):
            by_ones.setdefault(w.count("1") if self.require_equal_ones else None, []).append(w)
        for v in words_of_length(self.len_v):
            for w in by_ones.get(v.count("1") if self.require_equal_ones else None, ()):
                if v == w or (self.require_no_subword and (w in v or v in w)):
                    continue
                if self.canonical_only and (v.translate(flip), w.translate(flip)) < (v, w):
                    continue
                yield v, w


def w_pairs(n: int, k: int):
    """Pairs of W(n, k) in lexicographic order of (v, w)."""
    return PairFilter(n + k, n, require_equal_ones=True).pairs()


def argmax_win(n: int, k: int, q) -> SearchReport:
    """Exact maximiser of Win(v, w; q) over W(n, k); ties go to the
    lexicographically smallest (v, w)."""
    q = Fraction(q)
    if not (2 <= n <= 11 and 0 <= k <= 4):
        raise RangeError("need 2 <= n <= 11 and 0 <= k <= 4")
    start = time.perf_counter()
    wts = Weights(q, n + k)
    best = None
    ties = count = 0
    for v, w in w_pairs(n, k):
        count += 1
        x, y = conway_odds(v, w, wts)
        if best is None or x * best[1] > best[0] * (x + y):
            best, winner, ties = (x, x + y), (v, w), 1
        elif x * best[1] == best[0] * (x + y):
            ties += 1
    if best is None:
        raise RangeError(f"W({n},{k}) is empty")
    value = Fraction(*best)
    details = {"value": _frac(value), "tie_break": "lexicographic (v, w), 0 < 1",
               "maximisers": ties}
    verdict = "evidence"
    if k >= 1:
        lo, hi = threshold_root(k)
        side = "small_p" if q < lo else "large_p" if q > hi else "threshold"
        details["threshold_side"] = side
        if side != "threshold":
            cv, cw = conjectured_pair(n, k, side == "small_p")
            cval = win_at(cv, cw, q)
            details.update(conjectured_pair=[cv, cw], conjectured_value=_frac(cval),
                           matches=(cv, cw) == winner,
                           conjectured_attains_max=cval == value)
            verdict = "pass" if cval == value else "fail"
    return SearchReport("argmax", {"n": n, "k": k, "p": _frac(q)}, verdict,
                        witnesses=[{"v": winner[0], "w": winner[1], "win": _frac(value)}],
                        counts={"pairs": count}, details=details,
                        elapsed=time.perf_counter() - start)


# -- longer-word favourability curve ---------------------------------------------------

@dataclass(frozen=True)
class CurveRow:
    p: Fraction
    proportion: Fraction
    ci_half_width: float
    n_pairs: int
    favorable: int

    def csv(self) -> str:
        return (f"{float(self.p):.10g},{float(self.proportion):.10f},"
                f"{self.ci_half_width:.10f},{self.n_pairs}")


CURVE_HEADER = "p,proportion,ci_half_width,n_pairs"


def _favorable_flags(v, w, weights_list, auto_cache):
    flags = []
    for wts in weights_list:
        wv, ww = wts.prefixes(v), wts.prefixes(w)
        key = (v, wts.q), (w, wts.q)
        vv = auto_cache.get(key[0])
        if vv is None:
            vv = auto_cache[key[0]] = sum(wv[r] for r in overlap_lengths(v, v))
        ww_ = auto_cache.get(key[1])
        if ww_ is None:
            ww_ = auto_cache[key[1]] = sum(ww[r] for r in overlap_lengths(w, w))
        vw = sum(ww[r] for r in overlap_lengths(v, w))
        wv_ = sum(wv[r] for r in overlap_lengths(w, v))
        flags.append(ww_ - wv_ > vv - vw)
    return flags


def _curve_shard(args):
    max_len, grid, lv = args
    weights_list = [Weights(q, max_len) for q in grid]
    auto = {}
    valid, fav = 0, [0] * len(grid)
    longs = words_of_length(lv)
    for lw in range(1, lv):
        for w in words_of_length(lw):
            for v in longs:
                if w in v:
                    continue
                valid += 1
                for i, f in enumerate(_favorable_flags(v, w, weights_list, auto)):
                    fav[i] += f
    return valid, fav


def longer_favorable_curve(max_len: int, grid, samples: int | None = None,
                           seed: int = 0, threads: int | None = None) -> list[CurveRow]:
    """Proportion of valid pairs with |v| > |w| (lengths <= max_len) where Win(v, w; p) > 1/2.

    Exhaustive unless ``samples`` is given; samples are drawn uniformly
    from all such pairs and invalid (w inside v) draws are discarded.
    """
    grid = [Fraction(q) for q in grid]
    if any(not 0 < q < Fraction(1, 2) for q in grid):
        raise RangeError("grid points must lie in (0, 1/2)")
    if samples is None:
        if not 2 <= max_len <= 9:
            raise RangeError("exhaustive mode needs 2 <= max_len <= 9")
        valid, fav = 0, [0] * len(grid)
        shards = [(max_len, grid, lv) for lv in range(2, max_len + 1)]
        for c, f in _run_shards(_curve_shard, shards, threads):
            valid += c
            fav = [a + b for a, b in zip(fav, f)]
        return [CurveRow(q, Fraction(f, valid), 0.0, valid, f) for q, f in zip(grid, fav)]
    if not 2 <= max_len <= 17:
        raise RangeError("sampled mode needs 2 <= max_len <= 17")
    if samples < 1000:
        raise RangeError("sample size must be at least 1000")
    rng = random.Random(seed)
    pairs = [(lv, lw) for lv in range(2, max_len + 1) for lw in range(1, lv)]
    cum, total = [], 0
    for lv, lw in pairs:
        total += 1 << (lv + lw)
        cum.append(total)
    weights_list = [Weights(q, max_len) for q in grid]
    auto = {}
    valid, fav = 0, [0] * len(grid)
    for _ in range(samples):
        r = rng.randrange(total)
        lo, hi = 0, len(cum) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if cum[mid] > r:
                hi = mid
            else:
                lo = mid + 1
        lv, lw = pairs[lo]
        v = format(rng.getrandbits(lv), f"0{lv}b")
        w = format(rng.getrandbits(lw), f"0{lw}b")
        if w in v:
            continue
        valid += 1
        for i, f in enumerate(_favorable_flags(v, w, weights_list, auto)):
            fav[i] += f
        if len(auto) > 200_000:
            auto.clear()
    rows = []
    for q, f in zip(grid, fav):
        prop = Fraction(f, valid)
        half = 1.96 * math.sqrt(float(prop) * (1 - float(prop)) / valid)
        rows.append(CurveRow(q, prop, half, valid, f))
    return rows


# -- property R density ------------------------------------------------------------------

def _density_shard(args):
    n, lo, hi = args
    words = words_of_length(n)
    r_count = trivial = 0
    auto_trivial = [overlap_lengths(x, x) == (n,) for x in words]
    for i in range(lo, hi):
        v = words[i]
        for j in range(i + 1, len(words)):
            w = words[j]
            if property_r_raw(v, w):
                r_count += 1
            if auto_trivial[i] and auto_trivial[j] and trivial_overlaps(v, w):
                trivial += 1
    return 2 * r_count, 2 * trivial


def density_kernel(name: str = "auto"):
    """Shard counter by name: "python", "numba" or "auto" (numba when importable)."""
    if name == "python":
        return _density_shard
    try:
        from penney._kernel import density_shard
    except ImportError:
        if name == "numba":
            raise RangeError("the numba kernel needs the optional numba dependency") from None
        return _density_shard
    if name not in ("auto", "numba"):
        raise RangeError(f"unknown kernel {name!r}")
    return density_shard


def _read_checkpoint(path):
    done = {}
    if path and os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 3:
                    done[int(parts[0])] = (int(parts[1]), int(parts[2]))
    return done


def property_r_density(n: int, threads: int | None = None, checkpoint: str | None = None,
                       confirm_long_run: bool = False, shard_size: int | None = None,
                       kernel: str = "auto") -> SearchReport:
    """Exact count of ordered pairs v != w of length n with property R, over 4^n.

    ``kernel`` picks the shard counter (see :func:`density_kernel`); both
    give identical counts.  Results are folded in shard order and optionally
    checkpointed one line per shard: ``shard_id r_count trivial_count``.
    """
    if not 2 <= n <= 15:
        raise RangeError("n must satisfy 2 <= n <= 15")
    if n >= LONG_RUN_DENSITY and not confirm_long_run:
        raise RangeError(f"n >= {LONG_RUN_DENSITY} is a long run; pass --confirm-long-run")
    start = time.perf_counter()
    count = 1 << n
    shard_size = shard_size or max(1, count // 64)
    shards = _shards(count, shard_size)
    done = _read_checkpoint(checkpoint)
    todo = [(sid, (n, lo, hi)) for sid, (lo, hi) in enumerate(shards) if sid not in done]
    func = density_kernel(kernel)
    threads = threads or os.cpu_count() or 1
    batch = max(1, threads)
    for b in range(0, len(todo), batch):
        chunk = todo[b:b + batch]
        results = _run_shards(func, [args for _, args in chunk], threads)
        for (sid, _), res in zip(chunk, results):
            done[sid] = res
            if checkpoint:
                with open(checkpoint, "a") as fh:
                    fh.write(f"{sid} {res[0]} {res[1]}\n")
        log.info("density n=%d: %d/%d shards", n, len(done), len(shards))
    r_total = sum(done[s][0] for s in range(len(shards)))
    t_total = sum(done[s][1] for s in range(len(shards)))
    total = 4 ** n
    dens, tdens = Fraction(r_total, total), Fraction(t_total, total)
    return SearchReport(
        "density", {"n": n}, "evidence",
        counts={"pairs_with_R": r_total, "pairs_trivial_overlap": t_total, "all_pairs": total},
        details={"density": _frac(dens), "density_decimal": f"{float(dens):.6f}",
                 "trivial_density": _frac(tdens), "trivial_density_decimal": f"{float(tdens):.6f}",
                 "normalisation": "ordered pairs v != w over 4^n", "shards": len(shards),
                 "kernel": "python" if func is _density_shard else "numba"},
        elapsed=time.perf_counter() - start)


# -- symmetry census ---------------------------------------------------------------------

def _is_rotation_candidate(v: str, w: str) -> bool:
    return w in v + v


def _census_shard(args):
    n, lo, hi = args
    words = words_of_length(n)
    rows = []
    for i in range(lo, hi):
        v = words[i]
        vw = Word(v)
        for j in range(i + 1, len(words)):
            w = words[j]
            ww = Word(w)
            flags = classify_symmetry_fast(vw, ww)
            r = property_r_raw(v, w)
            e = _is_rotation_candidate(v, w) and property_e_witness(vw, ww) is not None
            rows.append((v, w, flags.label(), r, e, v.count("1") == w.count("1")))
    return rows


def symmetry_census(n: int, threads: int | None = None, example_limit: int = 20) -> SearchReport:
    """Classify every ordered pair of distinct length-n words by symmetry,
    cross-tabulated against properties R and E and the bit-flip class."""
    if not 2 <= n <= 10:
        raise RangeError("n must satisfy 2 <= n <= 10")
    start = time.perf_counter()
    shards = [(n, lo, hi) for lo, hi in _shards(1 << n, max(1, (1 << n) // 32))]
    counts = {label: 0 for label in ("none", "odd", "even", "constant")}
    cross = {f"{label}|{key}": 0 for label in counts
             for key in ("R", "notR", "E", "E_notR", "bitflip")}
    examples = {label: [] for label in counts}
    problems = []
    flip = str.maketrans("01", "10")
    for rows in _run_shards(_census_shard, shards, threads):
        for v, w, label, r, e, same_ones in rows:
            # (w, v) has the same flags, R and E verdicts
            for a, b in ((v, w), (w, v)):
                counts[label] += 1
                cross[f"{label}|{'R' if r else 'notR'}"] += 1
                if e:
                    cross[f"{label}|E"] += 1
                    if not r:
                        cross[f"{label}|E_notR"] += 1
                if b == a.translate(flip):
                    cross[f"{label}|bitflip"] += 1
                if len(examples[label]) < example_limit:
                    examples[label].append({"v": a, "w": b, "R": r, "E": e})
            if label in ("even", "constant") and not same_ones:
                problems.append(f"{label} pair ({v},{w}) with unequal weights")
            if label == "constant" and zero_limit_combinatorial(Word(v), Word(w)) != Fraction(1, 2):
                problems.append(f"constant pair ({v},{w}) with limit != 1/2")
    for label in examples:
        examples[label].sort(key=lambda d: (d["v"], d["w"]))
    return SearchReport(
        "census", {"n": n}, "fail" if problems else "pass",
        witnesses=[{"label": k, "examples": v} for k, v in examples.items()],
        counts={**counts, **cross, "pairs": sum(counts.values())},
        details={"problems": problems[:50]}, elapsed=time.perf_counter() - start)


def census_label(n: int, v: str, w: str) -> dict:
    """Single-pair census row (symmetry label, R, E)."""
    vw, ww = Word(v), Word(w)
    return {"label": classify_symmetry_fast(vw, ww).label(),
            "R": property_r_raw(v, w),
            "E": _is_rotation_candidate(v, w) and property_e_witness(vw, ww) is not None}
