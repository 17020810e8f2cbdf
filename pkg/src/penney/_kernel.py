"""Compiled pair-space counter for the property R density sweep.

Words are packed into integers (leftmost digit most significant).  The
decision procedure is the same bad-prefix test as
:func:`penney.properties.property_r_raw`, only on bits.  Needs numba.
"""

from __future__ import annotations

import numba
import numpy as np


@numba.njit(cache=True)
def _overlaps(x, y, n, k):
    # length-k suffix of x equals length-k prefix of y
    return (x & ((1 << k) - 1)) == (y >> (n - k))


@numba.njit(cache=True)
def _wins(f, flen, win, rival, n):
    """f.win ends a race won by ``win``: no earlier win, no rival anywhere."""
    u = (f << n) | win
    mask = (1 << n) - 1
    for i in range(flen + 1):
        window = (u >> (flen - i)) & mask
        if window == rival:
            return False
        if i < flen and window == win:
            return False
    return True


@numba.njit(cache=True)
def _bad_prefix_hit(x, y, v, w, n):
    for k in range(1, n):
        if _overlaps(x, y, n, k):
            f = x >> k
            flen = n - k
            if _wins(f, flen, v, w, n) or _wins(f, flen, w, v, n):
                return True
    return False


@numba.njit(cache=True)
def pair_has_r(v, w, n):
    return not (_bad_prefix_hit(v, v, v, w, n) or _bad_prefix_hit(w, w, v, w, n)
                or _bad_prefix_hit(v, w, v, w, n) or _bad_prefix_hit(w, v, v, w, n))


@numba.njit(cache=True)
def _count_range(n, lo, hi):
    size = 1 << n
    auto_trivial = np.ones(size, dtype=np.bool_)
    for x in range(size):
        for k in range(1, n):
            if _overlaps(x, x, n, k):
                auto_trivial[x] = False
                break
    r_count = 0
    trivial = 0
    for v in range(lo, hi):
        for w in range(v + 1, size):
            if pair_has_r(v, w, n):
                r_count += 1
            if auto_trivial[v] and auto_trivial[w]:
                clean = True
                for k in range(1, n):
                    if _overlaps(v, w, n, k) or _overlaps(w, v, n, k):
                        clean = False
                        break
                if clean:
                    trivial += 1
    return r_count, trivial


def density_shard(args):
    """Drop-in replacement for the pure-Python density shard counter."""
    n, lo, hi = args
    r_count, trivial = _count_range(n, lo, hi)
    return 2 * int(r_count), 2 * int(trivial)
