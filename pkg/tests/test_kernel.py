import random

import pytest

from conftest import all_words
from penney import search
from penney.properties import property_r_raw, trivial_overlaps

kernel = pytest.importorskip("penney._kernel")


def packed(u):
    return int(u, 2)


def test_pairs_match_pure_path():
    for n in range(2, 9):
        words = all_words(n)
        for v in words:
            for w in words:
                if v != w:
                    assert kernel.pair_has_r(packed(v), packed(w), n) == property_r_raw(v, w), (v, w)


def test_random_long_pairs():
    rng = random.Random(15)
    for n in (12, 15):
        for _ in range(300):
            v = "".join(rng.choice("01") for _ in range(n))
            w = "".join(rng.choice("01") for _ in range(n))
            if v != w:
                assert kernel.pair_has_r(packed(v), packed(w), n) == property_r_raw(v, w)


def test_shard_counts_match():
    for n in (5, 8):
        for lo, hi in ((0, 1 << n), (3, 11)):
            assert kernel.density_shard((n, lo, hi)) == search._density_shard((n, lo, hi))


def test_density_reports_agree():
    a = search.property_r_density(9, kernel="python", threads=1)
    b = search.property_r_density(9, kernel="numba", threads=1)
    assert a.counts == b.counts and b.details["kernel"] == "numba"


def test_trivial_count_small():
    n = 6
    want = sum(1 for v in all_words(n) for w in all_words(n)
               if v != w and trivial_overlaps(v, w))
    assert kernel.density_shard((n, 0, 1 << n))[1] == want
