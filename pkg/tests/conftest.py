import json
from itertools import product

import pytest

from penney import cli


def all_words(n):
    return ["".join(bits) for bits in product("01", repeat=n)]


def words_up_to(n):
    return [u for k in range(1, n + 1) for u in all_words(k)]


def naive_count(pattern, text):
    m = len(pattern)
    return sum(text[i:i + m] == pattern for i in range(len(text) - m + 1))


def naive_class(u, v, w):
    """Reference race-outcome classifier built on the naive counter."""
    if u.endswith(v) and naive_count(v, u) == 1 and naive_count(w, u) == 0:
        return "v"
    if u.endswith(w) and naive_count(w, u) == 1 and naive_count(v, u) == 0:
        return "w"
    return "none"


def valid_pairs(max_len, min_len=1):
    words = [u for u in words_up_to(max_len) if len(u) >= min_len]
    for v in words:
        for w in words:
            if v != w and v not in w and w not in v:
                yield v, w


@pytest.fixture
def run_cli(capsys):
    def run(*argv):
        code = cli.main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return run


@pytest.fixture
def run_json(run_cli):
    def run(*argv):
        code, out, err = run_cli(*argv)
        return code, (json.loads(out) if out.strip() else None), err

    return run


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
