"""Prefix-pair automaton of a two-word race and exact solves on it.

The automaton tracks, for the bits read so far, the longest suffix that is
a prefix of each word.  A random walk on it stops exactly when one word
first occurs, which gives an oracle for the win probability and waiting
times that is independent of correlation polynomials.
"""

from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction

from penney.words import OmegaClass, Word, WordError, check_race_pair

MAX_ENUMERATE_LENGTH = 30
MAX_PROFILE_LENGTH = 64


def _advance(prefix: str, letter: str, pattern: str) -> str:
    """Longest suffix of prefix+letter that is a prefix of pattern."""
    s = prefix + letter
    for r in range(min(len(s), len(pattern)), 0, -1):
        if s.endswith(pattern[:r]):
            return pattern[:r]
    return ""


@dataclass(frozen=True, eq=False)
class PrefixPairAutomaton:
    """Deterministic race graph; vertices are (v-prefix, w-prefix) pairs.

    For a single-word automaton ``w`` is None and the second component of
    every vertex is the empty word.
    """

    v: Word
    w: Word | None
    vertices: tuple          # discovery order of the construction
    edges: dict              # vertex -> (successor on 0, successor on 1)
    start: tuple

    @property
    def absorbing(self) -> frozenset:
        return frozenset(x for x in self.vertices if self.winner(x) is not None)

    def winner(self, vertex) -> OmegaClass | None:
        vp, wp = vertex
        if vp == self.v:
            return OmegaClass.IN_OMEGA_V
        if self.w is not None and wp == self.w:
            return OmegaClass.IN_OMEGA_W
        return None

    def step(self, vertex, letter: str):
        return self.edges[vertex][int(letter)]

    def bfs_order(self) -> list:
        seen, order, queue = {self.start}, [self.start], deque([self.start])
        while queue:
            x = queue.popleft()
            for y in self.edges.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    queue.append(y)
        return order


def _construct(v: Word, w: Word | None) -> PrefixPairAutomaton:
    empty = Word("")
    vs, ws = v.digits, (w.digits if w is not None else None)
    start = (empty, empty)
    vertices = {start: None}
    edges = {}
    stack = [start]
    while stack:
        x = stack.pop()
        succ = []
        for a in "01":
            vp = _advance(x[0].digits, a, vs)
            wp = _advance(x[1].digits, a, ws) if ws is not None else ""
            y = (Word(vp), Word(wp))
            succ.append(y)
            if y not in vertices:
                vertices[y] = None
                if vp != vs and (ws is None or wp != ws):
                    stack.append(y)
        edges[x] = tuple(succ)
    g = PrefixPairAutomaton(v, w, tuple(vertices), edges, start)
    _check_invariants(g)
    return g


def _check_invariants(g: PrefixPairAutomaton) -> None:
    for x in g.vertices:
        out = g.edges.get(x)
        if g.winner(x) is None:
            if out is None or len(out) != 2:
                raise AssertionError(f"vertex {x} is not complete")
        elif out is not None:
            raise AssertionError(f"absorbing vertex {x} has out-edges")
    if len(g.bfs_order()) != len(g.vertices):
        raise AssertionError("unreachable vertices")


def build(v: Word, w: Word) -> PrefixPairAutomaton:
    """Race graph for the pair (v, w)."""
    check_race_pair(v, w)
    return _construct(v, w)


def build_single(v: Word) -> PrefixPairAutomaton:
    """Waiting-time graph for v alone (rival tracking disabled)."""
    if not v.digits:
        raise WordError("empty word")
    return _construct(v, None)


# -- exact linear algebra ----------------------------------------------------

def bareiss_solve(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve an integer system by fraction-free elimination."""
    n = len(matrix)
    m = [list(row) + [r] for row, r in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    break
            else:
                raise ZeroDivisionError("singular system")
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(m[i][n])
        for j in range(i + 1, n):
            if m[i][j]:
                acc -= m[i][j] * x[j]
        x[i] = acc / m[i][i]
    return x


def _system(g: PrefixPairAutomaton, q: Fraction, boundary, constant: int):
    """Rows b*x_s - a*x_{s1} - (b-a)*x_{s0} = rhs over transient vertices."""
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError("q must lie strictly between 0 and 1")
    a, b = q.numerator, q.denominator
    weights = (b - a, a)
    transient = [x for x in g.vertices if g.winner(x) is None]
    index = {x: i for i, x in enumerate(transient)}
    n = len(transient)
    matrix = [[0] * n for _ in range(n)]
    rhs = [constant * b] * n
    for x, i in index.items():
        matrix[i][i] += b
        for wt, y in zip(weights, g.edges[x]):
            if y in index:
                matrix[i][index[y]] -= wt
            else:
                rhs[i] += wt * boundary(y)
    return matrix, rhs, index


def absorption_win(g: PrefixPairAutomaton, q) -> Fraction:
    """Probability the walk from start is absorbed at a v-vertex."""
    matrix, rhs, index = _system(
        g, q, lambda y: 1 if g.winner(y) is OmegaClass.IN_OMEGA_V else 0, 0)
    return bareiss_solve(matrix, rhs)[index[g.start]]


def expected_absorption_time(g: PrefixPairAutomaton, q) -> Fraction:
    """Expected number of steps from start to absorption."""
    matrix, rhs, index = _system(g, q, lambda y: 0, 1)
    return bareiss_solve(matrix, rhs)[index[g.start]]


# -- enumeration over race outcomes --------------------------------------------

def _live_prefixes(g: PrefixPairAutomaton, max_len: int):
    """Yield (text, vertex) for every prefix of length <= max_len not yet absorbed."""
    frontier = [("", g.start)]
    for _ in range(max_len + 1):
        nxt = []
        for text, x in frontier:
            yield text, x
            for a, y in zip("01", g.edges[x]):
                if g.winner(y) is None:
                    nxt.append((text + a, y))
        frontier = nxt


def enumerate_omega(v: Word, w: Word, max_len: int) -> list[tuple[Word, OmegaClass]]:
    """All finished races of length <= max_len with the winning class.

    Every member ends with v or w, so it is a live prefix followed by the
    winning word; only live prefixes up to ``max_len - min(|v|, |w|)`` are
    expanded.
    """
    if max_len > MAX_ENUMERATE_LENGTH:
        raise ValueError(f"length bound {max_len} exceeds {MAX_ENUMERATE_LENGTH}")
    g = build(v, w)
    out = []
    targets = ((v.digits, OmegaClass.IN_OMEGA_V), (w.digits, OmegaClass.IN_OMEGA_W))
    for text, x in _live_prefixes(g, max_len - min(len(v), len(w))):
        for t, cls in targets:
            if len(text) + len(t) > max_len:
                continue
            y = x
            for i, a in enumerate(t):
                y = g.edges[y][a == "1"]
                if g.winner(y) is not None:
                    break
            if i == len(t) - 1 and g.winner(y) is cls:
                out.append((Word(text + t), cls))
    out.sort(key=lambda item: (len(item[0]), item[0].digits))
    return out


def profile_counts(v: Word, w: Word, max_len: int) -> tuple[Counter, Counter]:
    """Counts of finished races by (zeros, ones), for each winner, up to max_len.

    Dynamic programming over the automaton; nothing is materialised.
    """
    if max_len > MAX_PROFILE_LENGTH:
        raise ValueError(f"length bound {max_len} exceeds {MAX_PROFILE_LENGTH}")
    g = build(v, w)
    tables = {OmegaClass.IN_OMEGA_V: Counter(), OmegaClass.IN_OMEGA_W: Counter()}
    live = {g.start: Counter({(0, 0): 1})}
    for _ in range(max_len):
        nxt = {}
        for x, counts in live.items():
            for bit, y in enumerate(g.edges[x]):
                cls = g.winner(y)
                target = tables[cls] if cls is not None else nxt.setdefault(y, Counter())
                for (z, o), c in counts.items():
                    target[(z + 1 - bit, o + bit)] += c
        live = nxt
    return tables[OmegaClass.IN_OMEGA_V], tables[OmegaClass.IN_OMEGA_W]


# -- DOT rendering -------------------------------------------------------------

def _vertex_label(g: PrefixPairAutomaton, x) -> str:
    parts = [x[0].digits or "∅"]
    if g.w is not None:
        parts.append(x[1].digits or "∅")
    return "(" + ",".join(parts) + ")"


def to_dot(g: PrefixPairAutomaton) -> str:
    """DOT text with vertices in breadth-first order (label 0 before 1)."""
    order = g.bfs_order()
    ids = {x: f"n{i}" for i, x in enumerate(order)}
    name = f"{g.v}_{g.w}" if g.w is not None else f"{g.v}"
    lines = [f'digraph "G_{name}" {{', "  rankdir=LR;"]
    for x in order:
        cls = g.winner(x)
        attrs = f'label="{_vertex_label(g, x)}"'
        if cls is not None:
            attrs += f', shape=doublecircle, absorbing="{cls.value}"'
        else:
            attrs += ", shape=circle"
        lines.append(f"  {ids[x]} [{attrs}];")
    for x in order:
        for bit, y in enumerate(g.edges.get(x, ())):
            lines.append(f'  {ids[x]} -> {ids[y]} [label="{bit}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE_RE = re.compile(r'^\s*(n\d+) \[label="([^"]*)"(?:, shape=\w+)?(?:, absorbing="(\w+)")?')
_EDGE_RE = re.compile(r'^\s*(n\d+) -> (n\d+) \[label="([01])"\];')


def parse_dot(text: str) -> tuple[dict, dict, list]:
    """Read back :func:`to_dot` output as (labels, absorbing, edges)."""
    labels, absorbing, edges = {}, {}, []
    for line in text.splitlines():
        if m := _EDGE_RE.match(line):
            edges.append((m.group(1), m.group(2), m.group(3)))
        elif m := _NODE_RE.match(line):
            labels[m.group(1)] = m.group(2)
            if m.group(3):
                absorbing[m.group(1)] = m.group(3)
    return labels, absorbing, edges
