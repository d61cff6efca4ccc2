"""Shared brute-force oracles and hypothesis strategies.

Nothing here calls into the search code it is used to check.
"""

import sys
from itertools import combinations, permutations, product
from math import comb

from hypothesis import strategies as st

from rainbow_paths.coloring import KColoring
from rainbow_paths.graph import Graph


def brute_colorable(g, k):
    n = g.vertex_count
    return any(
        all(cols[u] != cols[v] for u, v in g.edges) for cols in product(range(k), repeat=n)
    )


def brute_chromatic(g):
    k = 0
    while not brute_colorable(g, k):
        k += 1
    return k


def brute_circular_feasible(g, n, d):
    nv = g.vertex_count
    for rest in product(range(1, n + 1), repeat=nv - 1):
        vals = (1,) + rest
        if all(d <= abs(vals[u] - vals[v]) <= n - d for u, v in g.edges):
            return True
    return False


def labeled_connected_count(n):
    """Labelled connected graphs on n vertices via the standard recurrence."""
    c = {1: 1}
    for m in range(2, n + 1):
        total = 2 ** comb(m, 2)
        total -= sum(comb(m - 1, j - 1) * c[j] * 2 ** comb(m - j, 2) for j in range(1, m))
        c[m] = total
    return c[n]


def brute_cycles(g, k):
    """Canonical sequences of all k-cycles by trying every ordered k-tuple."""
    out = set()
    for sub in combinations(g.vertices(), k):
        s = sub[0]
        for rest in permutations(sub[1:]):
            seq = (s,) + rest
            if seq[1] < seq[-1] and all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                out.add(seq)
    return out


def simple_paths(g, order):
    out = []

    def ext(seq):
        if len(seq) == order:
            out.append(tuple(seq))
            return
        for w in g.adjacency[seq[-1]]:
            if w not in seq:
                ext(seq + [w])

    for v in g.vertices():
        ext([v])
    return out


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree guarantees connectivity
        for v in range(1, n):
            chosen.append((draw(st.integers(0, v - 1)), v))
    return Graph(n, chosen)


@st.composite
def colored_graphs(draw, min_n=1, max_n=7, connected=False):
    """A graph with a proper colouring drawn vertex by vertex; k may exceed
    the number of colours actually used."""
    g = draw(graphs(min_n, max_n, connected))
    max_deg = max((g.degree(v) for v in g.vertices()), default=0)
    k = draw(st.integers(1, max_deg + 1))
    cols = [0] * g.vertex_count
    for v in g.vertices():
        taken = {cols[w] for w in g.adjacency[v]}
        free = [c for c in range(1, k + 1) if c not in taken]
        if not free:
            k += 1
            free = [k]
        cols[v] = draw(st.sampled_from(free))
    return g, KColoring(k, cols)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
