"""Exact colouring search: chromatic number, circular chromatic number,
enumeration of proper colourings, and circular colourings whose successor
digraph has a walk of full length from every vertex.

All searches share one backtracking engine over value bitmasks with forward
checking.  A proper k-colouring is the same thing as a (k, 1)-colouring, so
the engine only knows about the circular distance constraint.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .budget import tick
from .errors import HypothesisError, SearchExhausted
from .graph import connected_components, is_connected


@dataclass(frozen=True)
class KColoring:
    """Colours ``colors[v]`` in ``1..k``; properness is checked against a graph."""

    k: int
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 0:
            raise ValueError("k must be non-negative")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"colour {c} of vertex {v} outside 1..{self.k}")

    def __getitem__(self, v):
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def violating_edge(self, g):
        if len(self.colors) != g.vertex_count:
            raise ValueError("colouring length does not match the graph")
        for u, v in g.sorted_edges():
            if self.colors[u] == self.colors[v]:
                return (u, v)
        return None

    def is_proper(self, g):
        return len(self.colors) == g.vertex_count and self.violating_edge(g) is None

    def permuted(self, mapping):
        """Apply a bijection of colours given as ``{old: new}`` or a 1-based list."""
        if not isinstance(mapping, dict):
            mapping = {i + 1: c for i, c in enumerate(mapping)}
        if sorted(mapping) != list(range(1, self.k + 1)) or sorted(mapping.values()) != list(
            range(1, self.k + 1)
        ):
            raise ValueError("mapping is not a permutation of the colours")
        return KColoring(self.k, [mapping[c] for c in self.colors])

    def recolored(self, changes):
        cs = list(self.colors)
        for v, c in changes.items():
            cs[v] = c
        return KColoring(self.k, cs)

    def to_dict(self):
        return {"k": self.k, "colors": list(self.colors)}


@dataclass(frozen=True)
class CircularColoring:
    """Values ``values[v]`` in ``1..n`` with ``d <= |c(u) - c(v)| <= n - d`` on edges."""

    n: int
    d: int
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))

    def __getitem__(self, v):
        return self.values[v]

    def __len__(self):
        return len(self.values)

    def rotated(self, s=1):
        """Add ``s`` to every value cyclically; preserves validity and successor arcs."""
        n = self.n
        return CircularColoring(n, self.d, [(x - 1 + s) % n + 1 for x in self.values])

    def to_kcoloring(self):
        """The colouring ``u -> ceil(c(u) / d)`` with ``ceil(n / d)`` colours."""
        d = self.d
        k = -(-self.n // d)
        return KColoring(k, [-(-x // d) for x in self.values])

    def to_dict(self):
        return {"n": self.n, "d": self.d, "values": list(self.values)}


@dataclass(frozen=True, order=False)
class CircularNumber:
    """Reduced fraction ``n/d``; ``1/1`` is the convention for edgeless graphs."""

    n: int
    d: int

    def __post_init__(self):
        if gcd(self.n, self.d) != 1:
            raise ValueError(f"{self.n}/{self.d} is not reduced")
        if not (self.n >= 2 * self.d or (self.n, self.d) == (1, 1)):
            raise ValueError(f"{self.n}/{self.d} violates n >= 2d")

    @property
    def value(self):
        return Fraction(self.n, self.d)

    def __str__(self):
        return f"{self.n}/{self.d}"


def is_valid_circular(g, c):
    """True iff ``c`` is an (n, d)-colouring of ``g``."""
    n, d = c.n, c.d
    if len(c.values) != g.vertex_count:
        return False
    if (n, d) == (1, 1):
        return g.m == 0 and all(x == 1 for x in c.values)
    if d < 1 or n < 2 * d or gcd(n, d) != 1:
        return False
    if any(not 1 <= x <= n for x in c.values):
        return False
    for u, v in g.edges:
        diff = abs(c.values[u] - c.values[v])
        if not d <= diff <= n - d:
            return False
    return True


# ------------------------------------------------------------------ engine


def _compat_masks(n, d):
    """``compat[a]`` = bitmask of values b (0-based) allowed next to a."""
    out = []
    for a in range(n):
        m = 0
        for b in range(n):
            if d <= abs(a - b) <= n - d:
                m |= 1 << b
        out.append(m)
    return out


def _search_order(g):
    """Static vertex order: per component, BFS from a max-degree vertex,
    expanding higher-degree neighbours first."""
    order = []
    seen = [False] * g.vertex_count
    for comp in connected_components(g):
        root = max(comp, key=lambda v: (g.degree(v), -v))
        seen[root] = True
        queue = [root]
        i = 0
        while i < len(queue):
            u = queue[i]
            i += 1
            for w in sorted(g.adjacency[u], key=lambda x: (-g.degree(x), x)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        order += queue
    return order


def _iter_assignments(g, n_values, compat, order, domains, budget=None, completed=None, accept=None):
    """Yield every assignment (list of 0-based values) consistent with ``compat``.

    ``order`` is the static assignment order and ``domains`` the initial value
    bitmasks.  ``completed[i]`` lists vertices whose closed neighbourhood is
    fully assigned once position ``i`` is; ``accept(vertex, values)`` may then
    reject the partial assignment.
    """
    nv = g.vertex_count
    masks = g.adjacency
    values = [-1] * nv
    pos_of = [0] * nv
    for i, v in enumerate(order):
        pos_of[v] = i

    def rec(i, doms):
        if i == nv:
            yield list(values)
            return
        tick(budget)
        v = order[i]
        dom = doms[v]
        while dom:
            low = dom & -dom
            a = low.bit_length() - 1
            dom ^= low
            ok = True
            new = list(doms)
            ca = compat[a]
            for w in masks[v]:
                if pos_of[w] > i:
                    nd = new[w] & ca
                    if not nd:
                        ok = False
                        break
                    new[w] = nd
            if not ok:
                continue
            values[v] = a
            if completed is not None and accept is not None:
                if not all(accept(x, values) for x in completed[i]):
                    values[v] = -1
                    continue
            yield from rec(i + 1, new)
            values[v] = -1

    if nv == 0:
        yield []
        return
    yield from rec(0, list(domains))


def _proper_assignments(g, k, order=None, budget=None):
    full = (1 << k) - 1 if k > 0 else 0
    if order is None:
        order = list(g.vertices())
    return _iter_assignments(g, k, _compat_masks(k, 1), order, [full] * g.vertex_count, budget)


def enumerate_proper_colorings(g, k):
    """Every proper k-colouring exactly once, in lexicographic order of colour vectors."""
    for vals in _proper_assignments(g, k):
        yield KColoring(k, [a + 1 for a in vals])


def _greedy_clique_size(g):
    best = 1 if g.vertex_count else 0
    for s in g.vertices():
        clique = [s]
        cand = g.masks[s]
        for w in sorted(g.adjacency[s], key=lambda x: -g.degree(x)):
            if (cand >> w) & 1:
                clique.append(w)
                cand &= g.masks[w]
        best = max(best, len(clique))
    return best


def _k_colorable(g, k, budget=None):
    """A proper k-colouring as a colour list, or None.  Colours are introduced in
    order (a vertex may only open colour ``max used + 1``), which removes the
    k! relabelling symmetry."""
    nv = g.vertex_count
    if nv == 0:
        return []
    if k <= 0:
        return None
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    adj = g.adjacency
    colors = [0] * nv

    def rec(i, used):
        if i == nv:
            return True
        tick(budget)
        v = order[i]
        forbidden = 0
        for w in adj[v]:
            if pos[w] < i:
                forbidden |= 1 << colors[w]
        for c in range(1, min(used + 1, k) + 1):
            if not (forbidden >> c) & 1:
                colors[v] = c
                if rec(i + 1, max(used, c)):
                    return True
        colors[v] = 0
        return False

    return list(colors) if rec(0, 0) else None


@lru_cache(maxsize=4096)
def _chromatic(g):
    nv = g.vertex_count
    if nv == 0:
        return 0, ()
    lo = _greedy_clique_size(g)
    k = lo
    while True:
        sol = _k_colorable(g, k)
        if sol is not None:
            return k, tuple(sol)
        k += 1


def chromatic_number(g):
    """Exact chromatic number (0 for the empty graph)."""
    return _chromatic(g)[0]


def chromatic_witness(g):
    """A proper colouring with exactly ``chromatic_number(g)`` colours."""
    k, cols = _chromatic(g)
    return KColoring(k, cols)


def _circular_candidates(chi, nv):
    """Reduced n/d with chi - 1 < n/d <= chi and n <= nv, ascending."""
    out = []
    for n in range(2, max(nv, chi) + 1):
        for d in range(1, n // 2 + 1):
            if gcd(n, d) == 1 and chi - 1 < Fraction(n, d) <= chi:
                out.append((Fraction(n, d), n, d))
    out.sort()
    return [(n, d) for _, n, d in out]


def _circular_domains(g, n):
    full = (1 << n) - 1
    doms = [full] * g.vertex_count
    # rotating all values of one component keeps validity, so pin one vertex each
    for comp in connected_components(g):
        root = max(comp, key=lambda v: (g.degree(v), -v))
        doms[root] = 1
    return doms


def circular_colorings(g, n, d, budget=None, pinned=True):
    """Iterate (n, d)-colourings of ``g``.

    With ``pinned`` one vertex per component is fixed to value 1; every
    colouring is then a rotation of exactly one yielded colouring per
    component.
    """
    compat = _compat_masks(n, d)
    order = _search_order(g)
    doms = _circular_domains(g, n) if pinned else [(1 << n) - 1] * g.vertex_count
    for vals in _iter_assignments(g, n, compat, order, doms, budget):
        yield CircularColoring(n, d, [a + 1 for a in vals])


@lru_cache(maxsize=4096)
def _circular(g):
    nv = g.vertex_count
    chi, cols = _chromatic(g)
    if chi <= 1:
        return (1, 1), tuple([1] * nv)
    for n, d in _circular_candidates(chi, nv):
        c = next(circular_colorings(g, n, d), None)
        if c is not None:
            return (n, d), c.values
    raise AssertionError("chi/1 is always feasible")  # pragma: no cover


def circular_chromatic_number(g):
    """Exact circular chromatic number as a reduced :class:`CircularNumber`."""
    if g.vertex_count == 0:
        raise ValueError("circular chromatic number of the empty graph is undefined")
    (n, d), _ = _circular(g)
    return CircularNumber(n, d)


def circular_witness(g):
    (n, d), vals = _circular(g)
    return CircularColoring(n, d, vals)


# ------------------------------------------------------ full-walk colourings


def _successor_masks(g, values, n, step):
    out = []
    for u in g.vertices():
        target = (values[u] - 1 + step) % n + 1
        m = 0
        for w in g.adjacency[u]:
            if values[w] == target:
                m |= 1 << w
        out.append(m)
    return out


def _walk_level(succ, depth):
    """Bitmask of vertices beginning a walk of ``depth`` vertices."""
    level = (1 << len(succ)) - 1
    for _ in range(depth - 1):
        level = sum(1 << u for u, m in enumerate(succ) if m & level)
    return level


def find_theorem5_coloring(g, n, d, budget=None, check_hypothesis=True):
    """An (n, d)-colouring from whose every vertex starts a walk ``u_1 .. u_n``
    with ``c(u_{i+1}) = c(u_i) + d (mod n)``.

    Such a colouring exists whenever ``n/d`` is the circular chromatic number
    of the connected graph ``g``; it is found by exhaustive search.  Because
    ``gcd(n, d) = 1`` the n values along such a walk are distinct, so the walk
    is a path.  Raises :class:`SearchExhausted` if no colouring qualifies.
    """
    if not is_connected(g):
        raise HypothesisError("graph is not connected")
    if check_hypothesis:
        cn = circular_chromatic_number(g)
        if (cn.n, cn.d) != (n, d):
            raise HypothesisError(f"circular chromatic number is {cn}, not {n}/{d}")
    nv = g.vertex_count
    if (n, d) == (1, 1):
        if g.m:
            raise HypothesisError("1/1 only applies to edgeless graphs")
        return CircularColoring(1, 1, [1] * nv)

    compat = _compat_masks(n, d)
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    completed = [[] for _ in range(nv)]
    for v in g.vertices():
        last = max([pos[v]] + [pos[w] for w in g.adjacency[v]])
        completed[last].append(v)
    adj = g.adjacency

    def has_successor(u, values):
        # 0-based values during search
        target = (values[u] + d) % n
        return any(values[w] == target for w in adj[u])

    doms = _circular_domains(g, n)
    for vals in _iter_assignments(g, n, compat, order, doms, budget, completed, has_successor):
        values = [a + 1 for a in vals]
        succ = _successor_masks(g, values, n, d)
        if _walk_level(succ, n) == (1 << nv) - 1:
            return CircularColoring(n, d, values)
    raise SearchExhausted(f"no ({n},{d})-colouring with full walks from every vertex")
