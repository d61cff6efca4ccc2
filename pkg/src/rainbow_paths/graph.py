"""Graphs, orientations, path witnesses, I/O and small generators.

Vertices are dense integers ``0 .. vertex_count - 1``.  DIMACS files use
1-based indices; the translation happens only in :func:`parse_dimacs` and
:func:`write_dimacs`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .budget import tick
from .errors import ParseError


def _normalize_edges(vertex_count, edges):
    out = set()
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``edges`` is stored as a frozenset of ``(u, v)`` with ``u < v``; duplicate
    pairs collapse.  ``adjacency`` and ``masks`` are derived and excluded from
    equality and hashing.
    """

    vertex_count: int
    edges: frozenset = frozenset()
    adjacency: tuple = field(init=False, repr=False, compare=False)
    masks: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = _normalize_edges(self.vertex_count, self.edges)
        nbrs = [[] for _ in range(self.vertex_count)]
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        adjacency = tuple(tuple(sorted(ns)) for ns in nbrs)
        masks = tuple(sum(1 << w for w in ns) for ns in adjacency)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "masks", masks)

    @property
    def n(self):
        return self.vertex_count

    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.vertex_count)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return (self.masks[u] >> v) & 1 == 1

    def degree(self, v):
        return len(self.adjacency[v])

    def induced(self, vertices):
        """Subgraph induced by ``vertices``, relabelled in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vertices), edges)

    def relabel(self, perm):
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def to_dict(self):
        return {"n": self.vertex_count, "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


@dataclass(frozen=True)
class Orientation:
    """An orientation of ``base``: exactly one arc per base edge."""

    base: Graph
    arcs: frozenset
    out_nbrs: tuple = field(init=False, repr=False, compare=False)
    in_nbrs: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        covered = set()
        for u, v in arcs:
            e = (u, v) if u < v else (v, u)
            if e not in self.base.edges:
                raise ValueError(f"arc ({u}, {v}) is not an edge of the base graph")
            if e in covered:
                raise ValueError(f"edge {e} is oriented both ways")
            covered.add(e)
        if len(covered) != len(self.base.edges):
            missing = min(self.base.edges - covered)
            raise ValueError(f"edge {missing} has no orientation")
        outs = [[] for _ in self.base.vertices()]
        ins = [[] for _ in self.base.vertices()]
        for u, v in arcs:
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "out_nbrs", tuple(tuple(sorted(x)) for x in outs))
        object.__setattr__(self, "in_nbrs", tuple(tuple(sorted(x)) for x in ins))

    def out_degree(self, v):
        return len(self.out_nbrs[v])

    def in_degree(self, v):
        return len(self.in_nbrs[v])

    def has_arc(self, u, v):
        return (u, v) in self.arcs

    @classmethod
    def from_bits(cls, g, bits):
        """Orientation indexed by an integer: bit i flips the i-th sorted edge."""
        arcs = []
        for i, (u, v) in enumerate(g.sorted_edges()):
            arcs.append((v, u) if (bits >> i) & 1 else (u, v))
        return cls(g, arcs)


def all_orientations(g):
    for bits in range(1 << g.m):
        yield Orientation.from_bits(g, bits)


@dataclass(frozen=True)
class PathWitness:
    """A path (or closed cycle) given by its vertex sequence."""

    vertices: tuple
    directed: bool = False
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))

    def __len__(self):
        return len(self.vertices)

    def is_valid_in(self, graph_or_orientation):
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        if self.directed:
            ok = graph_or_orientation.has_arc
        else:
            g = getattr(graph_or_orientation, "base", graph_or_orientation)
            ok = g.has_edge
        pairs = list(zip(vs, vs[1:]))
        if self.closed:
            if len(vs) < (2 if self.directed else 3):
                return False
            pairs.append((vs[-1], vs[0]))
        return all(ok(a, b) for a, b in pairs)


# --------------------------------------------------------------------- I/O


def parse_dimacs(text):
    """Parse DIMACS ``.col`` text ("p edge n m", "e u v", "c ...")."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, _m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0 or _m < 0:
                raise ParseError("negative count in header", lineno)
        elif tag == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge' problem line")
    return Graph(n, edges)


def write_dimacs(g):
    lines = [f"p edge {g.vertex_count} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text, vertex_count=None):
    """Parse 0-based ``u v`` lines; ``#`` comments and blank lines are ignored.

    Without ``vertex_count`` the graph spans ``0 .. max index``.
    """
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("negative vertex index", lineno)
        if vertex_count is not None and max(u, v) >= vertex_count:
            raise ParseError(f"vertex out of range 0..{vertex_count - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    n = top + 1 if vertex_count is None else vertex_count
    return Graph(n, edges)


def write_edge_list(g):
    return "".join(f"{u} {v}\n" for u, v in g.sorted_edges())


def parse_orientation(text, g):
    """Arcs as 0-based ``u v`` lines (``u -> v``) over the base graph ``g``."""
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
    try:
        return Orientation(g, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -------------------------------------------------------------- generators


def cycle(k):
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k):
    if k < 1:
        raise ValueError("complete graph needs k >= 1")
    return Graph(k, combinations(range(k), 2))


def path(k):
    if k < 1:
        raise ValueError("path needs k >= 1")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def wheel(k):
    """Rim ``0 .. k-1`` (a k-cycle) plus hub ``k`` joined to every rim vertex."""
    if k < 4:
        raise ValueError("wheel needs k >= 4 rim vertices")
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph(k + 1, rim + [(i, k) for i in range(k)])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def mycielski(base):
    """Mycielskian: shadows ``n + u`` copy the neighbourhood of ``u``, apex ``2n``."""
    n = base.vertex_count
    edges = list(base.edges)
    for u, v in base.edges:
        edges.append((n + u, v))
        edges.append((n + v, u))
    edges += [(n + u, 2 * n) for u in range(n)]
    return Graph(2 * n + 1, edges)


def random_gnp(n, p, seed):
    """Erdős–Rényi G(n, p) drawn from ``random.Random(seed)`` (Mersenne Twister).

    Pairs are visited in lexicographic order and each is kept when the next
    draw is below ``p``; the result is a pure function of ``(n, p, seed)``.
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


_FAMILIES = {
    "cycle": cycle,
    "complete": complete,
    "path": path,
    "wheel": wheel,
    "petersen": petersen,
    "random_gnp": random_gnp,
}


def generate(family, *args, **kwargs):
    """Build a graph by family name, e.g. ``generate("cycle", 7)``.

    ``mycielski`` takes either a Graph or a nested family spec such as
    ``("cycle", 5)``.
    """
    if family == "mycielski":
        (base,) = args
        if not isinstance(base, Graph):
            base = generate(*base) if isinstance(base, (list, tuple)) else generate(base)
        return mycielski(base)
    try:
        fn = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown graph family {family!r}") from None
    return fn(*args, **kwargs)


# ------------------------------------------------------------- structure


def connected_components(g):
    """Vertex sets of the components, each sorted, ordered by least vertex."""
    seen = [False] * g.vertex_count
    comps = []
    for s in g.vertices():
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    comp.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g):
    return g.vertex_count > 0 and len(connected_components(g)) == 1


def find_cycle_of_length(g, k, budget=None):
    """Lexicographically least k-cycle, or ``None``.

    The witness starts at its least vertex and is read in the direction whose
    second vertex is smaller than its last, so each cycle has one canonical
    sequence; the depth-first search visits sequences in lexicographic order.
    """
    if k < 3:
        raise ValueError("cycle length must be at least 3")
    masks = g.masks
    n = g.vertex_count
    for s in range(n - k + 1):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        # distance back to s inside the allowed region prunes dead branches
        dist = _bfs_distances(masks, s, allowed | (1 << s))
        found = _cycle_dfs(masks, s, k, [s], 1 << s, allowed, dist, budget)
        if found is not None:
            return PathWitness(tuple(found), closed=True)
    return None


def _bfs_distances(masks, s, region):
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            m = masks[u] & region
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    return dist


def _cycle_dfs(masks, s, k, seq, used, allowed, dist, budget):
    tick(budget)
    u = seq[-1]
    depth = len(seq)
    if depth == k:
        if (masks[u] >> s) & 1 and seq[1] < seq[-1]:
            return list(seq)
        return None
    remaining = k - depth
    cand = masks[u] & allowed & ~used
    while cand:
        low = cand & -cand
        w = low.bit_length() - 1
        cand ^= low
        d = dist.get(w)
        if d is None or d > remaining:
            continue
        seq.append(w)
        found = _cycle_dfs(masks, s, k, seq, used | low, allowed, dist, budget)
        seq.pop()
        if found is not None:
            return found
    return None
