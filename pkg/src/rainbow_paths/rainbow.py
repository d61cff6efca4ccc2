"""Successor digraphs, shift recolourings and rainbow-path verification.

For a colouring with values modulo ``modulus`` the successor digraph has an
arc ``u -> v`` for each edge ``uv`` with ``col(v) = col(u) + step``.  With a
k-colouring (step 1, modulus k) this is the digraph used to shift colours
along reachable sets; with an (n, d)-colouring (step d, modulus n) its walks
are the paths of full length required of the circular colourings.

Rainbow verification is a dynamic program over (vertex, colour subset)
states.  A walk whose vertices carry pairwise distinct colours cannot repeat
a vertex, so every state reached is a genuine rainbow path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import CircularColoring, KColoring
from .errors import VerificationError
from .graph import PathWitness

DEFAULT_MAX_COLORS = 10


@dataclass(frozen=True)
class SuccessorDigraph:
    base: object
    step: int
    modulus: int
    colors: tuple
    arcs: frozenset = field(init=False, repr=False)
    succ: tuple = field(init=False, repr=False, compare=False)
    pred: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g, step, mod, col = self.base, self.step, self.modulus, self.colors
        succ = [[] for _ in g.vertices()]
        pred = [[] for _ in g.vertices()]
        arcs = set()
        for u, v in g.sorted_edges():
            for a, b in ((u, v), (v, u)):
                if (col[b] - col[a] - step) % mod == 0:
                    arcs.add((a, b))
                    succ[a].append(b)
                    pred[b].append(a)
        object.__setattr__(self, "arcs", frozenset(arcs))
        object.__setattr__(self, "succ", tuple(tuple(sorted(s)) for s in succ))
        object.__setattr__(self, "pred", tuple(tuple(sorted(p)) for p in pred))

    @property
    def vertex_count(self):
        return self.base.vertex_count


def build_successor_digraph(g, coloring):
    if isinstance(coloring, KColoring):
        return SuccessorDigraph(g, 1, coloring.k, coloring.colors)
    if isinstance(coloring, CircularColoring):
        return SuccessorDigraph(g, coloring.d, coloring.n, coloring.values)
    raise TypeError(f"unsupported colouring type {type(coloring).__name__}")


def directed_cycle(dg):
    """Some directed cycle of ``dg`` as a closed PathWitness, or None."""
    nv = dg.vertex_count
    state = [0] * nv  # 0 unvisited, 1 on stack, 2 done
    for root in range(nv):
        if state[root]:
            continue
        stack = [(root, iter(dg.succ[root]))]
        trail = [root]
        state[root] = 1
        while stack:
            u, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                trail.pop()
                state[u] = 2
            elif state[nxt] == 1:
                cyc = trail[trail.index(nxt):]
                return PathWitness(cyc, directed=True, closed=True)
            elif state[nxt] == 0:
                state[nxt] = 1
                stack.append((nxt, iter(dg.succ[nxt])))
                trail.append(nxt)
    return None


def is_acyclic(dg):
    return directed_cycle(dg) is None


def _reach(adj, xs):
    seen = set(xs)
    stack = list(seen)
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def forward_set(dg, xs):
    """Vertices reachable from ``xs`` by directed paths, ``xs`` included."""
    return _reach(dg.succ, xs)


def backward_set(dg, xs):
    """Vertices with a directed path into ``xs``, ``xs`` included."""
    return _reach(dg.pred, xs)


def _shift(g, f, xs, delta):
    dg = build_successor_digraph(g, f)
    region = forward_set(dg, xs) if delta > 0 else backward_set(dg, xs)
    k = f.k
    cols = [((c - 1 + delta) % k) + 1 if v in region else c for v, c in enumerate(f.colors)]
    out = KColoring(k, cols)
    bad = out.violating_edge(g)
    if bad is not None:
        raise VerificationError(f"shifted colouring is improper on edge {bad}")
    return out


def shift_up(g, f, xs):
    """Add one (mod k) to the colours of everything reachable from ``xs``."""
    return _shift(g, f, xs, +1)


def shift_down(g, f, xs):
    """Subtract one (mod k) from the colours of everything reaching ``xs``."""
    return _shift(g, f, xs, -1)


def walk_depth_ok(dg, depth):
    """Vertices that begin a directed walk of ``depth`` vertices."""
    nv = dg.vertex_count
    level = set(range(nv))
    for _ in range(max(depth - 1, 0)):
        level = {u for u in range(nv) if any(w in level for w in dg.succ[u])}
    return frozenset(level)


# -------------------------------------------------------------- verifiers


@dataclass(frozen=True)
class RainbowReport:
    """Per-vertex verdicts for a k-colouring.

    ``witnesses[v]`` exists whenever ``lies_on[v]``; it starts at ``v`` when
    ``begins[v]`` holds.  ``longest_from[v]`` is the order of a longest
    rainbow path starting at ``v``.
    """

    k: int
    lies_on: tuple
    begins: tuple
    witnesses: dict
    longest_from: tuple

    @property
    def all_lie_on(self):
        return all(self.lies_on)

    @property
    def all_begin(self):
        return all(self.begins)

    def to_dict(self):
        return {
            "lies_on": list(self.lies_on),
            "begins": list(self.begins),
            "witnesses": {str(v): list(w.vertices) for v, w in sorted(self.witnesses.items())},
        }


def _rainbow_tables(adj, colors):
    """``ends[v]`` maps each colour set of a rainbow path ending at ``v`` to the
    predecessor state, ``None`` for the one-vertex path."""
    nv = len(colors)
    bit = [1 << (c - 1) for c in colors]
    ends = [dict() for _ in range(nv)]
    layer = []
    for v in range(nv):
        ends[v][bit[v]] = None
        layer.append((v, bit[v]))
    while layer:
        nxt = []
        for v, m in layer:
            for w in adj[v]:
                b = bit[w]
                if m & b:
                    continue
                nm = m | b
                tw = ends[w]
                if nm not in tw:
                    tw[nm] = (v, m)
                    nxt.append((w, nm))
        layer = nxt
    return ends


def _path_to(ends, v, mask):
    """Vertices of the stored rainbow path ending at ``v`` with colour set ``mask``."""
    out = []
    state = (v, mask)
    while state is not None:
        out.append(state[0])
        state = ends[state[0]][state[1]]
    out.reverse()
    return out


def _check_k(k, max_colors):
    if k > max_colors:
        raise ValueError(f"k = {k} exceeds the verifier ceiling of {max_colors} colours")


def verify_rainbow(g, f, max_colors=DEFAULT_MAX_COLORS):
    """Exact lies-on / begins verdicts for every vertex under ``f``."""
    k = f.k
    _check_k(k, max_colors)
    full = (1 << k) - 1
    colors = f.colors
    ends = _rainbow_tables(g.adjacency, colors)
    lies, begins, longest, wit = [], [], [], {}
    for v in g.vertices():
        table = ends[v]
        longest.append(max(bin(m).count("1") for m in table))
        # paths are undirected: one ending at v, reversed, begins at v
        if full in table:
            begins.append(True)
            lies.append(True)
            wit[v] = PathWitness(_path_to(ends, v, full)[::-1])
            continue
        begins.append(False)
        bv = 1 << (colors[v] - 1)
        # a path into v with colours S and one into v with colours T meet only
        # in v when S & T == {col(v)}, so together they form a path through v
        hit = None
        for s in table:
            t = (full ^ s) | bv
            if t in table:
                hit = s, t
                break
        if hit is None:
            lies.append(False)
            continue
        lies.append(True)
        head = _path_to(ends, v, hit[0])
        tail = _path_to(ends, v, hit[1])
        wit[v] = PathWitness(head + tail[::-1][1:])
    return RainbowReport(k, tuple(lies), tuple(begins), wit, tuple(longest))


def verify_directed_rainbow(d, f, max_colors=DEFAULT_MAX_COLORS):
    """``(found, witness)`` for a directed path of order k with all k colours."""
    k = f.k
    _check_k(k, max_colors)
    full = (1 << k) - 1
    ends = _rainbow_tables(d.out_nbrs, f.colors)
    for v in d.base.vertices():
        if full in ends[v]:
            return True, PathWitness(_path_to(ends, v, full), directed=True)
    return False, None


def is_rainbow_path(g, f, vertices, directed=None):
    """Independent check that ``vertices`` is a path with distinct colours."""
    w = PathWitness(vertices, directed=directed is not None)
    target = directed if directed is not None else g
    cols = [f.colors[v] for v in vertices]
    return w.is_valid_in(target) and len(set(cols)) == len(cols)
