"""Optimal colourings with full rainbow paths.

Each construction returns the colouring together with the evidence its
argument produces, and re-checks its conclusion with the oracle verifiers in
:mod:`rainbow_paths.rainbow` before returning.  A failed re-check raises
:class:`VerificationError`; it means a bug, not a property of the input.

``theorem1``  every vertex lies on a full rainbow path.
``theorem2``  a guaranteed fraction of vertices begins one, the rest begin
              a rainbow path one vertex shorter (needs chi_c < chi).
``theorem3``  every vertex begins a full rainbow path, for graphs with a
              cycle whose length equals the chromatic number.
``theorem4``  an orientation of a 3-chromatic graph has a directed path
              x -> y -> z with three colours.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .budget import tick
from .coloring import (
    CircularColoring,
    KColoring,
    chromatic_number,
    chromatic_witness,
    circular_chromatic_number,
    enumerate_proper_colorings,
    find_theorem5_coloring,
)
from .errors import HypothesisError, SearchExhausted, VerificationError
from .graph import PathWitness, find_cycle_of_length, is_connected
from .rainbow import (
    backward_set,
    build_successor_digraph,
    directed_cycle,
    forward_set,
    shift_down,
    shift_up,
    verify_directed_rainbow,
    verify_rainbow,
    walk_depth_ok,
)


def _require_connected(g):
    if not is_connected(g):
        raise HypothesisError("graph is not connected")


def _require_proper(g, f, what):
    bad = f.violating_edge(g)
    if bad is not None:
        raise VerificationError(f"{what} is improper on edge {bad}")


# ---------------------------------------------------------------- lies on


@dataclass(frozen=True)
class Theorem1Trace:
    """Evidence of the class-by-class repair.

    ``color_classes[i - 1]`` is the class V_i of vertices with circular value
    ``((i - 1) d mod n) + 1``.  ``chain[i]`` is the colouring after classes
    ``1..i`` are handled (``chain[0]`` is the rounded circular colouring) and
    ``recolored_sets[i]`` the vertices of V_i moved to colour k at step i.
    """

    base_circular: CircularColoring
    initial_f: KColoring
    color_classes: tuple
    recolored_sets: dict
    chain: tuple
    final_f: KColoring

    def to_dict(self):
        return {
            "circular": self.base_circular.to_dict(),
            "initial": list(self.initial_f.colors),
            "classes": [sorted(c) for c in self.color_classes],
            "recolored": {str(i): sorted(x) for i, x in sorted(self.recolored_sets.items())},
        }


class Theorem1Result(NamedTuple):
    coloring: KColoring
    trace: Theorem1Trace
    report: object


def _residue_ok(value, n, d):
    # value mod d in {1, ..., n mod d}
    return 1 <= value % d <= n % d


def theorem1(g, budget=None):
    """A chi(g)-colouring in which every vertex lies on a full rainbow path."""
    _require_connected(g)
    k = chromatic_number(g)
    cn = circular_chromatic_number(g)
    n, d = cn.n, cn.d
    c = find_theorem5_coloring(g, n, d, budget=budget, check_hypothesis=False)
    f = c.to_kcoloring()
    if f.k != k:
        raise VerificationError(f"rounded circular colouring uses {f.k} colours, expected {k}")
    _require_proper(g, f, "rounded circular colouring")
    classes = tuple(
        frozenset(u for u in g.vertices() if c[u] == ((i - 1) * d) % n + 1) for i in range(1, n + 1)
    )

    chain = [f]
    recolored = {}
    if d == 1:
        # chi_c = chi: the circular colouring is already a k-colouring whose
        # full-length successor walks start everywhere
        chain *= n + 1
    else:
        # classes 1..k have value (i-1)d + 1, residue 1, hence are covered
        chain *= k + 1
        cur = f
        adj = g.adjacency
        for i in range(k, n):
            tick(budget)
            cls = classes[i]
            if _residue_ok(i * d % n + 1, n, d):
                x = frozenset()
            else:
                rep = verify_rainbow(g, cur)
                x = frozenset(u for u in cls if not rep.lies_on[u])
                for u in x:
                    if any(cur[w] == k for w in adj[u]):
                        raise VerificationError(f"vertex {u} to recolour has a neighbour of colour {k}")
                if x:
                    cur = cur.recolored({u: k for u in x})
                    _require_proper(g, cur, f"repair step {i + 1}")
            recolored[i + 1] = x
            chain.append(cur)

    final = chain[-1]
    report = verify_rainbow(g, final)
    if not report.all_lie_on:
        bad = [v for v in g.vertices() if not report.lies_on[v]]
        raise VerificationError(f"vertices {bad} lie on no full rainbow path")
    trace = Theorem1Trace(c, f, classes, recolored, tuple(chain), final)
    return Theorem1Result(final, trace, report)


# ------------------------------------------------------ fraction that begins


@dataclass(frozen=True)
class Theorem2Result:
    shifted_circular: CircularColoring
    f: KColoring
    strong_set: frozenset
    weak_set: frozenset
    bound: Fraction
    shift: int
    report: object = field(repr=False)

    def to_dict(self):
        return {
            "circular": self.shifted_circular.to_dict(),
            "shift": self.shift,
            "strong": sorted(self.strong_set),
            "weak": sorted(self.weak_set),
            "bound": str(self.bound),
        }


def strong_fraction_bound(k, chi_c):
    """``k (chi_c + 1 - k) / chi_c`` as an exact fraction."""
    chi_c = Fraction(chi_c)
    return Fraction(k) * (chi_c + 1 - k) / chi_c


def theorem2(g, budget=None):
    """Colouring where at least ``bound * |V|`` vertices begin full rainbow paths
    and all others begin rainbow paths of order k - 1."""
    _require_connected(g)
    k = chromatic_number(g)
    cn = circular_chromatic_number(g)
    if cn.value == k:
        raise HypothesisError("chi_c equals chi: theorem2 inapplicable, use theorem1")
    n, d = cn.n, cn.d
    c = find_theorem5_coloring(g, n, d, budget=budget, check_hypothesis=False)

    def strong_count(s):
        return sum(_residue_ok((x - 1 + s) % n + 1, n, d) for x in c.values)

    # averaging over the n rotations guarantees the best one reaches |I|/n
    shift = max(range(n), key=lambda s: (strong_count(s), -s))
    c2 = c.rotated(shift)
    f = c2.to_kcoloring()
    _require_proper(g, f, "rounded circular colouring")
    strong = frozenset(u for u in g.vertices() if _residue_ok(c2[u], n, d))
    weak = frozenset(g.vertices()) - strong
    bound = strong_fraction_bound(k, cn.value)
    if len(strong) < bound * g.vertex_count:
        raise VerificationError(f"{len(strong)} strong vertices, below {bound} * {g.vertex_count}")
    report = verify_rainbow(g, f)
    for u in strong:
        if not report.begins[u]:
            raise VerificationError(f"strong vertex {u} begins no full rainbow path")
    for u in weak:
        if report.longest_from[u] < k - 1:
            raise VerificationError(f"weak vertex {u} begins no rainbow path of order {k - 1}")
    return Theorem2Result(c2, f, strong, weak, bound, shift, report)


# ------------------------------------------------------- begins everywhere


class Theorem3Result(NamedTuple):
    coloring: KColoring
    report: object
    cycle: PathWitness
    path_lengths: tuple
    shifts: int
    stage: str


def _longest_cycle_subpath(cyc, f):
    """Longest run of consecutive cycle vertices with distinct colours.

    Returns ``(path, before)`` where ``before`` is the cycle neighbour of
    ``path[0]`` that precedes it in the run's direction.
    """
    k = len(cyc)
    best = None
    for s in range(k):
        for step in (1, -1):
            seen = set()
            run = []
            for t in range(k):
                v = cyc[(s + step * t) % k]
                if f[v] in seen:
                    break
                seen.add(f[v])
                run.append(v)
            if best is None or len(run) > len(best[0]):
                best = (run, cyc[(s - step) % k])
    return best


def _canonical_permutation(f, path):
    """Bijection of colours sending the path's colours to 1..len(path) in order."""
    mapping = {f[v]: i + 1 for i, v in enumerate(path)}
    rest = [c for c in range(1, f.k + 1) if c not in mapping]
    for i, c in enumerate(rest):
        mapping[c] = len(path) + 1 + i
    return mapping


def _cycle_reaching_set(dg):
    """Vertices from which a directed cycle can be reached (infinite walks)."""
    alive = set(range(dg.vertex_count))
    changed = True
    while changed:
        dead = {u for u in alive if not any(w in alive for w in dg.succ[u])}
        changed = bool(dead)
        alive -= dead
    return frozenset(alive)


def _validate_cycle(g, cycle, k):
    if not isinstance(cycle, PathWitness):
        cycle = PathWitness(tuple(cycle), closed=True)
    if len(cycle) != k or not PathWitness(cycle.vertices, closed=True).is_valid_in(g):
        raise HypothesisError(f"{list(cycle.vertices)} is not a cycle of length {k}")
    return PathWitness(cycle.vertices, closed=True)


def theorem3(g, cycle=None, budget=None):
    """A chi(g)-colouring from whose every vertex a full rainbow path starts.

    Requires a cycle of length ``k = chi(g)``; it is searched for when not
    given.  Phase one grows a rainbow stretch along that cycle with the
    reachability shifts until the successor digraph has a directed cycle.
    Phase two then repeatedly shifts up every vertex that cannot reach a
    directed cycle; that set is closed under successors, so the shift stays
    proper, keeps all current cycle-reaching vertices, and within at most
    k - 2 shifts creates an arc from it into the cycle-reaching set.
    """
    _require_connected(g)
    k = chromatic_number(g)
    if k < 3:
        raise HypothesisError(f"chromatic number {k} < 3: no cycle of that length exists")
    if cycle is None:
        cycle = find_cycle_of_length(g, k, budget)
        if cycle is None:
            raise HypothesisError(f"no cycle of length chi = {k}")
    else:
        cycle = _validate_cycle(g, cycle, k)
    cyc = list(cycle.vertices)

    f = chromatic_witness(g)
    lengths = []
    for _ in range(k + 1):
        tick(budget)
        path, before = _longest_cycle_subpath(cyc, f)
        lengths.append(len(path))
        f = f.permuted(_canonical_permutation(f, path))
        dg = build_successor_digraph(g, f)
        if directed_cycle(dg) is not None:
            break
        if len(path) == k:
            raise VerificationError("rainbow cycle after relabelling is not a directed cycle")
        if f[before] > len(path):
            raise VerificationError("rainbow stretch along the cycle is not maximal")
        j = path[f[before] - 1]  # the path vertex sharing the colour of `before`
        if before not in forward_set(dg, [j]):
            f = shift_up(g, f, [j])
        elif before not in backward_set(dg, [j]):
            f = shift_down(g, f, [j])
        else:
            raise VerificationError("acyclic successor digraph reaches both ways")
        if len({f[v] for v in [before] + path}) != len(path) + 1:
            raise VerificationError("shift did not extend the rainbow stretch")
    else:
        raise VerificationError("stretch along the cycle did not reach a directed cycle")

    stage = "shift"
    shifts = 0
    try:
        for _ in range(g.vertex_count * k + 1):
            tick(budget)
            dg = build_successor_digraph(g, f)
            alive = _cycle_reaching_set(dg)
            if len(alive) == g.vertex_count:
                break
            f = shift_up(g, f, frozenset(g.vertices()) - alive)
            shifts += 1
            if not alive <= _cycle_reaching_set(build_successor_digraph(g, f)):
                raise VerificationError("shift lost a cycle-reaching vertex")
        else:
            raise VerificationError("shift phase made no progress")
    except VerificationError:
        stage = "exhaustive"
        f = _exhaustive_begins(g, k, budget)

    _require_proper(g, f, "final colouring")
    if stage == "shift" and walk_depth_ok(build_successor_digraph(g, f), k) != frozenset(g.vertices()):
        raise VerificationError("successor walks of length k do not start everywhere")
    report = verify_rainbow(g, f)
    if not report.all_begin:
        bad = [v for v in g.vertices() if not report.begins[v]]
        raise VerificationError(f"vertices {bad} begin no full rainbow path")
    return Theorem3Result(f, report, cycle, tuple(lengths), shifts, stage)


def _exhaustive_begins(g, k, budget=None):
    for f in enumerate_proper_colorings(g, k):
        tick(budget)
        if verify_rainbow(g, f).all_begin:
            return f
    raise SearchExhausted("no colouring with full rainbow paths from every vertex")


# ------------------------------------------------------------ orientations


@dataclass(frozen=True)
class Theorem4Decomposition:
    sources: frozenset
    sinks: frozenset
    middle: frozenset
    case_tag: str

    def to_dict(self):
        return {
            "sources": sorted(self.sources),
            "sinks": sorted(self.sinks),
            "middle": sorted(self.middle),
            "case": self.case_tag,
        }


class Theorem4Result(NamedTuple):
    coloring: KColoring
    witness: PathWitness
    decomposition: Theorem4Decomposition


def decompose(d):
    g = d.base
    sources = frozenset(v for v in g.vertices() if d.in_degree(v) == 0)
    sinks = frozenset(v for v in g.vertices() if d.out_degree(v) == 0)
    middle = frozenset(g.vertices()) - sources - sinks
    return sources, sinks, middle


def _directed_triangle_path(d, tri):
    for x in tri:
        for y in d.out_nbrs[x]:
            if y in tri:
                for z in d.out_nbrs[y]:
                    if z in tri and z != x:
                        return [x, y, z]
    raise VerificationError("orientation of a triangle without a directed 2-arc path")


def theorem4(d, chi=None):
    """A 3-colouring and a directed path x -> y -> z using all three colours."""
    g = d.base
    _require_connected(g)
    if chi is None:
        chi = chromatic_number(g)
    if chi != 3:
        raise HypothesisError(f"chromatic number is {chi}, not 3")
    sources, sinks, middle = decompose(d)

    tri = find_cycle_of_length(g, 3)
    if tri is not None:
        f = chromatic_witness(g)
        path = _directed_triangle_path(d, set(tri.vertices))
        tag = "triangle"
    elif not any(g.masks[u] & sum(1 << w for w in middle) for u in middle):
        tag = "layered"
        if not middle:
            raise VerificationError("non-bipartite orientation without inner vertices")
        f = KColoring(3, [1 if v in sources else 3 if v in sinks else 2 for v in g.vertices()])
        u = min(middle)
        path = [d.in_nbrs[u][0], u, d.out_nbrs[u][0]]
    else:
        tag = "recolored"
        f = chromatic_witness(g)
        path = None
        for u in sorted(middle):
            for x in d.in_nbrs[u]:
                y = next((y for y in d.out_nbrs[u] if f[y] != f[x]), None)
                if y is not None:
                    path = [x, u, y]
                    break
            if path is not None:
                break
        if path is None:
            # every inner vertex sees one colour; move the tail of an inner arc
            # to the colour missing from it and its head
            u, v = min((a, b) for a, b in d.arcs if a in middle and b in middle)
            (third,) = {1, 2, 3} - {f[u], f[v]}
            f = f.recolored({u: third})
            w = d.out_nbrs[v][0]
            path = [u, v, w]

    _require_proper(g, f, "orientation colouring")
    witness = PathWitness(path, directed=True)
    if not witness.is_valid_in(d) or len({f[v] for v in path}) != 3:
        raise VerificationError(f"{path} is not a directed rainbow path")
    return Theorem4Result(f, witness, Theorem4Decomposition(sources, sinks, middle, tag))


def check_theorem4(result, d):
    """Oracle re-check of a theorem4 result: proper colouring and the directed
    subset search finds a three-coloured directed path."""
    ok, _ = verify_directed_rainbow(d, result.coloring)
    return result.coloring.is_proper(d.base) and ok
