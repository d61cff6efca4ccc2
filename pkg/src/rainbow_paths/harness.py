"""Corpora, brute-force oracles and property sweeps.

A sweep runs every enabled check on every corpus graph and records one
outcome per (graph, check):

``pass``     the oracle confirmed the conclusion
``fail``     the oracle refuted it, or a construction raised a verification error
``skipped``  the graph violates the check's hypothesis, or the budget ran out
``open``     conjecture check on a graph no proven case covers, and no
             colouring was found (never counted as a failure)
``exception`` the conjecture check on the 7-cycle, which is the known exception
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import ceil

from .budget import Budget
from .coloring import (
    KColoring,
    chromatic_number,
    chromatic_witness,
    circular_chromatic_number,
    circular_witness,
    enumerate_proper_colorings,
    is_valid_circular,
)
from .constructions import check_theorem4, theorem1, theorem2, theorem3, theorem4
from .errors import BudgetExceeded, HypothesisError, RainbowError
from .graph import (
    Graph,
    Orientation,
    all_orientations,
    cycle,
    find_cycle_of_length,
    generate,
    is_connected,
    random_gnp,
)
from .rainbow import verify_rainbow

EXHAUSTIVE_LIMIT = 7
CHECKS = ("theorem1", "theorem2", "theorem3", "theorem4", "chi_bounds", "c7_exception", "conjecture")


# ------------------------------------------------------------------ corpora


def _connected_mask(n, masks):
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= masks[low.bit_length() - 1]
            m ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def enumerate_connected_graphs(max_n, min_n=1):
    """All connected labelled graphs on ``min_n .. max_n`` vertices.

    Ordered by vertex count, then by the edge subset read as a binary number
    over the lexicographically sorted vertex pairs.
    """
    if max_n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration is limited to {EXHAUSTIVE_LIMIT} vertices")
    for n in range(max(min_n, 1), max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            masks = [0] * n
            chosen = []
            for i, (u, v) in enumerate(pairs):
                if (bits >> i) & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
                    chosen.append((u, v))
            if _connected_mask(n, masks):
                yield Graph(n, chosen)


def random_connected_graphs(count, n_min, n_max, seed, p_range=(0.25, 0.6)):
    """``count`` connected G(n, p) samples, reproducible from ``seed``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(*p_range)
        g = random_gnp(n, p, rng.getrandbits(32))
        if is_connected(g):
            out.append(g)
    return out


def random_fractional_graphs(count, n_min, n_max, seed, p_range=(0.15, 0.4)):
    """Connected random graphs whose circular chromatic number is below the
    chromatic number, found by rejection sampling."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        (g,) = random_connected_graphs(1, n_min, n_max, rng.getrandbits(32), p_range)
        if circular_chromatic_number(g).value < chromatic_number(g):
            out.append(g)
    return out


def sample_proper_colorings(g, k, count, seed):
    """Up to ``count`` distinct proper k-colourings drawn by randomised greedy
    backtracking; all of them when fewer exist and the draw finds them."""
    rng = random.Random(seed)
    found = {}
    attempts = 0
    adj = g.adjacency
    while len(found) < count and attempts < 20 * count:
        attempts += 1
        cols = [0] * g.vertex_count
        order = list(g.vertices())
        rng.shuffle(order)

        def rec(i):
            if i == len(order):
                return True
            v = order[i]
            opts = [c for c in range(1, k + 1) if all(cols[w] != c for w in adj[v])]
            rng.shuffle(opts)
            for c in opts:
                cols[v] = c
                if rec(i + 1):
                    return True
            cols[v] = 0
            return False

        if not rec(0):
            break
        found.setdefault(tuple(cols), None)
    return [KColoring(k, c) for c in found]


def atlas_connected_graphs(max_n, seed=0):
    """One representative per isomorphism class of connected graphs on
    ``1 .. max_n <= 7`` vertices (networkx graph atlas), each with a seeded
    random vertex relabelling."""
    import networkx as nx

    rng = random.Random(seed)
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(h):
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        out.append(Graph(n, [(perm[u], perm[v]) for u, v in h.edges()]))
    return out


# ------------------------------------------------------------------ oracles


def naive_rainbow_verdicts(g, f):
    """``(lies_on, begins)`` from enumerating every simple path of order k."""
    k = f.k
    nv = g.vertex_count
    lies = [False] * nv
    begins = [False] * nv
    adj = g.adjacency

    def extend(seq):
        if len(seq) == k:
            cols = [f[v] for v in seq]
            if len(set(cols)) == k:
                begins[seq[0]] = True
                for v in seq:
                    lies[v] = True
            return
        for w in adj[seq[-1]]:
            if w not in seq:
                seq.append(w)
                extend(seq)
                seq.pop()

    for v in g.vertices():
        extend([v])
    return lies, begins


def naive_directed_rainbow(d, f):
    k = f.k

    def extend(seq):
        if len(seq) == k:
            return len({f[v] for v in seq}) == k
        return any(extend(seq + [w]) for w in d.out_nbrs[seq[-1]] if w not in seq)

    return any(extend([v]) for v in d.base.vertices())


def is_seven_cycle(g):
    return g.vertex_count == 7 and g.m == 7 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices())


def canonical_colorings(g, k):
    """Proper k-colourings up to renaming colours: colours first appear in order 1, 2, ..."""
    for f in enumerate_proper_colorings(g, k):
        top = 0
        for c in f.colors:
            if c > top + 1:
                break
            top = max(top, c)
        else:
            yield f


def begins_everywhere_coloring(g, k=None, budget=None):
    """A k-colouring where every vertex begins a full rainbow path, or None."""
    if k is None:
        k = chromatic_number(g)
    for f in canonical_colorings(g, k):
        if budget is not None:
            budget.tick()
        if verify_rainbow(g, f).all_begin:
            return f
    return None


def confirm_c7_exception():
    """Exhaustive counts over all proper 3-colourings of C_7, with C_5 as control."""
    out = {}
    for name, g in (("C7", cycle(7)), ("C5", cycle(5))):
        total = begins = lies = 0
        for f in enumerate_proper_colorings(g, 3):
            rep = verify_rainbow(g, f)
            total += 1
            begins += rep.all_begin
            lies += rep.all_lie_on
        out[name] = {
            "colorings": total,
            "begins_everywhere_colorings": begins,
            "lies_on_everywhere_colorings": lies,
        }
    out["confirmed"] = (
        out["C7"]["begins_everywhere_colorings"] == 0
        and out["C7"]["lies_on_everywhere_colorings"] >= 1
        and out["C5"]["begins_everywhere_colorings"] >= 1
    )
    return out


@dataclass(frozen=True)
class Counterexample:
    graph: Graph
    k: int
    known_exception: bool


def search_counterexample(graphs, max_k=4, budget_ms=None):
    """First graph with no chi-colouring in which every vertex begins a full
    rainbow path.  Graphs with chi above ``max_k`` are passed over."""
    for g in graphs:
        if not is_connected(g):
            continue
        k = chromatic_number(g)
        if k > max_k:
            continue
        budget = None if budget_ms is None else Budget(seconds=budget_ms / 1000)
        try:
            f = begins_everywhere_coloring(g, k, budget)
        except BudgetExceeded:
            continue
        if f is None:
            return Counterexample(g, k, is_seven_cycle(g))
    return None


# ------------------------------------------------------------------- sweeps


@dataclass
class SweepConfig:
    """What to sweep.

    The corpus is every connected labelled graph on at most ``max_vertices``
    vertices, then the named ``families`` (e.g. ``["cycle", 7]``), then
    ``random_graphs`` seeded G(n, p) samples with ``random_vertices`` bounds.
    """

    max_vertices: int = 5
    families: list = field(default_factory=list)
    random_graphs: int = 0
    random_vertices: tuple = (7, 10)
    seed: int = 0
    budget_ms: int = 30000
    checks: tuple = ("theorem1", "theorem2", "theorem3", "theorem4", "chi_bounds", "c7_exception")
    max_orientations: int = 256

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
        if self.budget_ms < 0:
            raise ValueError("budget_ms must be non-negative")
        if self.max_vertices > EXHAUSTIVE_LIMIT:
            raise ValueError(f"max_vertices above {EXHAUSTIVE_LIMIT} is not exhaustive-feasible")
        if self.max_vertices <= 0 and not self.families and not self.random_graphs:
            raise ValueError("empty corpus")
        self.checks = tuple(self.checks)
        self.random_vertices = tuple(self.random_vertices)

    @classmethod
    def from_dict(cls, data):
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys {sorted(extra)}")
        return cls(**data)

    def corpus(self):
        if self.max_vertices > 0:
            yield from enumerate_connected_graphs(self.max_vertices)
        for spec in self.families:
            if isinstance(spec, str):
                yield generate(spec)
            else:
                yield generate(*spec)
        if self.random_graphs:
            lo, hi = self.random_vertices
            yield from random_connected_graphs(self.random_graphs, lo, hi, self.seed)


@dataclass
class SweepReport:
    records: list = field(default_factory=list)

    @property
    def counters(self):
        out = {}
        for r in self.records:
            key = f"{r['check']}:{r['status']}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    @property
    def failures(self):
        return [r for r in self.records if r["status"] == "fail"]

    def to_jsonl(self):
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records)

    def summary(self):
        return {"records": len(self.records), "failures": len(self.failures), "counters": self.counters}


def _record(g, check, status, reason=None, coloring=None, detail=None):
    return {
        "graph": None if g is None else g.to_dict(),
        "check": check,
        "status": status,
        "reason": reason,
        "coloring": None if coloring is None else list(coloring.colors),
        "detail": detail,
    }


def _check_theorem1(g, budget, cfg):
    res = theorem1(g, budget=budget)
    f = res.coloring
    rep = verify_rainbow(g, f)
    ok = f.is_proper(g) and f.k == chromatic_number(g) and rep.all_lie_on
    return ("pass" if ok else "fail"), None, f, None


def _check_theorem2(g, budget, cfg):
    res = theorem2(g, budget=budget)
    f = res.f
    rep = verify_rainbow(g, f)
    k = f.k
    ok = (
        f.is_proper(g)
        and k == chromatic_number(g)
        and len(res.strong_set) >= res.bound * g.vertex_count
        and all(rep.begins[u] for u in res.strong_set)
        and all(rep.longest_from[u] >= k - 1 for u in res.weak_set)
    )
    detail = {"strong": len(res.strong_set), "bound": str(res.bound)}
    return ("pass" if ok else "fail"), None, f, detail


def _check_theorem3(g, budget, cfg):
    res = theorem3(g, budget=budget)
    f = res.coloring
    ok = f.is_proper(g) and f.k == chromatic_number(g) and verify_rainbow(g, f).all_begin
    return ("pass" if ok else "fail"), None, f, {"stage": res.stage, "shifts": res.shifts}


def _check_theorem4(g, budget, cfg):
    if chromatic_number(g) != 3:
        raise HypothesisError("chromatic number is not 3")
    total = 1 << g.m
    if total <= cfg.max_orientations:
        orients = all_orientations(g)
    else:
        rng = random.Random(cfg.seed)
        bits = sorted(rng.sample(range(total), cfg.max_orientations))
        orients = (Orientation.from_bits(g, b) for b in bits)
    count = 0
    for d in orients:
        if budget is not None:
            budget.tick()
        res = theorem4(d, chi=3)
        if not check_theorem4(res, d):
            return "fail", f"orientation {sorted(d.arcs)}", res.coloring, None
        count += 1
    return "pass", None, None, {"orientations": count}


def _check_chi_bounds(g, budget, cfg):
    chi = chromatic_number(g)
    cn = circular_chromatic_number(g)
    v = cn.value
    ok = chromatic_witness(g).is_proper(g) and is_valid_circular(g, circular_witness(g))
    if chi >= 2:
        ok = ok and chi - 1 < v <= chi and ceil(v) == chi
    else:
        ok = ok and v == 1
    return ("pass" if ok else "fail"), None, None, {"chi": chi, "chi_c": str(cn)}


def _check_conjecture(g, budget, cfg):
    k = chromatic_number(g)
    if k > 4:
        raise HypothesisError("chromatic number above 4")
    f = begins_everywhere_coloring(g, k, budget)
    if f is not None:
        return "pass", None, f, None
    if is_seven_cycle(g):
        return "exception", "the 7-cycle", None, None
    proven = k <= 3 or find_cycle_of_length(g, k) is not None
    if proven:
        return "fail", "no colouring although a proven case applies", None, None
    return "open", f"chi = {k} without a {k}-cycle", None, None


_RUNNERS = {
    "theorem1": _check_theorem1,
    "theorem2": _check_theorem2,
    "theorem3": _check_theorem3,
    "theorem4": _check_theorem4,
    "chi_bounds": _check_chi_bounds,
    "conjecture": _check_conjecture,
}


def run_check(g, check, cfg):
    """One (graph, check) record."""
    if not is_connected(g):
        return _record(g, check, "skipped", "graph is not connected")
    if cfg.budget_ms <= 0:
        return _record(g, check, "skipped", "budget exhausted")
    budget = Budget(seconds=cfg.budget_ms / 1000)
    try:
        status, reason, f, detail = _RUNNERS[check](g, budget, cfg)
    except HypothesisError as exc:
        return _record(g, check, "skipped", f"hypothesis: {exc}")
    except BudgetExceeded as exc:
        return _record(g, check, "skipped", f"budget: {exc}")
    except RainbowError as exc:
        return _record(g, check, "fail", f"{type(exc).__name__}: {exc}")
    return _record(g, check, status, reason, f, detail)


def replay(record, cfg=None):
    """Re-run the check of a serialized record."""
    cfg = cfg or SweepConfig()
    return run_check(Graph.from_dict(record["graph"]), record["check"], cfg)


def run_sweep(cfg):
    report = SweepReport()
    per_graph = [c for c in cfg.checks if c != "c7_exception"]
    if per_graph:
        for g in cfg.corpus():
            for check in per_graph:
                report.records.append(run_check(g, check, cfg))
    if "c7_exception" in cfg.checks:
        res = confirm_c7_exception()
        status = "pass" if res["confirmed"] else "fail"
        report.records.append(_record(cycle(7), "c7_exception", status, detail=res))
    return report


def config_to_dict(cfg):
    d = asdict(cfg)
    d["checks"] = list(d["checks"])
    d["random_vertices"] = list(d["random_vertices"])
    return d

