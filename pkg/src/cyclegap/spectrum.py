"""Cycle spectra, bounded interval search, girth, circumference and gaps.

Every search counts visited search-tree nodes against a ``budget`` so that
results are reproducible across machines.  Graph arguments only need
``vertex_count`` and ``edges`` (a sequence of endpoint pairs indexed by edge
id), so both :class:`~cyclegap.embedding.Embedding` and :class:`SimpleGraph`
work.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import Acyclic, BadInterval, SpectrumIncomplete

DEFAULT_BUDGET = 2_000_000
INF = float("inf")


@dataclass(frozen=True)
class SimpleGraph:
    """Abstract graph without an embedding (e.g. read from graph6)."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass
class SpectrumReport:
    window: tuple[int, int]
    present: dict[int, CycleWitness]
    complete: bool
    nodes_explored: int

    @property
    def lengths(self) -> list[int]:
        return sorted(self.present)


@dataclass(frozen=True)
class IntervalResult:
    status: str  # "found" | "empty" | "unknown"
    witness: CycleWitness | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status == "found"


@dataclass(frozen=True)
class CircumferenceResult:
    lower_bound: int
    witness: CycleWitness
    exact: bool
    nodes_explored: int


@dataclass
class GapReport:
    gaps: list[tuple[int, int]]
    spectrum: list[int]
    circumference: int
    witnesses: dict[int, CycleWitness] = field(default_factory=dict, repr=False)


def adjacency(G) -> list[list[tuple[int, int]]]:
    adj = getattr(G, "adjacency", None)
    if adj is not None:
        return [list(row) for row in adj]
    out: list[list[tuple[int, int]]] = [[] for _ in range(G.vertex_count)]
    for e, (u, v) in enumerate(G.edges):
        out[u].append((v, e))
        out[v].append((u, e))
    return out


def validate_witness(G, w: CycleWitness) -> bool:
    """Vertices distinct, edge i joins vertex i and vertex i+1 (cyclically)."""
    k = len(w.vertices)
    if k != len(w.edges) or k == 0 or len(set(w.vertices)) != k or len(set(w.edges)) != k:
        return False
    for i, e in enumerate(w.edges):
        a, b = w.vertices[i], w.vertices[(i + 1) % k]
        if not 0 <= e < len(G.edges) or sorted(G.edges[e]) != sorted((a, b)):
            return False
    return True


class _Budget(Exception):
    pass


class _Done(Exception):
    pass


def _anchored_search(G, lo: int, hi: int, budget: int, first_only: bool):
    """Cycles with length in [lo, hi], each found once at its smallest edge.

    For anchor edge e = (s, t), paths s -e-> t -> ... -> s use only edges
    with id > e.  A branch at w is cut when len + 1 + dist(w, s) > hi, with
    dist taken in the subgraph of edges above the anchor.
    """
    n = G.vertex_count
    edges = G.edges
    adj = adjacency(G)
    found: dict[int, CycleWitness] = {}
    nodes = 0
    on = [False] * n
    pv: list[int] = []
    pe: list[int] = []
    limit = sys.getrecursionlimit()
    if hi + 100 > limit:
        sys.setrecursionlimit(hi + 100)

    def record(length: int):
        if length not in found:
            found[length] = CycleWitness(tuple(pv), tuple(pe))
            if first_only:
                raise _Done

    def dfs(v: int, L: int, e: int, s: int, dist: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        for w, f in adj[v]:
            if f <= e:
                continue
            if w == s:
                if lo <= L + 1 <= hi and (first_only or L + 1 not in found):
                    pe.append(f)
                    try:
                        record(L + 1)
                    finally:
                        pe.pop()
            elif not on[w] and L + 1 + dist[w] <= hi:
                on[w] = True
                pv.append(w)
                pe.append(f)
                dfs(w, L + 1, e, s, dist)
                pv.pop()
                pe.pop()
                on[w] = False

    complete = True
    try:
        for e, (s, t) in enumerate(edges):
            if s == t:
                if lo <= 1 <= hi:
                    pv[:] = [s]
                    pe[:] = [e]
                    record(1)
                continue
            if hi < 2:
                continue
            dist = [INF] * n
            dist[s] = 0
            q = deque([s])
            while q:
                x = q.popleft()
                for y, f in adj[x]:
                    if f > e and dist[y] == INF:
                        dist[y] = dist[x] + 1
                        q.append(y)
            if 1 + dist[t] > hi:
                continue
            pv[:] = [s, t]
            pe[:] = [e]
            on[s] = on[t] = True
            try:
                dfs(t, 1, e, s, dist)
            finally:
                on[s] = on[t] = False
    except _Budget:
        complete = False
    except _Done:
        pass
    finally:
        for i in range(n):
            on[i] = False
    return found, complete, nodes


def is_multigraph(G) -> bool:
    seen = set()
    for u, v in G.edges:
        if u == v:
            return True
        key = (min(u, v), max(u, v))
        if key in seen:
            return True
        seen.add(key)
    return False


def enumerate_spectrum(G, budget: int = DEFAULT_BUDGET) -> SpectrumReport:
    """All cycle lengths with one witness each; ``complete`` if within budget."""
    lo = 1 if is_multigraph(G) else 3
    hi = G.vertex_count
    found, complete, nodes = _anchored_search(G, lo, hi, budget, first_only=False)
    return SpectrumReport((lo, hi), found, complete, nodes)


def exists_cycle_in_range(G, a: int, b: int, budget: int = DEFAULT_BUDGET) -> IntervalResult:
    """Found (first witness in anchor order), empty (certified) or unknown."""
    if a < 1 or b < a:
        raise BadInterval(f"bad interval [{a}, {b}]")
    found, complete, nodes = _anchored_search(G, a, b, budget, first_only=True)
    if found:
        return IntervalResult("found", next(iter(found.values())), nodes)
    return IntervalResult("empty" if complete else "unknown", None, nodes)


def shortest_cycle_in_range(G, a: int, b: int, budget: int = DEFAULT_BUDGET) -> IntervalResult:
    """Like :func:`exists_cycle_in_range` but the witness has minimum length.

    Searches each exact length a, a+1, ... in turn; ``budget`` is shared.
    """
    if a < 1 or b < a:
        raise BadInterval(f"bad interval [{a}, {b}]")
    used = 0
    certain = True
    for L in range(a, b + 1):
        found, complete, nodes = _anchored_search(G, L, L, max(budget - used, 0), first_only=True)
        used += nodes
        if found:
            return IntervalResult("found", found[L], used)
        certain = certain and complete
    return IntervalResult("empty" if certain else "unknown", None, used)


def girth(G) -> CycleWitness:
    """Shortest cycle via a BFS through each edge with that edge removed."""
    adj = adjacency(G)
    best: CycleWitness | None = None
    for e, (u, v) in enumerate(G.edges):
        if u == v:
            return CycleWitness((u,), (e,))
        limit = INF if best is None else best.length - 1
        parent = {u: (None, None)}
        q = deque([(u, 0)])
        hit = False
        while q and not hit:
            x, d = q.popleft()
            if d + 1 >= limit:
                break
            for y, f in adj[x]:
                if f == e or y in parent:
                    continue
                parent[y] = (x, f)
                if y == v:
                    hit = True
                    break
                q.append((y, d + 1))
        if hit:
            verts = [v]
            es = []
            x = v
            while x != u:
                px, f = parent[x]
                es.append(f)
                verts.append(px)
                x = px
            # verts runs v .. u; close with e from u back to v
            verts.reverse()
            es.reverse()
            w = CycleWitness(tuple(verts), tuple(es) + (e,))
            if best is None or w.length < best.length:
                best = w
    if best is None:
        raise Acyclic("graph has no cycle")
    return best


def _facial_seed(G) -> CycleWitness | None:
    fm = getattr(G, "face_map", None)
    if fm is None:
        return None
    best = None
    for f in fm.faces:
        if len(set(f.vertices)) == f.length and len(set(f.edges)) == f.length:
            if best is None or f.length > best.length:
                best = CycleWitness(f.vertices, f.edges)
    return best


def circumference(G, budget: int = DEFAULT_BUDGET) -> CircumferenceResult:
    """Longest cycle by branch and bound.

    Cycles are rooted at their smallest vertex r and use vertices >= r only.
    A partial path is cut when its length plus the number of vertices still
    reachable from its end cannot beat the incumbent, or when the root is no
    longer reachable.  The incumbent starts at the longest facial cycle (or
    the girth witness).
    """
    n = G.vertex_count
    adj = adjacency(G)
    seed = _facial_seed(G)
    g = girth(G)
    best = seed if seed is not None and seed.length >= g.length else g
    nodes = 0
    on = [False] * n
    pv: list[int] = []
    pe: list[int] = []
    if n + 100 > sys.getrecursionlimit():
        sys.setrecursionlimit(n + 100)

    def reach_bound(v: int, r: int) -> int:
        # vertices >= r reachable from v off the path; -1 once r is cut off
        back = len(pv) >= 3 and any(y == r for y, _ in adj[v])
        seen = {v}
        stack = [v]
        count = 0
        while stack:
            x = stack.pop()
            for y, _ in adj[x]:
                if y == r:
                    back = back or x != v
                    continue
                if y < r or on[y] or y in seen:
                    continue
                seen.add(y)
                count += 1
                stack.append(y)
        return count if back else -1

    def dfs(v: int, r: int):
        nonlocal nodes, best
        nodes += 1
        if nodes > budget:
            raise _Budget
        extra = reach_bound(v, r)
        if extra < 0 or len(pv) + extra <= best.length:
            return
        nbrs = [(w, f) for w, f in adj[v] if w >= r]
        # fewest onward options first: finds long cycles early
        nbrs.sort(key=lambda wf: sum(1 for y, _ in adj[wf[0]] if y >= r and not on[y]))
        for w, f in nbrs:
            if w == r:
                if len(pv) >= 3 and len(pv) > best.length:
                    best = CycleWitness(tuple(pv), tuple(pe) + (f,))
                    if best.length >= n - r:
                        raise _Done
            elif not on[w]:
                on[w] = True
                pv.append(w)
                pe.append(f)
                dfs(w, r)
                pv.pop()
                pe.pop()
                on[w] = False

    exact = True
    try:
        for r in range(n):
            if best.length >= n - r:
                break
            on[r] = True
            pv[:] = [r]
            pe[:] = []
            for w, f in adj[r]:
                if w > r:
                    on[w] = True
                    pv.append(w)
                    pe.append(f)
                    dfs(w, r)
                    pv.pop()
                    pe.pop()
                    on[w] = False
            on[r] = False
    except _Budget:
        exact = False
    except _Done:
        pass
    return CircumferenceResult(best.length, best, exact, nodes)


def gap_report(G, budget: int = DEFAULT_BUDGET) -> GapReport:
    """Maximal intervals [a, b] (a >= 3) missing from the spectrum, below the circumference."""
    rep = enumerate_spectrum(G, budget)
    if not rep.complete:
        raise SpectrumIncomplete(f"spectrum search exceeded {budget} nodes")
    lengths = [L for L in rep.lengths if L >= 3]
    if not lengths:
        raise Acyclic("no cycle of length >= 3")
    circ = lengths[-1]
    gaps = []
    prev = 2
    for L in lengths:
        if L - prev >= 2:
            gaps.append((prev + 1, L - 1))
        prev = L
    return GapReport(gaps, lengths, circ, rep.present)


def cycle_lengths_window(report: SpectrumReport, a: int, b: int) -> list[int]:
    return [L for L in report.lengths if a <= L <= b]


def edge_set_to_witness(G, edge_ids: Sequence[int]) -> CycleWitness | None:
    """Order a set of edges into a cycle; ``None`` if they do not form one."""
    es = list(edge_ids)
    if not es:
        return None
    inc: dict[int, list[int]] = {}
    for e in es:
        u, v = G.edges[e]
        inc.setdefault(u, []).append(e)
        inc.setdefault(v, []).append(e)
    if any(len(x) != 2 for x in inc.values()):
        return None
    e0 = min(es)
    start = G.edges[e0][0]
    verts = [start]
    order = [e0]
    cur = G.edges[e0][1] if G.edges[e0][0] == start else G.edges[e0][0]
    prev_e = e0
    while cur != start:
        verts.append(cur)
        a, b = inc[cur]
        nxt = b if a == prev_e else a
        order.append(nxt)
        u, v = G.edges[nxt]
        cur = v if u == cur else u
        prev_e = nxt
    if len(order) != len(es):
        return None
    return CycleWitness(tuple(verts), tuple(order))
