"""Dart-based plane multigraphs (rotation systems).

An :class:`Embedding` stores one record per dart (half-edge): its origin
vertex, its twin, and the next dart counterclockwise around the origin.
Faces are the orbits of ``d -> next[twin[d]]``.  Loops and parallel edges
are allowed, because suppressing degree-2 vertices produces them.

Darts at a vertex are stored contiguously, in rotation order, and dart ids
are assigned lexicographically by ``(vertex, position)``.  Edge ids follow
the smaller of the two dart ids of each edge.
"""

from __future__ import annotations

import hashlib
import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import (
    BadDegree,
    DegenerateCycle,
    InconsistentAdjacency,
    MarkerSplit,
    NotConnected,
    NotPlanar,
    UnknownEdge,
)

#: Cap on the number of twin pairings tried for ambiguous parallel edges.
MAX_PAIRING_TRIALS = 4096


@dataclass(frozen=True)
class Embedding:
    vertex_count: int
    origin: tuple[int, ...]
    twin: tuple[int, ...]
    next: tuple[int, ...]
    outer_dart: int = 0
    # provenance: original vertex / dart ids after deletions, not part of equality
    vertex_labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    dart_labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    # ---- basic sizes -------------------------------------------------
    @property
    def dart_count(self) -> int:
        return len(self.origin)

    @property
    def edge_count(self) -> int:
        return len(self.origin) // 2

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        off = [0] * (self.vertex_count + 1)
        for v in self.origin:
            off[v + 1] += 1
        for v in range(self.vertex_count):
            off[v + 1] += off[v]
        return tuple(off)

    @cached_property
    def prev(self) -> tuple[int, ...]:
        p = [0] * self.dart_count
        for d, n in enumerate(self.next):
            p[n] = d
        return tuple(p)

    @cached_property
    def edge_darts(self) -> tuple[tuple[int, int], ...]:
        return tuple((d, self.twin[d]) for d in range(self.dart_count) if d < self.twin[d])

    @cached_property
    def edge_of(self) -> tuple[int, ...]:
        eid = [0] * self.dart_count
        for i, (a, b) in enumerate(self.edge_darts):
            eid[a] = eid[b] = i
        return tuple(eid)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Endpoint pairs ``(origin(d), origin(twin d))`` indexed by edge id."""
        return tuple((self.origin[a], self.origin[b]) for a, b in self.edge_darts)

    def head(self, d: int) -> int:
        return self.origin[self.twin[d]]

    def darts_at(self, v: int) -> list[int]:
        """Darts leaving ``v`` in counterclockwise order."""
        start = self.offsets[v]
        out = [start]
        d = self.next[start]
        while d != start:
            out.append(d)
            d = self.next[d]
        return out

    def rotations(self) -> list[list[int]]:
        return [[self.head(d) for d in self.darts_at(v)] for v in range(self.vertex_count)]

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: ``(neighbor, edge id)`` pairs in rotation order."""
        return tuple(
            tuple((self.head(d), self.edge_of[d]) for d in self.darts_at(v))
            for v in range(self.vertex_count)
        )

    def vlabel(self, v: int) -> int:
        return v if self.vertex_labels is None else self.vertex_labels[v]

    def dlabel(self, d: int) -> int:
        return d if self.dart_labels is None else self.dart_labels[d]

    @cached_property
    def face_map(self) -> "FaceMap":
        return _trace_faces(self)

    @property
    def face_count(self) -> int:
        return len(self.face_map.faces)

    @property
    def outer_face(self) -> int:
        return self.face_map.dart_to_face[self.outer_dart]

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count

    def validate(self) -> "Embedding":
        D = self.dart_count
        for d in range(D):
            t = self.twin[d]
            if t == d or self.twin[t] != d:
                raise InconsistentAdjacency(f"twin is not a fixed-point-free involution at dart {d}")
        if self.vertex_count == 0:
            raise NotConnected("empty graph")
        if D == 0:
            if self.vertex_count > 1:
                raise NotConnected("several vertices and no edges")
            return self
        if any(self.offsets[v] == self.offsets[v + 1] for v in range(self.vertex_count)):
            raise NotConnected("isolated vertex")
        seen = [False] * self.vertex_count
        seen[0] = True
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in self.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise NotConnected("rotation system is disconnected")
        if not 0 <= self.outer_dart < D:
            raise InconsistentAdjacency("outer dart out of range")
        chi = self.euler_characteristic()
        if chi != 2:
            raise NotPlanar(f"V - E + F = {chi}, expected 2")
        return self

    def with_outer_dart(self, d: int) -> "Embedding":
        return Embedding(self.vertex_count, self.origin, self.twin, self.next, d,
                         self.vertex_labels, self.dart_labels)

    def fresh_labels(self) -> "Embedding":
        return Embedding(self.vertex_count, self.origin, self.twin, self.next, self.outer_dart)


@dataclass(frozen=True)
class Face:
    id: int
    darts: tuple[int, ...]
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class FaceMap:
    faces: tuple[Face, ...]
    dart_to_face: tuple[int, ...]
    # per edge id: the faces on the two sides (equal for a bridge)
    edge_faces: tuple[tuple[int, int], ...]

    def lengths(self) -> list[int]:
        return [f.length for f in self.faces]


def _trace_faces(E: Embedding) -> FaceMap:
    D = E.dart_count
    dart_to_face = [-1] * D
    faces = []
    for start in range(D):
        if dart_to_face[start] >= 0:
            continue
        fid = len(faces)
        orbit = []
        d = start
        while dart_to_face[d] < 0:
            dart_to_face[d] = fid
            orbit.append(d)
            d = E.next[E.twin[d]]
        faces.append(Face(fid, tuple(orbit), tuple(E.origin[x] for x in orbit),
                          tuple(E.edge_of[x] for x in orbit)))
    edge_faces = tuple((dart_to_face[a], dart_to_face[b]) for a, b in E.edge_darts)
    return FaceMap(tuple(faces), tuple(dart_to_face), edge_faces)


# ---- construction ----------------------------------------------------------

def assemble(
    rot: Sequence[Sequence[tuple[int, Hashable]]],
    outer_dart: int = 0,
    vertex_labels: Sequence[int] | None = None,
    dart_labels: Sequence[int] | None = None,
    validate: bool = True,
) -> Embedding:
    """Build from keyed rotations: ``rot[v]`` lists ``(neighbor, edge_key)``.

    The two darts of an edge carry the same key, which removes any ambiguity
    for parallel edges and loops.
    """
    origin: list[int] = []
    nxt: list[int] = []
    ends: list[int] = []
    by_key: dict[Hashable, list[int]] = {}
    for v, entries in enumerate(rot):
        base = len(origin)
        deg = len(entries)
        for i, (w, key) in enumerate(entries):
            d = base + i
            origin.append(v)
            nxt.append(base + (i + 1) % deg)
            ends.append(w)
            by_key.setdefault(key, []).append(d)
    twin = [-1] * len(origin)
    for key, ds in by_key.items():
        if len(ds) != 2:
            raise InconsistentAdjacency(f"edge key {key!r} used {len(ds)} times")
        a, b = ds
        if ends[a] != origin[b] or ends[b] != origin[a]:
            raise InconsistentAdjacency(f"edge key {key!r} joins mismatched endpoints")
        twin[a], twin[b] = b, a
    E = Embedding(
        len(rot), tuple(origin), tuple(twin), tuple(nxt), outer_dart,
        tuple(vertex_labels) if vertex_labels is not None else None,
        tuple(dart_labels) if dart_labels is not None else None,
    )
    if validate:
        E.validate()
    return E


def _normalize_rotations(rotations) -> list[list[int]]:
    if isinstance(rotations, Mapping):
        index = {label: i for i, label in enumerate(rotations)}
        try:
            return [[index[w] for w in rotations[label]] for label in rotations]
        except KeyError as exc:
            raise InconsistentAdjacency(f"unknown neighbor {exc.args[0]!r}") from None
    rows = [list(r) for r in rotations]
    n = len(rows)
    for r in rows:
        for w in r:
            if not (isinstance(w, int) and 0 <= w < n):
                raise InconsistentAdjacency(f"neighbor {w!r} out of range")
    return rows


def build_embedding(rotations, outer_dart: int = 0) -> Embedding:
    """Validated embedding from per-vertex cyclic neighbor lists.

    ``rotations`` is a list of lists over vertices ``0..n-1`` or a mapping from
    labels to label lists (vertices numbered in mapping order).  For ``p``
    parallel edges between ``u < v`` the i-th occurrence at ``u`` is paired
    with the occurrence at ``v`` that makes the pairing a cyclic reversal;
    if several reversals are possible, the first one passing the Euler check
    is used.  Loop occurrences at a vertex are paired outermost-first.
    """
    rows = _normalize_rotations(rotations)
    n = len(rows)
    occ: dict[tuple[int, int], list[int]] = {}
    for v, r in enumerate(rows):
        for i, w in enumerate(r):
            occ.setdefault((v, w), []).append(i)
    for (v, w), pos in occ.items():
        if v != w and len(occ.get((w, v), ())) != len(pos):
            raise InconsistentAdjacency(f"{v} lists {w} {len(pos)} times, but not conversely")
        if v == w and len(pos) % 2:
            raise InconsistentAdjacency(f"odd loop count at vertex {v}")

    multi = sorted((u, v) for (u, v), pos in occ.items() if u < v and len(pos) > 1)

    def keyed(shifts: dict[tuple[int, int], int]):
        keys: list[list] = [[None] * len(r) for r in rows]
        for (u, v), pu in occ.items():
            if u == v:
                L = len(pu)
                for i in range(L // 2):
                    keys[u][pu[i]] = keys[u][pu[L - 1 - i]] = ("loop", u, i)
            elif u < v:
                pv = occ[(v, u)]
                m = len(pu)
                s = shifts.get((u, v), m - 1)
                for i in range(m):
                    keys[u][pu[i]] = keys[v][pv[(s - i) % m]] = (u, v, i)
        return [list(zip(rows[v], keys[v])) for v in range(n)]

    if not multi:
        return assemble(keyed({}), outer_dart)
    # Parallel edges: try cyclic reversals until Euler holds.
    first_error = None
    choices = [range(len(occ[p]) - 1, -1, -1) for p in multi]
    for trial, combo in enumerate(itertools.product(*choices)):
        if trial >= MAX_PAIRING_TRIALS:
            break
        try:
            return assemble(keyed(dict(zip(multi, combo))), outer_dart)
        except NotPlanar as exc:
            first_error = first_error or exc
    raise first_error or NotPlanar("no planar pairing of parallel edges found")


def mirror(E: Embedding) -> Embedding:
    """The reflected embedding (all rotations reversed).

    Reflection maps the face of dart ``d`` to the face of ``twin(d)``, so the
    outer dart moves to its twin.
    """
    order = []
    rot = []
    for v in range(E.vertex_count):
        ds = E.darts_at(v)
        ds = [ds[0]] + ds[:0:-1]
        order.extend(ds)
        rot.append([(E.head(d), E.edge_of[d]) for d in ds])
    pos = {d: i for i, d in enumerate(order)}
    return assemble(rot, pos[E.twin[E.outer_dart]])


# ---- queries -----------------------------------------------------------------

def faces(E: Embedding) -> FaceMap:
    return E.face_map


def face_adjacency(F: FaceMap) -> tuple[dict[int, set[int]], tuple[tuple[int, int], ...]]:
    """Faces sharing an edge, plus the incident face pair of every edge.

    A face on both sides of an edge (a bridge) is not made adjacent to itself.
    """
    adj: dict[int, set[int]] = {f.id: set() for f in F.faces}
    for a, b in F.edge_faces:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj, F.edge_faces


def degrees(E: Embedding) -> list[int]:
    off = E.offsets
    return [off[v + 1] - off[v] for v in range(E.vertex_count)]


def is_cubic(E: Embedding) -> bool:
    return all(d == 3 for d in degrees(E))


def _simple_neighbors(E: Embedding) -> list[set[int]]:
    nb = [set() for _ in range(E.vertex_count)]
    for u, v in E.edges:
        if u != v:
            nb[u].add(v)
            nb[v].add(u)
    return nb


def _articulation_points(nb: list[set[int]], removed: int = -1) -> set[int]:
    n = len(nb)
    disc = [-1] * n
    low = [0] * n
    points: set[int] = set()
    timer = 0
    for root in range(n):
        if root == removed or disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        children = 0
        stack = [(root, -1, iter(nb[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == removed or w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(nb[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if p == root:
                        children += 1
                    elif low[v] >= disc[p]:
                        points.add(p)
        if children > 1:
            points.add(root)
    return points


def _is_connected(nb: list[set[int]], removed: frozenset[int] = frozenset()) -> bool:
    alive = [v for v in range(len(nb)) if v not in removed]
    if not alive:
        return True
    seen = {alive[0]}
    stack = [alive[0]]
    while stack:
        v = stack.pop()
        for w in nb[v]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(alive)


def connectivity_level(E: Embedding) -> int:
    """0 = disconnected, 1, 2, or 3 meaning "at least 3" (parallel edges collapsed).

    A vertex pair ``{v, w}`` separates the graph iff ``w`` is an articulation
    point of ``G - v``; this is checked for every ``v``.
    """
    nb = _simple_neighbors(E)
    if not _is_connected(nb):
        return 0
    if _articulation_points(nb):
        return 1
    for v in range(len(nb)):
        if _articulation_points(nb, removed=v):
            return 2
    return 3


def _bridges(E: Embedding, skip: int = -1) -> set[int]:
    """Bridges of the multigraph ``E - skip`` (edge ids)."""
    n = E.vertex_count
    adj = E.adjacency
    disc = [-1] * n
    low = [0] * n
    out: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pedge, it = stack[-1]
            for w, e in it:
                if e == skip or e == pedge:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(adj[w])))
                    break
                low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        out.add(pedge)
    return out


@dataclass(frozen=True)
class EdgeCuts:
    pairs: frozenset[frozenset[int]]
    bridges: frozenset[int]

    def edges_in_cuts(self) -> set[int]:
        return set().union(*self.pairs) if self.pairs else set()


def two_edge_cuts(E: Embedding) -> EdgeCuts:
    """All 2-edge-cuts among non-bridge edges; bridges are reported apart."""
    bridges = _bridges(E)
    pairs = set()
    for e in range(E.edge_count):
        if e in bridges:
            continue
        for f in _bridges(E, skip=e):
            if f not in bridges:
                pairs.add(frozenset((e, f)))
    return EdgeCuts(frozenset(pairs), frozenset(bridges))


# ---- mutation (returns fresh values) --------------------------------------------

def delete_edges(E: Embedding, edge_ids: Iterable[int]) -> list[Embedding]:
    """Delete edges and any vertex left isolated; return connected components.

    Rotation order of surviving darts is preserved.  Each component inherits
    an outer dart from the region around the old outer face.
    """
    doomed = set(edge_ids)
    for e in doomed:
        if not 0 <= e < E.edge_count:
            raise UnknownEdge(f"edge {e} not in graph with {E.edge_count} edges")
    alive = [E.edge_of[d] not in doomed for d in range(E.dart_count)]

    # surviving darts in old-face order starting from the outer dart, spreading
    # through deleted edges; used to pick outer darts for the pieces
    fm = E.face_map
    region_order: list[int] = []
    seen_faces = {fm.dart_to_face[E.outer_dart]}
    queue = deque([(fm.dart_to_face[E.outer_dart], E.outer_dart)])
    while queue:
        fid, start = queue.popleft()
        darts = fm.faces[fid].darts
        i0 = darts.index(start)
        for d in darts[i0:] + darts[:i0]:
            if alive[d]:
                region_order.append(d)
            else:
                g = fm.dart_to_face[E.twin[d]]
                if g not in seen_faces:
                    seen_faces.add(g)
                    queue.append((g, E.twin[d]))

    rot_darts: dict[int, list[int]] = {}
    for v in range(E.vertex_count):
        ds = [d for d in E.darts_at(v) if alive[d]]
        if ds:
            rot_darts[v] = ds
    # components over surviving vertices
    comp_of: dict[int, int] = {}
    comps: list[list[int]] = []
    for v in sorted(rot_darts):
        if v in comp_of:
            continue
        cid = len(comps)
        members = []
        stack = [v]
        comp_of[v] = cid
        while stack:
            x = stack.pop()
            members.append(x)
            for d in rot_darts[x]:
                y = E.head(d)
                if y not in comp_of:
                    comp_of[y] = cid
                    stack.append(y)
        comps.append(sorted(members))

    out = []
    for members in comps:
        vmap = {v: i for i, v in enumerate(members)}
        rot = []
        dnew = {}
        dlabels = []
        for v in members:
            row = []
            for d in rot_darts[v]:
                dnew[d] = len(dlabels)
                dlabels.append(E.dlabel(d))
                row.append((vmap[E.head(d)], E.edge_of[d]))
            rot.append(row)
        outer = next((dnew[d] for d in region_order if d in dnew), 0)
        out.append(assemble(rot, outer, [E.vlabel(v) for v in members], dlabels))
    return out


def component_containing(components: Sequence[Embedding], marker_darts: Iterable[int]) -> Embedding:
    """The component holding every marker dart (given by dart label)."""
    marker = set(marker_darts)
    hits = []
    for c in components:
        labels = set(c.dlabel(d) for d in range(c.dart_count))
        inside = marker & labels
        if inside:
            hits.append((c, inside))
    if len(hits) != 1 or hits[0][1] != marker:
        raise MarkerSplit(f"marker spread over {len(hits)} components")
    return hits[0][0]


@dataclass(frozen=True)
class SuppressionMap:
    image: Embedding
    # per edge id of the image: source edge ids along the replaced path,
    # listed from the origin of the image edge's first dart
    edge_origin: tuple[tuple[int, ...], ...]
    face_bijection: dict[int, int]
    # per image dart: the source dart it continues
    dart_source: tuple[int, ...]

    def lift_edges(self, image_edges: Iterable[int]) -> list[int]:
        out: list[int] = []
        for e in image_edges:
            out.extend(self.edge_origin[e])
        return out


def suppress_degree2(E: Embedding) -> SuppressionMap:
    """Contract every maximal path through degree-2 vertices to one edge."""
    deg = degrees(E)
    for v, d in enumerate(deg):
        if d == 1 or d >= 4:
            raise BadDegree(f"vertex {v} has degree {d}")
    kept = [v for v, d in enumerate(deg) if d == 3]
    if not kept:
        raise DegenerateCycle("graph is a single cycle")
    vmap = {v: i for i, v in enumerate(kept)}
    rot = []
    source = []
    paths: dict[int, tuple[int, ...]] = {}
    for v in kept:
        row = []
        for d in E.darts_at(v):
            path = [E.edge_of[d]]
            t = E.twin[d]
            while deg[E.origin[t]] == 2:
                d2 = E.next[t]
                path.append(E.edge_of[d2])
                t = E.twin[d2]
            key = min(d, t)
            if d < t:
                paths[key] = tuple(path)
            row.append((vmap[E.origin[t]], key))
            source.append(d)
        rot.append(row)
    H = assemble(rot, 0, [E.vlabel(v) for v in kept], [E.dlabel(d) for d in source])
    h_of_source = {d: i for i, d in enumerate(source)}
    edge_origin = tuple(paths[min(source[a], source[b])] for a, b in H.edge_darts)
    fm = E.face_map
    bij = {}
    for f in fm.faces:
        d = next(x for x in f.darts if deg[E.origin[x]] == 3)
        bij[f.id] = H.face_map.dart_to_face[h_of_source[d]]
    outer_src = next(x for x in fm.faces[E.outer_face].darts if deg[E.origin[x]] == 3)
    H = H.with_outer_dart(h_of_source[outer_src])
    return SuppressionMap(H, edge_origin, bij, tuple(source))


# ---- canonical form ----------------------------------------------------------------

def canonical_code(E: Embedding) -> tuple[int, ...]:
    """Minimal BFS code over all starting darts and both orientations.

    Two connected embeddings get the same code iff they are isomorphic as
    plane maps (possibly via reflection).  Cost is O(D^2).
    """
    best: list[int] | None = None
    for step in (E.next, E.prev):
        for d0 in range(E.dart_count):
            code = _bfs_code(E, d0, step, best)
            if code is not None and (best is None or code < best):
                best = code
    return tuple(best or ())


def _bfs_code(E: Embedding, d0: int, step, best):
    """BFS code from ``d0``; ``None`` as soon as it exceeds ``best``."""
    number = {E.origin[d0]: 1}
    first = {E.origin[d0]: d0}
    queue = [E.origin[d0]]
    code: list[int] = []
    smaller = best is None

    def emit(sym: int) -> bool:
        nonlocal smaller
        if not smaller:
            b = best[len(code)]
            if sym > b:
                return False
            smaller = sym < b
        code.append(sym)
        return True

    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        d = first[v]
        while True:
            w = E.head(d)
            if w not in number:
                number[w] = len(number) + 1
                first[w] = E.twin[d]
                queue.append(w)
            if not emit(number[w]):
                return None
            d = step[d]
            if d == first[v]:
                break
        if not emit(0):
            return None
    return code


def fingerprint(E: Embedding) -> str:
    """Hex digest of the canonical code; equal for isomorphic plane maps."""
    code = canonical_code(E)
    h = hashlib.sha256()
    h.update(f"{E.vertex_count}:{E.edge_count}:".encode())
    h.update(",".join(map(str, code)).encode())
    return h.hexdigest()[:16]
