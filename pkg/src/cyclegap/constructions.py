"""Generators for the graph families used in the gap experiments.

All generators return validated embeddings with a designated outer face
and deterministic dart numbering.
"""

from __future__ import annotations

import random
import warnings
from collections import deque
from dataclasses import dataclass

from .embedding import (
    Embedding,
    assemble,
    build_embedding,
    connectivity_level,
    degrees,
    is_cubic,
    mirror,
)
from .errors import (
    BadParameters,
    LoopEdge,
    NotAMatching,
    NotCubic,
    PortMismatch,
    Stalled,
    UnknownName,
)


@dataclass(frozen=True)
class GadgetAttachment:
    gadget: Embedding
    ports: tuple[int, int, int, int]  # x_0, x_2k, y_0, y_2k


def _outer_by_vertices(E: Embedding, vertices) -> Embedding:
    """Re-root ``E`` at the face whose vertex set is exactly ``vertices``."""
    target = set(vertices)
    for f in E.face_map.faces:
        if set(f.vertices) == target and f.length == len(target):
            return E.with_outer_dart(f.darts[0])
    raise ValueError("no face with the requested vertex set")


def _keyed(rows: list[list[int]]) -> list[list[tuple[int, tuple[int, int]]]]:
    # simple graphs only: key each edge by its sorted endpoints
    return [[(w, (min(v, w), max(v, w))) for w in row] for v, row in enumerate(rows)]


# ---- the H_k gadget ----------------------------------------------------------------

def make_hk(k: int) -> GadgetAttachment:
    """Two (2k+1)-cycles with nested chords, joined by the edge x_k y_k.

    Each half is drawn as a ladder: rungs x_i x_{2k-i} stacked above the
    cycle edge x_0 x_2k with x_k on top.  The y half is the x half turned by
    180 degrees, so the ports x_0, x_2k, y_0, y_2k appear counterclockwise
    on the outer face.
    """
    if k < 1:
        raise BadParameters("make_hk needs k >= 1")
    m = 2 * k + 1

    def half(base: int, other_apex: int) -> list[list[int]]:
        x = lambda i: base + i  # noqa: E731
        rows = []
        for i in range(m):
            if i == 0:
                rows.append([x(2 * k), x(1)])
            elif i == 2 * k:
                rows.append([x(2 * k - 1), x(0)])
            elif i < k:
                rows.append([x(2 * k - i), x(i + 1), x(i - 1)])
            elif i == k:
                rows.append([other_apex, x(k - 1), x(k + 1)])
            else:
                rows.append([x(i - 1), x(2 * k - i), x(i + 1)])
        return rows

    rows = half(0, m + k) + half(m, k)
    E = build_embedding(rows)
    ports = (0, 2 * k, m, m + 2 * k)
    for f in E.face_map.faces:
        if set(ports) <= set(f.vertices):
            E = E.with_outer_dart(f.darts[0])
            break
    return GadgetAttachment(E, ports)


def port_distances(k: int) -> dict[tuple[int, int], int]:
    """Shortest-path lengths inside H_k between every pair of ports."""
    g = make_hk(k)
    E = g.gadget
    out = {}
    names = ("x0", "x2k", "y0", "y2k")
    for i, p in enumerate(g.ports):
        dist = {p: 0}
        q = deque([p])
        while q:
            v = q.popleft()
            for w, _ in E.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    q.append(w)
        for j in range(i + 1, 4):
            out[(names[i], names[j])] = dist[g.ports[j]]
    return out


# ---- frames and classic fixtures -------------------------------------------------------

def make_dn(n: int) -> Embedding:
    """Two n-cycles u, v and a 2n-cycle w with spokes v_i w_{2i-1}, u_i w_{2i}.

    Vertex numbering: u_i -> i-1, v_i -> n+i-1, w_j -> 2n+j-1.  The v-cycle
    is innermost, the u-cycle bounds the outer face.
    """
    if n < 3:
        raise BadParameters("make_dn needs n >= 3")
    u = lambda i: (i - 1) % n  # noqa: E731
    v = lambda i: n + (i - 1) % n  # noqa: E731
    w = lambda j: 2 * n + (j - 1) % (2 * n)  # noqa: E731
    rows = []
    for i in range(1, n + 1):
        rows.append([w(2 * i), u(i - 1), u(i + 1)])
    for i in range(1, n + 1):
        rows.append([w(2 * i - 1), v(i + 1), v(i - 1)])
    for j in range(1, 2 * n + 1):
        if j % 2:
            rows.append([v((j + 1) // 2), w(j - 1), w(j + 1)])
        else:
            rows.append([u(j // 2), w(j + 1), w(j - 1)])
    return _outer_by_vertices(build_embedding(rows), range(n))


def dn_matching(n: int) -> list[tuple[int, int]]:
    """The perfect matching {v_i w_{2i-1}, u_i w_{2i}} of make_dn(n), as (u_i, w), (v_i, w) pairs."""
    pairs = []
    for i in range(1, n + 1):
        pairs.append((i - 1, 2 * n + 2 * i - 1))
        pairs.append((n + i - 1, 2 * n + 2 * i - 2))
    return pairs


def make_prism(m: int) -> Embedding:
    """Inner m-cycle a_i, outer m-cycle b_i, spokes a_i b_i; outer face = b-cycle."""
    if m < 3:
        raise BadParameters("prism needs m >= 3")
    rows = []
    for i in range(m):
        rows.append([m + i, (i + 1) % m, (i - 1) % m])
    for i in range(m):
        rows.append([i, m + (i - 1) % m, m + (i + 1) % m])
    return _outer_by_vertices(build_embedding(rows), range(m, 2 * m))


def make_fan_ring(k: int) -> Embedding:
    """A 3k-cycle v_1..v_3k plus hubs u_i joined to v_{3i-2}, v_{3i-1}, v_{3i}.

    Hubs sit inside the rim; the outer face is the rim.
    """
    if k < 2:
        raise BadParameters("make_fan_ring needs k >= 2")
    r = 3 * k
    rows = []
    for j in range(r):
        rows.append([r + j // 3, (j - 1) % r, (j + 1) % r])
    for i in range(k):
        rows.append([3 * i, 3 * i + 1, 3 * i + 2])
    return _outer_by_vertices(build_embedding(rows), range(r))


def triangle_expand(G: Embedding) -> Embedding:
    """Replace every vertex by a triangle, keeping the rotation order.

    The vertex sitting on the i-th dart of v gets id 3v+i.
    """
    if not is_cubic(G):
        raise NotCubic("triangle_expand needs a cubic graph")
    rot = []
    for v in range(G.vertex_count):
        ds = G.darts_at(v)
        for i, d in enumerate(ds):
            t = G.twin[d]
            w = G.origin[t]
            j = G.darts_at(w).index(t)
            rot.append([
                (3 * w + j, ("x", G.edge_of[d])),
                (3 * v + (i + 1) % 3, ("t", v, i)),
                (3 * v + (i - 1) % 3, ("t", v, (i - 1) % 3)),
            ])
    v0 = G.origin[G.outer_dart]
    i0 = G.darts_at(v0).index(G.outer_dart)
    return assemble(rot, 3 * (3 * v0 + i0))


# ---- edge replacement -----------------------------------------------------------

def _outer_port_slots(g: GadgetAttachment) -> tuple[Embedding, dict[int, int]]:
    """Gadget oriented so ports run x_0, x_2k, y_0, y_2k along the outer face.

    Returns the gadget and, per port, the dart after which the external
    edge is inserted in the port's rotation.
    """
    E = g.gadget
    for attempt in (E, mirror(E)):
        fm = attempt.face_map
        outer = attempt.outer_face
        seq = [attempt.origin[d] for d in fm.faces[outer].darts if attempt.origin[d] in g.ports]
        if len(seq) != 4 or len(set(seq)) != 4:
            raise PortMismatch("ports must appear once each on the gadget's outer face")
        i = seq.index(g.ports[0])
        if tuple(seq[i:] + seq[:i]) == g.ports:
            slots = {}
            for p in g.ports:
                for t in attempt.darts_at(p):
                    if fm.dart_to_face[attempt.next[t]] == outer:
                        slots[p] = t
                        break
            return attempt, slots
    raise PortMismatch("port order on the outer face matches neither orientation")


def _replace(D: Embedding, u: int, v: int, g: GadgetAttachment):
    """Replace edge uv; returns (new embedding, old->new vertex map)."""
    if u == v:
        raise LoopEdge("cannot replace a loop")
    if not is_cubic(D):
        raise NotCubic("replace_edge needs a cubic host")
    du = next((d for d in D.darts_at(u) if D.head(d) == v), None)
    if du is None:
        raise PortMismatch(f"{u} and {v} are not adjacent")
    dv = D.twin[du]
    gadget, slots = _outer_port_slots(g)
    slot_port = {
        D.next[du]: g.ports[0],
        D.next[D.next[du]]: g.ports[1],
        D.next[dv]: g.ports[2],
        D.next[D.next[dv]]: g.ports[3],
    }
    survivors = [x for x in range(D.vertex_count) if x not in (u, v)]
    vmap = {x: i for i, x in enumerate(survivors)}
    base = len(survivors)
    port_slot = {p: s for s, p in slot_port.items()}

    rot = []
    tags = []  # per new dart: the old dart of D it continues, or None
    for x in survivors:
        row = []
        for d in D.darts_at(x):
            h = D.head(d)
            if h in (u, v):
                row.append((base + slot_port[D.twin[d]], ("D", D.edge_of[d])))
            else:
                row.append((vmap[h], ("D", D.edge_of[d])))
            tags.append(d)
        rot.append(row)
    for gv in range(gadget.vertex_count):
        row = []
        for t in gadget.darts_at(gv):
            row.append((base + gadget.head(t), ("G", gadget.edge_of[t])))
            tags.append(None)
            if gv in slots and t == slots[gv]:
                s = port_slot[gv]
                row.append((vmap[D.head(s)], ("D", D.edge_of[s])))
                tags.append(s)
        rot.append(row)
    image = {d: i for i, d in enumerate(tags) if d is not None}
    od = D.outer_dart
    while od not in image:
        od = D.next[D.twin[od]]
    E = assemble(rot, image[od])
    return E, vmap


def replace_edge(D: Embedding, e: int, g: GadgetAttachment, check_connectivity: bool = True) -> Embedding:
    """D(e, g): delete both ends of edge ``e`` and wire in a copy of ``g``.

    With ``e = uv`` (u = origin of the edge's first dart), u's other
    neighbors in rotation order after ``e`` attach to x_0, x_2k and v's to
    y_0, y_2k.
    """
    u, v = D.edges[e]
    E, _ = _replace(D, u, v, g)
    if not is_cubic(E):
        raise NotCubic("replacement produced a non-cubic graph")
    if check_connectivity and connectivity_level(D) >= 3:
        assert connectivity_level(E) >= 3, "replacement broke 3-connectivity"
    return E


def replace_matching(D: Embedding, M, k: int, check_connectivity: bool = True) -> Embedding:
    """D(M, H_k): replace the matching edges one by one in ascending edge order.

    ``M`` holds edge ids or ``(u, v)`` vertex pairs of ``D``.
    """
    pairs = []
    for item in M:
        if isinstance(item, int):
            pairs.append((item, D.edges[item]))
        else:
            a, b = item
            eid = next((D.edge_of[d] for d in D.darts_at(a) if D.head(d) == b), None)
            if eid is None:
                raise NotAMatching(f"{a}-{b} is not an edge")
            pairs.append((eid, D.edges[eid]))
    pairs.sort()
    used: set[int] = set()
    for eid, (a, b) in pairs:
        if a in used or b in used or a == b:
            raise NotAMatching(f"edge {eid} shares a vertex with another matching edge")
        used.update((a, b))
    g = make_hk(k)
    E = D
    cur = {x: x for x in range(D.vertex_count)}
    for _, (a, b) in pairs:
        E, vmap = _replace(E, cur[a], cur[b], g)
        cur = {x: vmap[y] for x, y in cur.items() if y in vmap}
    if check_connectivity and connectivity_level(D) >= 3:
        assert connectivity_level(E) >= 3, "replacement broke 3-connectivity"
    return E


def make_gnk(n: int, k: int, check_connectivity: bool = True) -> Embedding:
    """G(n, k) = D_n with every matching edge replaced by H_{k-1}."""
    if k < 2:
        raise BadParameters("make_gnk needs k >= 2")
    if n < 4 * k + 2:
        warnings.warn(f"G({n},{k}): n < 4k+2, outside the range where the gap is proven",
                      stacklevel=2)
    return replace_matching(make_dn(n), dn_matching(n), k - 1, check_connectivity)


# ---- catalog ------------------------------------------------------------------------

K4_ROTATIONS = [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def _catalog():
    return {
        "k4": lambda: build_embedding(K4_ROTATIONS),
        "theta": lambda: build_embedding([[1, 1, 1], [0, 0, 0]]),
        "prism": lambda: make_prism(3),
        "cube": lambda: make_prism(4),
        "pentagonal_prism": lambda: make_prism(5),
        "dodecahedron": lambda: make_dn(5),
        "truncated_tetrahedron": lambda: triangle_expand(build_embedding(K4_ROTATIONS)),
    }


CATALOG_NAMES = tuple(_catalog())


def catalog(name: str) -> Embedding:
    try:
        return _catalog()[name]()
    except KeyError:
        raise UnknownName(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG_NAMES)}") from None


# ---- random growth ------------------------------------------------------------------

def random_c3cp(n: int, seed: int = 0, max_retries: int = 1000) -> Embedding:
    """Random 3-connected cubic plane graph on ``n`` vertices, grown from K4.

    Each move subdivides two distinct edges of one face and joins the two
    new vertices across that face.
    """
    if n < 4 or n % 2:
        raise BadParameters("random_c3cp needs an even n >= 4")
    rng = random.Random(seed)
    rows = [list(r) for r in K4_ROTATIONS]
    E = build_embedding(rows)
    while E.vertex_count < n:
        for _ in range(max_retries):
            fm = E.face_map
            face = fm.faces[rng.randrange(len(fm.faces))]
            i, j = sorted(rng.sample(range(face.length), 2))
            cand = _grow(rows, E, face.darts[i], face.darts[j])
            G = build_embedding(cand)
            if connectivity_level(G) >= 3:
                rows, E = cand, G
                break
        else:
            raise Stalled(f"no 3-connected move found after {max_retries} tries")
    return E


def _grow(rows: list[list[int]], E: Embedding, d1: int, d2: int) -> list[list[int]]:
    rows = [list(r) for r in rows]
    p, q = len(rows), len(rows) + 1
    for new, other, d in ((p, q, d1), (q, p, d2)):
        a, b = E.origin[d], E.head(d)
        rows[a][rows[a].index(b)] = new
        rows[b][rows[b].index(a)] = new
        # the face lies in the angle after a at the new vertex
        rows.append([a, other, b])
    return rows


def check_gadget(g: GadgetAttachment) -> bool:
    """Ports have degree 2, every other vertex degree 3."""
    deg = degrees(g.gadget)
    return all((deg[v] == 2) == (v in g.ports) and deg[v] in (2, 3) for v in range(len(deg)))
