"""Executable versions of the long-face lemma, the face-gluing reduction
and the face-counting argument behind the interval theorem.

Every procedure works on an explicit plane embedding whose outer face is
``E.outer_face``; "interior" always means the side of a cycle away from it.
Hypothesis checks are kept separate so the procedures can also be run on
graphs that violate them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .embedding import (
    Embedding,
    component_containing,
    connectivity_level,
    degrees,
    delete_edges,
    face_adjacency,
    suppress_degree2,
    two_edge_cuts,
)
from .errors import (
    BadStart,
    BudgetExhausted,
    CircumferenceTooSmall,
    MarkerDestroyed,
    MarkerTooShort,
    NoSingleCycleEdge,
)
from .spectrum import (
    DEFAULT_BUDGET,
    CycleWitness,
    circumference,
    edge_set_to_witness,
    exists_cycle_in_range,
    shortest_cycle_in_range,
    validate_witness,
)

THEOREM_SLACK = 9  # window [k, 2k+9]


# ---- outcomes -----------------------------------------------------------------------

@dataclass(frozen=True)
class MidCycle:
    witness: CycleWitness
    stage: str = "direct"
    kind = "MidCycle"


@dataclass(frozen=True)
class LongFace:
    face: int
    witness: CycleWitness
    kind = "LongFace"


@dataclass(frozen=True)
class Contradiction:
    audit: "AuditReport"
    kind = "Contradiction"


@dataclass(frozen=True)
class HypothesisFailed:
    reason: str
    kind = "HypothesisFailed"


# ---- lemma: a long cycle yields a mid cycle or a long face ----------------------------

def interior_faces(E: Embedding, cycle_edges) -> set[int]:
    """Faces on the side of the cycle that does not contain the outer face."""
    fm = E.face_map
    cyc = set(cycle_edges)
    adj: dict[int, list[int]] = {f.id: [] for f in fm.faces}
    for e, (a, b) in enumerate(fm.edge_faces):
        if e not in cyc and a != b:
            adj[a].append(b)
            adj[b].append(a)
    outside = {E.outer_face}
    stack = [E.outer_face]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            if g not in outside:
                outside.add(g)
                stack.append(g)
    return {f.id for f in fm.faces} - outside


def facial_id(E: Embedding, cycle_edges) -> int | None:
    cyc = set(cycle_edges)
    for f in E.face_map.faces:
        if len(f.edges) == len(cyc) and set(f.edges) == cyc:
            return f.id
    return None


def _face_witness(E: Embedding, fid: int) -> CycleWitness:
    f = E.face_map.faces[fid]
    return CycleWitness(f.vertices, f.edges)


@dataclass
class DescentTrace:
    lengths: list[int] = field(default_factory=list)
    interior_counts: list[int] = field(default_factory=list)


def long_face_or_midcycle(E: Embedding, k: int, c: int, start: CycleWitness,
                          trace: DescentTrace | None = None):
    """Peel interior faces off a long cycle until a mid cycle or a long face shows up.

    Returns :class:`MidCycle` (length in [k, 2k+c]) or :class:`LongFace`
    (a facial cycle longer than 2k+c).  A start cycle already inside the
    window is returned as the mid cycle.
    """
    hi = 2 * k + c
    if not validate_witness(E, start):
        raise BadStart("start is not a cycle of the graph")
    if start.length < k:
        raise BadStart(f"start has length {start.length} < k = {k}")
    if start.length <= hi:
        return MidCycle(start, "start")
    trace = trace if trace is not None else DescentTrace()
    fm = E.face_map
    cur = set(start.edges)
    inside = interior_faces(E, cur)
    while True:
        trace.lengths.append(len(cur))
        trace.interior_counts.append(len(inside))
        fid = facial_id(E, cur)
        if fid is not None:
            return LongFace(fid, _face_witness(E, fid))
        chosen = None
        for e in sorted(cur):
            a, b = fm.edge_faces[e]
            ce = a if a in inside else b
            length = fm.faces[ce].length
            if k <= length <= hi:
                return MidCycle(_face_witness(E, ce), "descent-face")
            if length > hi:
                return LongFace(ce, _face_witness(E, ce))
            if chosen is None:
                diff = cur ^ set(fm.faces[ce].edges)
                if edge_set_to_witness(E, diff) is not None:
                    chosen = diff
        if chosen is None:
            raise NoSingleCycleEdge(
                f"no edge of the {len(cur)}-cycle gives a single-cycle symmetric difference; "
                f"cycle edges {sorted(cur)}")
        new_inside = interior_faces(E, chosen)
        assert len(new_inside) < len(inside), "interior face count did not decrease"
        cur, inside = chosen, new_inside
        if k <= len(cur) <= hi:
            trace.lengths.append(len(cur))
            trace.interior_counts.append(len(inside))
            return MidCycle(edge_set_to_witness(E, cur), "descent-cycle")


# ---- lemma: glue adjacent short faces ----------------------------------------------

@dataclass(frozen=True)
class GlueStep:
    faces: tuple[int, int]
    lengths: tuple[int, int]
    deleted: tuple[int, ...]  # edge ids in the graph before the step


@dataclass
class ReductionResult:
    reduced: Embedding
    marker: CycleWitness  # in vertex / edge ids of ``reduced``
    marker_face: int
    marker_labels: frozenset[int]  # dart ids of the input graph
    glue_log: list[GlueStep]
    properties: dict[str, bool]


def _marker_face_in(E: Embedding, labels: frozenset[int]) -> int | None:
    darts = [d for d in range(E.dart_count) if E.dlabel(d) in labels]
    if len(darts) != len(labels):
        return None
    faces = {E.face_map.dart_to_face[d] for d in darts}
    return faces.pop() if len(faces) == 1 else None


def reduce_glue(G: Embedding, k: int, marker: int) -> ReductionResult:
    """Repeatedly delete the edges shared by two adjacent faces of length < k.

    Pairs are taken smallest face ids first; after each deletion only the
    component holding the marker face is kept.  The hypothesis that no cycle
    length lies in [k, 2k] is not checked here.
    """
    G = G.fresh_labels()
    fm = G.face_map
    if not 0 <= marker < len(fm.faces):
        raise MarkerTooShort(f"no face {marker}")
    if fm.faces[marker].length < 2 * k + 1:
        raise MarkerTooShort(f"marker face has length {fm.faces[marker].length} < 2k+1 = {2 * k + 1}")
    labels = frozenset(fm.faces[marker].darts)
    cur = G
    log: list[GlueStep] = []
    while True:
        cfm = cur.face_map
        adj, edge_faces = face_adjacency(cfm)
        short = {f.id for f in cfm.faces if f.length < k}
        pair = None
        for a in sorted(short):
            bs = sorted(b for b in adj[a] if b in short and b > a)
            if bs:
                pair = (a, bs[0])
                break
        if pair is None:
            break
        a, b = pair
        shared = tuple(e for e, fs in enumerate(edge_faces) if set(fs) == {a, b})
        comps = delete_edges(cur, shared)
        cur_len = cur.edge_count
        cur = component_containing(comps, labels) if len(comps) > 1 else comps[0]
        assert cur.edge_count < cur_len
        log.append(GlueStep(pair, (cfm.faces[a].length, cfm.faces[b].length), shared))
        if _marker_face_in(cur, labels) is None:
            raise MarkerDestroyed("a marker edge was deleted")
    mf = _marker_face_in(cur, labels)
    if mf is None:
        raise MarkerDestroyed("marker face lost")
    res = ReductionResult(cur, _face_witness(cur, mf), mf, labels, log, {})
    res.properties.update(check_abc(res, k))
    return res


def check_abc(R: ReductionResult, k: int) -> dict[str, bool]:
    """Re-derive properties (A), (B), (C) of a reduction from scratch."""
    E = R.reduced
    fm = E.face_map
    lengths = [f.length for f in fm.faces]
    a_ok = True
    for x, y in fm.edge_faces:
        if x != y and lengths[x] < k and lengths[y] < k:
            a_ok = False
            break
    present = {E.dlabel(d) for d in range(E.dart_count)}
    b_ok = R.marker_labels <= present
    cuts = two_edge_cuts(E)
    c_ok = not cuts.bridges
    for e in cuts.edges_in_cuts():
        x, y = fm.edge_faces[e]
        lx, ly = sorted((lengths[x], lengths[y]))
        if not (lx < k and ly > 2 * k):
            c_ok = False
            break
    return {"A": a_ok, "B": b_ok, "C": c_ok}


# ---- the counting argument -----------------------------------------------------------

@dataclass(frozen=True)
class Inequality:
    name: str
    lhs: int | float
    relation: str
    rhs: int | float
    holds: bool


def _check(name: str, lhs, relation: str, rhs) -> Inequality:
    ops = {"==": lhs == rhs, "<=": lhs <= rhs, ">=": lhs >= rhs, "<": lhs < rhs, ">": lhs > rhs}
    return Inequality(name, lhs, relation, rhs, ops[relation])


@dataclass
class AuditReport:
    k: int
    n: int
    x: int
    y: int
    mid_faces: list[tuple[int, int]]  # (face id, length), shortest first
    min_face_H: int
    sum_X_in_H: int
    sum_Y_in_H: int
    sum_X: int
    sum_Y: int
    lines: list[Inequality]
    mid_witness: CycleWitness | None = None

    def line(self, name: str) -> Inequality:
        return next(q for q in self.lines if q.name == name)

    @property
    def failed(self) -> list[str]:
        return [q.name for q in self.lines if not q.holds]

    @property
    def consistent(self) -> bool:
        """All lines hold and there are no mid faces: the state the theorem rules out."""
        return not self.failed and not self.mid_faces


def audit_counts(Gp: Embedding, k: int) -> AuditReport:
    """Evaluate every step of the face-counting chain on actual quantities.

    Faces are split into X (length < k), Y (length > 2k+9) and the rest.
    Lengths in H come from suppressing the degree-2 vertices of ``Gp``.
    """
    S = suppress_degree2(Gp)
    H = S.image
    n = H.vertex_count
    fm = Gp.face_map
    lh = H.face_map.lengths()
    hi = 2 * k + THEOREM_SLACK
    X, Y, mid = [], [], []
    for f in fm.faces:
        (X if f.length < k else Y if f.length > hi else mid).append(f)
    x, y = len(X), len(Y)
    sum_X_H = sum(lh[S.face_bijection[f.id]] for f in X)
    sum_Y_H = sum(lh[S.face_bijection[f.id]] for f in Y)
    sum_X = sum(f.length for f in X)
    sum_Y = sum(f.length for f in Y)
    min_face_H = min(lh)
    half_n = n // 2 if n % 2 == 0 else n / 2  # integral for cubic H
    lines = [
        _check("euler", x + y + len(mid), "==", half_n + 2),
        _check("no_2_faces", min_face_H, ">=", 3),
        _check("eq2_left", n, ">=", sum_X_H),
        _check("eq2_right", sum_X_H, ">=", 3 * x),
        _check("eq2", n, ">=", 3 * x),
        _check("eq3", sum_Y_H, "<=", 3 * n - 3 * x),
        _check("eq4_left", sum_Y, "<=", sum_Y_H + sum_X),
        _check("eq4", sum_Y, "<=", 3 * n + (k - 4) * x),
        _check("eq5_left", sum_Y, ">=", (2 * k + 10) * y),
        _check("eq5", (2 * k + 10) * (half_n + 2 - x), ">", (k + 5) * n - (2 * k + 10) * x),
        _check("final", (k + 2) * n, "<", 3 * (k + 2) * x),
    ]
    mid_pairs = sorted(((f.id, f.length) for f in mid), key=lambda p: (p[1], p[0]))
    mw = None
    if mid:
        f = fm.faces[mid_pairs[0][0]]
        if len(set(f.vertices)) == f.length:
            mw = CycleWitness(f.vertices, f.edges)
    return AuditReport(k, n, x, y, mid_pairs, min_face_H, sum_X_H, sum_Y_H, sum_X, sum_Y, lines, mw)


# ---- end-to-end check of the interval theorem ---------------------------------------

@dataclass
class VerifyRecord:
    k: int
    direct: str  # found / empty / unknown
    outcome: object
    circumference_bound: int
    nodes: int
    pipeline: list[tuple[str, object]] = field(default_factory=list)
    pipeline_outcome: object = None


def verify_interval_theorem(G: Embedding, k: int, budget: int = DEFAULT_BUDGET,
                            pipeline: bool = False) -> VerifyRecord:
    """Check that some cycle length lies in [k, 2k+9].

    The direct check returns the shortest cycle in the window.  With
    ``pipeline`` the proof's procedures run as well: hypothesis check on
    [k, 2k], long-face descent, face gluing and the counting audit.  Ending
    with a consistent audit would contradict the theorem and raises.
    """
    hi = 2 * k + THEOREM_SLACK
    circ = circumference(G, budget)
    if circ.lower_bound < k:
        if circ.exact:
            raise CircumferenceTooSmall(f"circumference {circ.lower_bound} < k = {k}")
        raise BudgetExhausted(f"circumference >= k not established within {budget} nodes")
    direct = shortest_cycle_in_range(G, k, hi, budget)
    nodes = circ.nodes_explored + direct.nodes_explored
    if direct.status == "found":
        outcome = MidCycle(direct.witness, "direct")
    elif direct.status == "empty":
        outcome = HypothesisFailed(f"no cycle length in [{k}, {hi}] (counterexample?)")
    else:
        outcome = None
    rec = VerifyRecord(k, direct.status, outcome, circ.lower_bound, nodes)
    if pipeline:
        rec.pipeline_outcome = _pipeline(G, k, budget, circ, rec.pipeline)
    return rec


def _pipeline(G: Embedding, k: int, budget: int, circ, log: list):
    hi = 2 * k + THEOREM_SLACK
    hyp = exists_cycle_in_range(G, k, 2 * k, budget)
    log.append(("hypothesis", hyp.status))
    if hyp.status == "found":
        return MidCycle(hyp.witness, "hypothesis")
    if hyp.status == "unknown":
        return HypothesisFailed("budget exhausted while checking [k, 2k]")
    start = circ.witness
    if start.length <= hi:
        return MidCycle(start, "long-cycle")
    res = long_face_or_midcycle(G, k, THEOREM_SLACK, start)
    log.append(("long_face", res.kind))
    if isinstance(res, MidCycle):
        return res
    R = reduce_glue(G, k, res.face)
    log.append(("reduce", dict(R.properties, steps=len(R.glue_log))))
    audit = audit_counts(R.reduced, k)
    log.append(("audit", audit.failed))
    if audit.mid_witness is not None:
        # faces of the reduced graph are cycles of G; map back through labels
        fid = audit.mid_faces[0][0]
        labels = {R.reduced.dlabel(d) for d in R.reduced.face_map.faces[fid].darts}
        edges = sorted({G.edge_of[d] for d in labels})
        return MidCycle(edge_set_to_witness(G, edges), "audit")
    if audit.consistent:
        raise AssertionError("counting audit is fully consistent; this contradicts the theorem")
    return Contradiction(audit)


def hypothesis_holds(G, k: int, budget: int = DEFAULT_BUDGET) -> bool | None:
    """Whether no cycle length lies in [k, 2k]; ``None`` if the budget ran out."""
    r = exists_cycle_in_range(G, k, 2 * k, budget)
    return None if r.status == "unknown" else r.status == "empty"


def reduced_is_2_connected(R: ReductionResult) -> bool:
    return connectivity_level(R.reduced) >= 2 and min(degrees(R.reduced)) >= 2
