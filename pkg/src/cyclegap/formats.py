"""planar_code, JSON and graph6 readers/writers."""

from __future__ import annotations

import json
from typing import Iterable

from .embedding import Embedding, build_embedding
from .errors import (
    BadHeader,
    CycleGapError,
    FormatError,
    InconsistentAdjacency,
    SchemaViolation,
    TooLarge,
    TruncatedRecord,
)
from .spectrum import SimpleGraph

PLANAR_CODE_HEADER = b">>planar_code<<"
GRAPH6_HEADER = b">>graph6<<"


def parse_planar_code(data: bytes) -> list[Embedding]:
    """Read plantri's basic planar_code (one size byte, 0-terminated rotations).

    The outer face of each graph is the face of vertex 1's first dart.
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise BadHeader("missing >>planar_code<< header")
    pos = len(PLANAR_CODE_HEADER)
    graphs = []
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise FormatError("two-byte planar_code entries are not supported")
        rows = []
        for v in range(n):
            row = []
            while True:
                if pos >= len(data):
                    raise TruncatedRecord(f"graph {len(graphs)} ends inside vertex {v + 1}")
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise InconsistentAdjacency(f"neighbor {b} exceeds vertex count {n}")
                row.append(b - 1)
            rows.append(row)
        graphs.append(build_embedding(rows))
    return graphs


def write_planar_code(graphs: Iterable[Embedding]) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for E in graphs:
        if E.vertex_count > 255:
            raise TooLarge(f"{E.vertex_count} vertices; planar_code records hold at most 255")
        out.append(E.vertex_count)
        for row in E.rotations():
            out.extend(w + 1 for w in row)
            out.append(0)
    return bytes(out)


def to_json_obj(E: Embedding) -> dict:
    return {"n": E.vertex_count, "rotations": E.rotations(), "outer_face_dart": E.outer_dart}


def from_json_obj(obj) -> Embedding:
    if not isinstance(obj, dict) or set(obj) != {"n", "rotations", "outer_face_dart"}:
        raise SchemaViolation('expected keys "n", "rotations", "outer_face_dart"')
    n, rot, od = obj["n"], obj["rotations"], obj["outer_face_dart"]
    if not isinstance(n, int) or not isinstance(rot, list) or len(rot) != n:
        raise SchemaViolation('"n" must equal the number of rotation lists')
    if not all(isinstance(r, list) and all(isinstance(w, int) for w in r) for r in rot):
        raise SchemaViolation("rotations must be lists of integers")
    if not isinstance(od, int):
        raise SchemaViolation('"outer_face_dart" must be an integer')
    try:
        E = build_embedding(rot)
    except InconsistentAdjacency as exc:
        raise SchemaViolation(str(exc)) from None
    if not 0 <= od < E.dart_count:
        raise SchemaViolation("outer_face_dart out of range")
    return E.with_outer_dart(od)


def dumps_json(E: Embedding) -> str:
    return json.dumps(to_json_obj(E), separators=(",", ":")) + "\n"


def loads_json(text: str | bytes) -> list[Embedding]:
    try:
        obj = json.loads(text)
    except ValueError as exc:
        raise SchemaViolation(f"invalid JSON: {exc}") from None
    if isinstance(obj, list):
        return [from_json_obj(o) for o in obj]
    return [from_json_obj(obj)]


def parse_graph6(data: bytes) -> list[SimpleGraph]:
    """graph6 lines (abstract graphs only: no embedding)."""
    import networkx as nx

    out = []
    for line in data.splitlines():
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            continue
        try:
            g = nx.from_graph6_bytes(line)
        except (nx.NetworkXError, ValueError) as exc:
            raise FormatError(f"bad graph6 line: {exc}") from None
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in g.edges()))
        out.append(SimpleGraph(g.number_of_nodes(), edges))
    return out


def to_graph6(G) -> bytes:
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from(range(G.vertex_count))
    g.add_edges_from(G.edges)
    return nx.to_graph6_bytes(g, header=False)


def sniff(data: bytes) -> str:
    if data.startswith(PLANAR_CODE_HEADER):
        return "pc"
    head = data.lstrip()[:1]
    if head in (b"{", b"["):
        try:
            json.loads(data)
            return "json"
        except ValueError:
            pass
    if data.startswith(GRAPH6_HEADER) or (head and 63 <= head[0] <= 126):
        return "graph6"
    raise FormatError("unrecognised graph file format")


def read_graphs(data: bytes):
    """Embeddings (planar_code / JSON) or SimpleGraphs (graph6)."""
    kind = sniff(data)
    try:
        if kind == "pc":
            return parse_planar_code(data)
        if kind == "json":
            return loads_json(data)
        return parse_graph6(data)
    except FormatError:
        raise
    except CycleGapError as exc:
        raise FormatError(f"{type(exc).__name__}: {exc}") from exc


def write_graph(E: Embedding, fmt: str) -> bytes:
    if fmt == "pc":
        return write_planar_code([E])
    if fmt == "json":
        return dumps_json(E).encode()
    raise FormatError(f"unknown output format {fmt!r}")
