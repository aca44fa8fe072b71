"""Fixture corpus: named graphs with lazily cached facts."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .constructions import (
    CATALOG_NAMES,
    catalog,
    make_dn,
    make_fan_ring,
    make_gnk,
    make_prism,
    random_c3cp,
    triangle_expand,
)
from .embedding import Embedding, connectivity_level, is_cubic
from .formats import read_graphs
from .spectrum import (
    DEFAULT_BUDGET,
    CircumferenceResult,
    IntervalResult,
    circumference,
    exists_cycle_in_range,
    girth,
    is_multigraph,
)


@dataclass
class CorpusEntry:
    source: tuple  # ("file", path, index) or ("gen", name, params...)
    embedding: Embedding
    facts: dict = field(default_factory=dict, repr=False)

    @property
    def name(self) -> str:
        return ":".join(str(s) for s in self.source[1:])

    def girth(self) -> int:
        if "girth" not in self.facts:
            self.facts["girth"] = girth(self.embedding).length
        return self.facts["girth"]

    def circumference(self, budget: int = DEFAULT_BUDGET) -> CircumferenceResult:
        key = ("circumference", budget)
        if key not in self.facts:
            self.facts[key] = circumference(self.embedding, budget)
        return self.facts[key]

    def window(self, a: int, b: int, budget: int = DEFAULT_BUDGET) -> IntervalResult:
        key = ("window", a, b, budget)
        if key not in self.facts:
            self.facts[key] = exists_cycle_in_range(self.embedding, a, b, budget)
        return self.facts[key]

    def connectivity(self) -> int:
        if "connectivity" not in self.facts:
            self.facts["connectivity"] = connectivity_level(self.embedding)
        return self.facts["connectivity"]

    def is_2c_cubic(self) -> bool:
        return is_cubic(self.embedding) and self.connectivity() >= 2


def fixture_corpus(include_large: bool = False) -> list[CorpusEntry]:
    """Generated fixtures: the catalog plus small members of every family."""
    out = [CorpusEntry(("gen", "catalog", name), catalog(name)) for name in CATALOG_NAMES]
    for m in (6, 7):
        out.append(CorpusEntry(("gen", "prism", m), make_prism(m)))
    for n in (3, 4, 6):
        out.append(CorpusEntry(("gen", "dn", n), make_dn(n)))
    for k in (2, 3, 4):
        out.append(CorpusEntry(("gen", "fanring", k), make_fan_ring(k)))
    out.append(CorpusEntry(("gen", "triexpand", "cube"), triangle_expand(catalog("cube"))))
    out.append(CorpusEntry(("gen", "triexpand", "dodecahedron"),
                           triangle_expand(catalog("dodecahedron"))))
    if include_large:
        out.append(CorpusEntry(("gen", "gnk", 10, 2), make_gnk(10, 2)))
    return out


def random_corpus(count: int = 50, max_n: int = 36) -> list[CorpusEntry]:
    """Seeded random 3-connected cubic plane graphs with 4..max_n vertices."""
    sizes = list(range(4, max_n + 1, 2))
    return [
        CorpusEntry(("gen", "random", sizes[s % len(sizes)], s), random_c3cp(sizes[s % len(sizes)], s))
        for s in range(count)
    ]


def load_corpus(directory: str | Path) -> list[CorpusEntry]:
    """Every ``*.pc`` / ``*.json`` file in ``directory`` (sorted), every graph in it."""
    out = []
    for path in sorted(Path(directory).iterdir()):
        if path.suffix not in (".pc", ".json") or not path.is_file():
            continue
        for i, E in enumerate(read_graphs(path.read_bytes())):
            out.append(CorpusEntry(("file", path.name, i), E))
    return out


# ---- checks ---------------------------------------------------------------------

def check_euler(entry: CorpusEntry) -> tuple[bool | None, str]:
    """F = n/2 + 2 and a face of length <= 5 (2-connected cubic entries only)."""
    E = entry.embedding
    if not entry.is_2c_cubic():
        return None, "skipped: not 2-connected cubic"
    F = E.face_count
    ok = 2 * F == E.vertex_count + 4 and min(E.face_map.lengths()) <= 5
    return ok, f"F={F} n/2+2={E.vertex_count // 2 + 2} min_face={min(E.face_map.lengths())}"


def check_face5(entry: CorpusEntry, budget: int = DEFAULT_BUDGET) -> tuple[bool | None, str]:
    """Some face has length <= 5 and some cycle length lies in [4, 10] (simple graphs)."""
    E = entry.embedding
    if not entry.is_2c_cubic():
        return None, "skipped: not 2-connected cubic"
    if is_multigraph(E):
        return None, "skipped: parallel edges"
    r = entry.window(4, 10, budget)
    if r.status == "unknown":
        return None, "unknown: budget exhausted"
    ok = r.found and min(E.face_map.lengths()) <= 5
    return ok, f"[4,10] {r.status}" + (f" (length {r.witness.length})" if r.found else "")


def check_theorem(entry: CorpusEntry, kmax: int, budget: int = DEFAULT_BUDGET) -> tuple[bool | None, str]:
    """For k = 3..min(kmax, circumference): some cycle length lies in [k, 2k+9]."""
    E = entry.embedding
    if not is_cubic(E) or is_multigraph(E) or entry.connectivity() < 3:
        return None, "skipped: not a simple 3-connected cubic graph"
    circ = entry.circumference(budget)
    top = min(kmax, circ.lower_bound)
    for k in range(3, top + 1):
        r = entry.window(k, 2 * k + 9, budget)
        if r.status == "empty":
            return False, f"k={k}: no cycle length in [{k},{2 * k + 9}]"
        if r.status == "unknown":
            return None, f"k={k}: unknown"
    note = "" if circ.exact else " (circumference bound only)"
    return True, f"k=3..{top} ok{note}"
