"""Independent reference implementations used to check the search engines.

Nothing here shares code with the package search routines.
"""

from __future__ import annotations

import itertools

import networkx as nx


def nx_multigraph(E) -> nx.MultiGraph:
    g = nx.MultiGraph()
    g.add_nodes_from(range(E.vertex_count))
    g.add_edges_from(E.edges)
    return g


def nx_simple(E) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(E.vertex_count))
    g.add_edges_from((u, v) for u, v in E.edges if u != v)
    return g


def spectrum_networkx(E) -> set[int]:
    """Cycle lengths via networkx's simple-cycle enumeration (simple graphs only)."""
    return {len(c) for c in nx.simple_cycles(nx_simple(E))}


def spectrum_bitmask(E) -> set[int]:
    """Cycle lengths by plain DFS over vertex bitmasks, rooted at each cycle's minimum vertex.

    Handles parallel edges (2-cycles) and loops (1-cycles).
    """
    n = E.vertex_count
    nbrs = [[] for _ in range(n)]
    lengths: set[int] = set()
    mult: dict[tuple[int, int], int] = {}
    for u, v in E.edges:
        if u == v:
            lengths.add(1)
            continue
        nbrs[u].append(v)
        nbrs[v].append(u)
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    if any(m >= 2 for m in mult.values()):
        lengths.add(2)
    for root in range(n):
        stack = [(root, 1 << root, 1)]
        while stack:
            v, mask, size = stack.pop()
            for w in set(nbrs[v]):
                if w == root and size >= 3:
                    lengths.add(size)
                elif w > root and not mask >> w & 1:
                    stack.append((w, mask | 1 << w, size + 1))
    return lengths


def connectivity_bruteforce(E) -> int:
    """0..3 by deleting every vertex set of size <= 2 (3 means at least 3)."""
    g = nx_simple(E)
    if not nx.is_connected(g):
        return 0
    n = E.vertex_count
    for size in (1, 2):
        for removed in itertools.combinations(range(n), size):
            if n - size <= 1:
                continue
            h = g.copy()
            h.remove_nodes_from(removed)
            if not nx.is_connected(h):
                return size
    return 3


def two_edge_cuts_bruteforce(E) -> tuple[set[frozenset[int]], set[int]]:
    """(pairs of non-bridge edges whose removal disconnects, bridges)."""
    m = E.edge_count

    def connected_without(skip: set[int]) -> bool:
        g = nx.MultiGraph()
        g.add_nodes_from(range(E.vertex_count))
        g.add_edges_from(e for i, e in enumerate(E.edges) if i not in skip)
        return nx.is_connected(g)

    bridges = {i for i in range(m) if not connected_without({i})}
    pairs = set()
    for i, j in itertools.combinations(range(m), 2):
        if i in bridges or j in bridges:
            continue
        if not connected_without({i, j}):
            pairs.add(frozenset((i, j)))
    return pairs, bridges


def longest_cycle_bruteforce(E) -> int:
    return max(spectrum_bitmask(E))
