"""Port-to-port distances and longest port paths inside the H_k gadgets.

    python scripts/port_paths.py --max-k 6
"""

import argparse
from dataclasses import dataclass

from cyclegap.constructions import make_hk, port_distances
from cyclegap.spectrum import circumference


@dataclass
class Config:
    max_k: int = 6


def longest_port_path(k: int, a: int, b: int) -> int:
    """Longest simple path between ports ``a`` and ``b`` (exhaustive; fine for small k)."""
    g = make_hk(k)
    E = g.gadget
    src, dst = g.ports[a], g.ports[b]
    best = -1
    stack = [(src, 1 << src, 0)]
    while stack:
        v, seen, length = stack.pop()
        if v == dst:
            best = max(best, length)
            continue
        for w, _ in E.adjacency[v]:
            if not seen >> w & 1:
                stack.append((w, seen | 1 << w, length + 1))
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-k", type=int, default=Config.max_k)
    cfg = Config(ap.parse_args().max_k)
    names = ("x0", "x2k", "y0", "y2k")
    print(f"{'k':>2s} {'circ':>4s}  " + "  ".join(f"{names[i]}-{names[j]} (min/max)"
                                              for i in range(4) for j in range(i + 1, 4)))
    for k in range(1, cfg.max_k + 1):
        dist = port_distances(k)
        cells = []
        for i in range(4):
            for j in range(i + 1, 4):
                cells.append(f"{dist[(names[i], names[j])]:>3d}/{longest_port_path(k, i, j):<3d}")
        circ = circumference(make_hk(k).gadget).lower_bound
        print(f"{k:2d} {circ:4d}  " + "  ".join(f"{c:>16s}" for c in cells))


if __name__ == "__main__":
    main()
