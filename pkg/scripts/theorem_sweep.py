"""Sweep random 3-connected cubic plane graphs and check the [k, 2k+9] window for every k.

For each graph the exact circumference is computed, then for every k from 3
to it the shortest cycle length in the window is recorded.  The slack column
is the largest (shortest hit - k) seen, a measure of how far from the
window's upper end the graphs come.

    python scripts/theorem_sweep.py --count 200 --max-n 40 --pipeline
"""

import argparse
import time
from dataclasses import dataclass

from cyclegap.constructions import random_c3cp
from cyclegap.spectrum import circumference, shortest_cycle_in_range
from cyclegap.theorem_lab import THEOREM_SLACK, verify_interval_theorem


@dataclass
class Config:
    count: int = 100
    min_n: int = 4
    max_n: int = 36
    seed_offset: int = 0
    pipeline: bool = False


def sweep(cfg: Config):
    sizes = list(range(cfg.min_n, cfg.max_n + 1, 2))
    failures = []
    worst = (0, None)
    checks = 0
    for i in range(cfg.count):
        seed = cfg.seed_offset + i
        n = sizes[i % len(sizes)]
        G = random_c3cp(n, seed)
        circ = circumference(G, 10**9)
        for k in range(3, circ.lower_bound + 1):
            r = shortest_cycle_in_range(G, k, 2 * k + THEOREM_SLACK)
            checks += 1
            if r.status != "found":
                failures.append((n, seed, k, r.status))
                continue
            if r.witness.length - k > worst[0]:
                worst = (r.witness.length - k, (n, seed, k))
            if cfg.pipeline:
                rec = verify_interval_theorem(G, k, pipeline=True)
                if rec.pipeline_outcome.kind != "MidCycle":
                    failures.append((n, seed, k, rec.pipeline_outcome.kind))
    return checks, failures, worst


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--count", type=int, default=Config.count)
    ap.add_argument("--min-n", type=int, default=Config.min_n)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--seed-offset", type=int, default=Config.seed_offset)
    ap.add_argument("--pipeline", action="store_true")
    a = ap.parse_args()
    cfg = Config(a.count, a.min_n, a.max_n, a.seed_offset, a.pipeline)
    t0 = time.perf_counter()
    checks, failures, worst = sweep(cfg)
    print(f"graphs={cfg.count} window checks={checks} failures={len(failures)} "
          f"time={time.perf_counter() - t0:.1f}s")
    print(f"largest shortest-hit minus k: {worst[0]} at (n, seed, k) = {worst[1]}")
    for f in failures:
        print("FAIL", f)


if __name__ == "__main__":
    main()
