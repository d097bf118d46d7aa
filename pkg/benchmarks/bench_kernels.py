"""Compare the jit kernel path against the pure-numpy fallback.

Each backend runs in its own subprocess so the CHI_PURE_NUMPY switch is
honored at import time.  Reported numbers are wall-clock seconds on the
current machine; the first jit call pays compilation, so a warmup pass
runs before timing.

Usage: python3 benchmarks/bench_kernels.py [--filter-n 8] [--canon-graphs 300]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from sumconn.enumeration import all_bicyclic_filter
from sumconn.graph import Graph, canonical_graph
from sumconn.kernels import backend

filter_n, canon_graphs = int(sys.argv[1]), int(sys.argv[2])

rng = random.Random(7)
batch = []
while len(batch) < canon_graphs:
    n = rng.randint(6, 12)
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    while len(edges) < n + 2:
        u, v = rng.sample(range(n), 2)
        edges.add((min(u, v), max(u, v)))
    batch.append(Graph.from_edges(n, sorted(edges)))

canonical_graph(batch[0])          # warmup: jit compilation happens here
t0 = time.perf_counter()
for g in batch:
    canonical_graph(g)
t_canon = time.perf_counter() - t0

t0 = time.perf_counter()
count = sum(1 for _ in all_bicyclic_filter(filter_n))
t_filter = time.perf_counter() - t0

json.dump({"backend": backend(), "canon_s": t_canon,
           "filter_s": t_filter, "filter_count": count}, sys.stdout)
"""


def run_backend(pure: bool, filter_n: int, canon_graphs: int) -> dict:
    env = dict(os.environ, CHI_PURE_NUMPY="1" if pure else "0")
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(filter_n), str(canon_graphs)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--filter-n", type=int, default=8,
                    help="order for the exhaustive degree-filter scan")
    ap.add_argument("--canon-graphs", type=int, default=300,
                    help="random graphs in the canonicalization batch")
    args = ap.parse_args()

    rows = [run_backend(pure, args.filter_n, args.canon_graphs)
            for pure in (False, True)]
    if rows[0]["filter_count"] != rows[1]["filter_count"]:
        sys.exit("backends disagree on the filter count; do not trust timings")

    print(f"{'backend':<8} {'canonical/300':>14} {'filter scan':>12}   graphs")
    for r in rows:
        print(f"{r['backend']:<8} {r['canon_s']:>13.3f}s {r['filter_s']:>11.3f}s   "
              f"{r['filter_count']} at n={args.filter_n}")
    if rows[1]["filter_s"] > 0:
        speedup = rows[1]["filter_s"] / max(rows[0]["filter_s"], 1e-9)
        print(f"filter speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
