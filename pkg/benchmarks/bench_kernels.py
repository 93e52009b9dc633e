"""Compiled vs pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

import argparse
import json
import sys
import time

from berge_turan import kernels
from berge_turan.berge import find_berge_path, has_berge_cycle_at_least, longest_berge_path_order
from berge_turan.constructions import construct_H, construct_W
from berge_turan.core import Graph, count_cliques, longest_cycle_order, longest_path_order
from berge_turan.kelmans import p_star
from berge_turan.search import exact_hypergraph_turan, random_instances

WORKLOADS = {
    "longest path, 200 random G(10, 20)": lambda: [
        longest_path_order(g) for g in random_instances("graph", 10, 2, 20, seed=1, count=200)
    ],
    "longest cycle, 200 random G(10, 20)": lambda: [
        longest_cycle_order(g) for g in random_instances("graph", 10, 2, 20, seed=2, count=200)
    ],
    "K_4 count, K_18": lambda: count_cliques(Graph.complete(18), 4),
    "P* brute force, W(8,7,3) (18 edges)": lambda: p_star(construct_W(8, 7, 3), 3),
    "Berge-P_k freeness, H(n,k,3), k=8..10, n<=14": lambda: [
        find_berge_path(construct_H(n, k, 3), k) for k in (8, 9, 10) for n in range(k, 15)
    ],
    "Berge cycle >= 9 in H(14,10,3)": lambda: has_berge_cycle_at_least(construct_H(14, 10, 3), 9),
    "longest Berge path, H(12,7,3)": lambda: longest_berge_path_order(construct_H(12, 7, 3)),
    "exact ex_3(6, Berge-P_5)": lambda: exact_hypergraph_turan(6, 3, 5),
}


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write the table as JSON")
    args = ap.parse_args(argv)
    if not kernels.compiled_available():
        print("compiled extension not built; only the Python backend is available", file=sys.stderr)
    backends = ["python"] + (["compiled"] if kernels.compiled_available() else [])
    rows = []
    for name, fn in WORKLOADS.items():
        row = {"workload": name}
        for b in backends:
            with kernels.backend(b):
                row[b] = timed(fn, args.repeat)
        if "compiled" in row:
            row["speedup"] = row["python"] / row["compiled"]
        rows.append(row)
        cols = "  ".join(f"{b} {row[b] * 1e3:9.2f} ms" for b in backends)
        extra = f"  x{row['speedup']:.1f}" if "speedup" in row else ""
        print(f"{name:<48} {cols}{extra}", flush=True)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
