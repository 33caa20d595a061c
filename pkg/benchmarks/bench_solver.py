"""Time the compiled and pure-Python search kernels on the same workloads.

    python benchmarks/bench_solver.py [--repeat 3] [--corpus 300]
"""

from __future__ import annotations

import argparse
import time

from gtriple._kernel import KERNELS
from gtriple.families import gen_be_exception, gen_small_counterexample, gen_star_cycle, gen_zak_sharp
from gtriple.graph import Triple, cycle_graph, matching_graph, path_graph
from gtriple.rng import SplitMix64, random_triple
from gtriple.solver import solve


def workloads(corpus: int) -> dict[str, list[Triple]]:
    rng = SplitMix64(1)
    mixed = []
    for _ in range(corpus):
        n = rng.between(6, 14)
        full = n * (n - 1) // 2
        mixed.append(random_triple(rng, n, rng.between(0, full // 3), rng.between(0, full // 3), rng.between(0, n)))
    return {
        "4K3 vs K5+7K1": [gen_small_counterexample()],
        "K3+K1,n-4 n=8..16": [gen_zak_sharp(n) for n in (8, 10, 12, 14, 16)],
        "exception pairs": [gen_be_exception(k) for k in range(1, 8)],
        "star+K1 vs C18": [gen_star_cycle(18)],
        "n=200 sparse packs": [
            Triple(matching_graph(100), cycle_graph(200)),
            Triple(path_graph(200), path_graph(200)),
        ],
        f"random corpus ({corpus})": mixed,
    }


def run(kernel: str, triples: list[Triple], repeat: int) -> tuple[float, int]:
    best = float("inf")
    nodes = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        nodes = sum(solve(t, kernel=kernel).nodes for t in triples)
        best = min(best, time.perf_counter() - t0)
    return best, nodes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--corpus", type=int, default=300)
    args = ap.parse_args()

    kernels = sorted(KERNELS)
    if "cython" not in kernels:
        print("compiled kernel not available; timing the Python kernel only")
    print(f"{'workload':26} {'kernel':8} {'seconds':>10} {'nodes':>10} {'speedup':>8}")
    for name, triples in workloads(args.corpus).items():
        base = None
        for k in ("python", "cython"):
            if k not in KERNELS:
                continue
            secs, nodes = run(k, triples, args.repeat)
            base = base or secs
            print(f"{name:26} {k:8} {secs:10.4f} {nodes:10d} {base / secs:7.1f}x")


if __name__ == "__main__":
    main()
