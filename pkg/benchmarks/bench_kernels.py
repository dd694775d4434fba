"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]

Times canonical_edges over a batch of random graphs and coproduct_counts on
growing hosts, for each backend that is importable.
"""

import argparse
import random
import time

from taghopf import _kernels
from taghopf.verify import random_tag


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def canon_batch(mod, batch):
    for edges in batch:
        mod.canonical_edges(edges)


def host(m):
    # a cycle with chords and a loop every fourth edge: connected, few symmetries
    n = max(2, (m + 1) // 2)
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    k = 0
    while len(edges) < m:
        u = k % n + 1
        v = (3 * k + 2) % n + 1
        edges.append((min(u, v), max(u, v)) if k % 4 else (u, u))
        k += 1
    return tuple(edges[:m])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _kernels.python_backend)]
    if _kernels.compiled_backend is not None:
        backends.append(("cython", _kernels.compiled_backend))
    else:
        print("compiled backend not built; timing the python kernels only")

    rng = random.Random(0)
    batch = []
    for _ in range(2000):
        t = random_tag(rng, 4, 10, 12)
        order = list(range(1, t.vertex_count + 1))
        rng.shuffle(order)
        batch.append(tuple(tuple(sorted((order[u - 1], order[v - 1]))) for u, v in t.edges))

    rows = [("canonical_edges x2000", [best_of(args.repeat, canon_batch, mod, batch) for _, mod in backends])]
    for m in (8, 12, 14, 16):
        edges = host(m)
        times = [best_of(args.repeat if m < 16 else 1, mod.coproduct_counts, edges, 0, 1 << m)
                 for _, mod in backends]
        rows.append((f"coproduct_counts m={m}", times))

    names = [name for name, _ in backends]
    head = f"{'kernel':<24}" + "".join(f"{n + ' (s)':>14}" for n in names)
    if len(names) == 2:
        head += f"{'speedup':>10}"
    print(head)
    for label, times in rows:
        line = f"{label:<24}" + "".join(f"{t:>14.4f}" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
