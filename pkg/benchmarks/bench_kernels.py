"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--seed S]

Times max-flow and bipartite matching on random instances, plus an
end-to-end min_derangements run, under every available backend.
"""
from __future__ import annotations

import argparse
import random
import timeit

from drgen import kernels
from drgen.derangements import Derangement, min_derangements
from drgen.graphs import Digraph


def flow_instance(rng, n, m, cap=50):
    tails, heads, caps = [], [], []
    for _ in range(m):
        t, h = rng.randrange(0, n - 1), rng.randrange(1, n)
        if t != h:
            tails.append(t)
            heads.append(h)
            caps.append(rng.randint(1, cap))
    return n, tails, heads, caps, 0, n - 1


def matching_instance(rng, n, deg):
    indptr, indices = [0], []
    for _ in range(n):
        indices.extend(sorted(rng.sample(range(n), deg)))
        indptr.append(len(indices))
    return n, n, indptr, indices


def regular_digraph(rng, n, k):
    vs = [f"v{i}" for i in range(n)]
    used = set()
    for _ in range(k):
        while True:
            perm = vs[:]
            rng.shuffle(perm)
            pairs = list(zip(vs, perm))
            if all(a != b and (a, b) not in used for a, b in pairs):
                break
        used.update(Derangement(dict(pairs)).arcs())
    return Digraph(vs, used)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    flow = flow_instance(rng, 2000, 20000)
    match = matching_instance(rng, 3000, 6)
    digraph = regular_digraph(rng, 120, 4)

    cases = [
        ("dinic n=2000 m=20000", lambda: kernels.dinic(*flow)),
        ("hopcroft-karp n=3000 deg=6", lambda: kernels.hopcroft_karp(*match)),
        ("min_derangements |V|=120 k=4", lambda: min_derangements(digraph)),
    ]
    backends = kernels.available_backends()
    previous = kernels.backend_name()
    timings: dict[str, dict[str, float]] = {}
    try:
        for backend in backends:
            kernels.use_backend(backend)
            for name, fn in cases:
                best = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                timings.setdefault(name, {})[backend] = best
    finally:
        kernels.use_backend(previous)

    header = f"{'case':32}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for name, row in timings.items():
        line = f"{name:32}" + "".join(f"{row[b] * 1000:10.1f}ms" for b in backends)
        if len(backends) > 1:
            line += f"{row['python'] / row['compiled']:9.1f}x"
        print(line)
    if len(backends) == 1:
        print("compiled extension not built; only the Python kernels were timed")


if __name__ == "__main__":
    main()
