"""Instance generators shared by the test modules."""
from __future__ import annotations

import itertools
import random

from drgen.derangements import Derangement
from drgen.graphs import BipartiteMultigraph, Digraph


def names(prefix, n):
    return [f"{prefix}{i}" for i in range(n)]


def all_bipartite(a: int, b: int):
    """Every simple bipartite graph on fixed parts of sizes a and b."""
    left, right = names("x", a), names("y", b)
    pairs = [(x, y) for x in left for y in right]
    for mask in range(1 << len(pairs)):
        yield BipartiteMultigraph(left, right, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_bipartite(rng: random.Random, a: int, b: int, p: float = 0.5) -> BipartiteMultigraph:
    left, right = names("x", a), names("y", b)
    return BipartiteMultigraph(left, right, [(x, y) for x in left for y in right if rng.random() < p])


def all_digraphs(n: int):
    vs = names("v", n)
    pairs = [(u, v) for u in vs for v in vs if u != v]
    for mask in range(1 << len(pairs)):
        yield Digraph(vs, [p for i, p in enumerate(pairs) if mask >> i & 1])


def random_derangement(rng: random.Random, vs) -> Derangement:
    vs = list(vs)
    while True:
        perm = vs[:]
        rng.shuffle(perm)
        if all(a != b for a, b in zip(vs, perm)):
            return Derangement(dict(zip(vs, perm)))


def random_regular_digraph(rng: random.Random, n: int, k: int, tries: int = 100_000) -> tuple[Digraph, list[Derangement]]:
    """Union of k random derangements with pairwise disjoint arc sets.

    Each derangement is drawn by rejection until it avoids the arcs of the
    earlier ones, so the union is k-regular by construction.
    """
    vs = names("v", n)
    used: set = set()
    ds = []
    for _ in range(k):
        for _ in range(tries):
            perm = vs[:]
            rng.shuffle(perm)
            pairs = list(zip(vs, perm))
            if all(a != b and (a, b) not in used for a, b in pairs):
                break
        else:
            raise RuntimeError(f"no {k}-regular union found on {n} vertices")
        ds.append(Derangement(dict(pairs)))
        used.update(pairs)
    return Digraph(vs, used), ds


def random_regular_multigraph(rng: random.Random, n: int, k: int) -> BipartiteMultigraph:
    """Sum of k uniformly random perfect matchings on n + n vertices."""
    left, right = names("x", n), names("y", n)
    mu: dict = {}
    for _ in range(k):
        perm = right[:]
        rng.shuffle(perm)
        for x, y in zip(left, perm):
            mu[(x, y)] = mu.get((x, y), 0) + 1
    return BipartiteMultigraph(left, right, mu)


def random_network_arcs(rng: random.Random, n: int, m: int, cap: int = 6):
    """Random arcs on nodes 0..n-1 with source 0 and sink n-1."""
    arcs = []
    for _ in range(m):
        t = rng.randrange(0, n - 1)
        h = rng.randrange(1, n)
        if t != h:
            arcs.append((t, h, rng.randint(0, cap)))
    return arcs


def directed_cycle(n: int) -> Digraph:
    vs = names("c", n)
    return Digraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def relabel_bipartite(g: BipartiteMultigraph, mapping) -> BipartiteMultigraph:
    return BipartiteMultigraph(
        [mapping[v] for v in g.left],
        [mapping[v] for v in g.right],
        {(mapping[x], mapping[y]): m for (x, y), m in g.mu.items()},
    )


def subsets(items):
    items = sorted(items)
    for r in range(1, len(items) + 1):
        yield from itertools.combinations(items, r)


# acceptance lines, echoed in the pytest terminal summary
ACCEPTANCE: list[str] = []
