"""Brute-force reference implementations.

Everything here is deliberately naive and recomputes neighbourhoods and
degrees from the raw edge/arc lists, so it shares no logic with the flow
based production path. Size guards keep runs short; the environment
variable ``ORACLE_MAX`` raises every guard to its value.
"""
from __future__ import annotations

import itertools
import os
from typing import Iterable

from .derangements import Derangement, DigraphCertificate
from .errors import OracleDisagreement, TooLarge
from .graphs import LEFT, RIGHT, BipartiteMultigraph, Digraph, OneFactor
from .thickening import CONDITION_II, DEGREE_EXCEEDED, Certificate

CONDITIONS_MAX = 20
MATCHINGS_MAX = 8
DERANGEMENTS_MAX = 7


def _guard(default: int) -> int:
    override = os.environ.get("ORACLE_MAX")
    return int(override) if override else default


def _check_size(n: int, default: int, what: str) -> None:
    limit = _guard(default)
    if n > limit:
        raise TooLarge(f"{what}: size {n} exceeds oracle guard {limit}")


def _adjacency(g: BipartiteMultigraph):
    nbrs: dict[str, set[str]] = {v: set() for v in g.left + g.right}
    deg = {v: 0 for v in nbrs}
    for (x, y), m in g.mu.items():
        nbrs[x].add(y)
        nbrs[y].add(x)
        deg[x] += m
        deg[y] += m
    return nbrs, deg


def _subsets(items):
    items = sorted(items)
    for r in range(1, len(items) + 1):
        yield from itertools.combinations(items, r)


def brute_conditions_graph(g: BipartiteMultigraph, k: int) -> Certificate | None:
    """First violated cover condition, or None when all hold.

    Degrees are checked first (vertices in sorted order), then every
    nonempty T inside the left part and then the right part, by size and
    lexicographically within a size.
    """
    _check_size(max(len(g.left), len(g.right)), CONDITIONS_MAX, "brute_conditions_graph")
    nbrs, deg = _adjacency(g)
    for part, verts in ((LEFT, g.left), (RIGHT, g.right)):
        for v in verts:
            if deg[v] > k:
                return Certificate(DEGREE_EXCEEDED, part, (v,), k, deg[v], k)
    for part, verts in ((LEFT, g.left), (RIGHT, g.right)):
        for t in _subsets(verts):
            n = set().union(*(nbrs[v] for v in t))
            lhs = k * (len(n) - len(t))
            rhs = sum(deg[v] for v in n) - sum(deg[v] for v in t)
            if lhs < rhs:
                return Certificate(CONDITION_II, part, t, lhs, rhs, k)
    return None


def brute_conditions_digraph(d: Digraph, k: int) -> DigraphCertificate | None:
    _check_size(len(d.vertices), CONDITIONS_MAX, "brute_conditions_digraph")
    out = {v: set() for v in d.vertices}
    inn = {v: set() for v in d.vertices}
    for u, v in d.arcs:
        out[u].add(v)
        inn[v].add(u)
    for v in d.vertices:
        if len(out[v]) > k:
            return DigraphCertificate("i", (v,), k, len(out[v]), k, "out")
    for v in d.vertices:
        if len(inn[v]) > k:
            return DigraphCertificate("i", (v,), k, len(inn[v]), k, "in")
    for cond, fwd, back in (("ii", out, inn), ("iii", inn, out)):
        for t in _subsets(d.vertices):
            n = set().union(*(fwd[v] for v in t))
            lhs = k * (len(n) - len(t))
            rhs = sum(len(back[v]) for v in n) - sum(len(fwd[v]) for v in t)
            if lhs < rhs:
                return DigraphCertificate(cond, t, lhs, rhs, k)
    return None


def enumerate_perfect_matchings(g: BipartiteMultigraph) -> list[OneFactor]:
    """All perfect matchings of the support of ``g``, in lexicographic order."""
    if len(g.left) != len(g.right):
        return []
    _check_size(len(g.left), MATCHINGS_MAX, "enumerate_perfect_matchings")
    edges = set(g.mu)
    out = []
    for perm in itertools.permutations(g.right):
        pairs = tuple(zip(g.left, perm))
        if all(p in edges for p in pairs):
            out.append(OneFactor(pairs))
    return sorted(set(out), key=lambda f: f.edges)


def permanent(matrix: list[list[int]]) -> int:
    """Permanent by Ryser's inclusion-exclusion formula."""
    n = len(matrix)
    if n == 0:
        return 1
    total = 0
    for mask in range(1, 1 << n):
        cols = [j for j in range(n) if mask >> j & 1]
        prod = 1
        for row in matrix:
            prod *= sum(row[j] for j in cols)
        total += (-1) ** len(cols) * prod
    return (-1) ** n * total


def biadjacency(g: BipartiteMultigraph) -> list[list[int]]:
    return [[1 if (x, y) in g.mu else 0 for y in g.right] for x in g.left]


def _exact_set_cover(universe: set, candidates: list[frozenset], bound_of) -> int | None:
    """Fewest candidates whose union is ``universe`` (iterative deepening).

    ``bound_of(uncovered)`` is a lower bound on the number of further
    candidates needed; it only prunes, never changes the answer.
    """
    if not candidates:
        return None
    if not universe:
        return 1
    if not universe <= set().union(*candidates):
        return None
    containing = {e: [c for c in candidates if e in c] for e in universe}

    def search(uncovered, budget):
        if not uncovered:
            return True
        if budget == 0 or bound_of(uncovered) > budget:
            return False
        e = min(uncovered, key=lambda x: (len(containing[x]), x))
        return any(search(uncovered - c, budget - 1) for c in containing[e])

    for size in range(1, len(universe) + 1):
        if search(frozenset(universe), size):
            return size
    return None


def _per_vertex_bound(uncovered, key):
    counts: dict = {}
    for e in uncovered:
        for v in key(e):
            counts[v] = counts.get(v, 0) + 1
    return max(counts.values(), default=0)


def brute_min_cover(g: BipartiteMultigraph) -> int | None:
    """Minimum number of perfect matchings covering every edge, or None."""
    matchings = [frozenset(f.edges) for f in enumerate_perfect_matchings(g)]
    if not matchings:
        return None
    # each matching covers at most one edge per vertex
    return _exact_set_cover(set(g.mu), matchings, lambda u: _per_vertex_bound(u, lambda e: (e[0], e[1])))


def all_derangements(vertices: Iterable[str]) -> list[Derangement]:
    vs = sorted(vertices)
    out = []
    for perm in itertools.permutations(vs):
        if all(a != b for a, b in zip(vs, perm)):
            out.append(Derangement(dict(zip(vs, perm))))
    return out


def brute_min_derangements(d: Digraph) -> int | None:
    """Fewest derangements whose arcs together are exactly E(d), or None."""
    _check_size(len(d.vertices), DERANGEMENTS_MAX, "brute_min_derangements")
    arcs = set(d.arcs)
    usable = [frozenset(s.arcs()) for s in all_derangements(d.vertices) if s.arcs() <= arcs]
    if not usable:
        return None
    return _exact_set_cover(arcs, usable, lambda u: _per_vertex_bound(u, lambda a: ((a[0], 1), (a[1], 2))))


def brute_min_derangement_sets(d: Digraph) -> list[frozenset[Derangement]]:
    """Every minimum-size generating set (for uniqueness checks on tiny inputs)."""
    k = brute_min_derangements(d)
    if k is None:
        return []
    arcs = set(d.arcs)
    usable = [s for s in all_derangements(d.vertices) if s.arcs() <= arcs]
    return [
        frozenset(combo)
        for combo in itertools.combinations(usable, k)
        if set().union(*(s.arcs() for s in combo)) == arcs
    ]


def brute_one_extendable_direct(g: BipartiteMultigraph) -> bool:
    """Every edge lies in some enumerated perfect matching."""
    matchings = enumerate_perfect_matchings(g)
    if not matchings:
        return False
    used = {e for f in matchings for e in f.edges}
    return used == set(g.mu)


def lemma4_check(g: BipartiteMultigraph) -> bool:
    """Subset criterion: |N(T)| >= |T|, and |N(T)| == |T| forces N(N(T)) == T."""
    _check_size(max(len(g.left), len(g.right)), CONDITIONS_MAX, "lemma4_check")
    nbrs, _ = _adjacency(g)

    def nb(s):
        return set().union(*(nbrs[v] for v in s)) if s else set()

    for verts in (g.left, g.right):
        for t in _subsets(verts):
            n = nb(t)
            if len(n) < len(t):
                return False
            if len(n) == len(t) and nb(n) != set(t):
                return False
    return True


def brute_one_extendable(g: BipartiteMultigraph) -> bool:
    direct = brute_one_extendable_direct(g)
    subset = lemma4_check(g)
    if direct != subset:
        raise OracleDisagreement(f"per-edge definition says {direct}, subset criterion says {subset}")
    return direct
