"""1-factor covers of finite bipartite graphs."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidK
from .graphs import BipartiteMultigraph, OneFactor
from .thickening import Certificate, HallViolator, condition_sides, k_regular_thickening, one_factorize, perfect_matching


@dataclass(frozen=True)
class OneFactorCover:
    """Distinct 1-factors, sorted, whose union is the edge set of the host."""

    factors: tuple[OneFactor, ...]

    def __len__(self):
        return len(self.factors)

    def covers(self, g: BipartiteMultigraph) -> bool:
        if not self.factors or not all(f.is_factor_of(g) for f in self.factors):
            return False
        used = {e for f in self.factors for e in f}
        return used == set(g.edges())

    def to_json(self, k: int | None = None) -> dict:
        return {
            "k": len(self.factors) if k is None else k,
            "factors": [[list(e) for e in f] for f in self.factors],
        }


@dataclass(frozen=True)
class MinCover:
    k: int
    cover: OneFactorCover


@dataclass(frozen=True)
class BlockedEdge:
    """An edge lying in no 1-factor, with the set T that explains why.

    ``T`` comes from a Hall violator of the graph with both endpoints
    deleted; in the full graph it either has too few neighbours
    (``violation == "hall"``) or exactly |T| neighbours whose own
    neighbourhood escapes T (``violation == "closure"``; ``escape`` is such
    a vertex).
    """

    edge: tuple[str, str]
    part: str
    T: tuple[str, ...]
    violation: str
    escape: str | None = None


@dataclass(frozen=True)
class NoFactor:
    violator: HallViolator


@dataclass(frozen=True)
class NotCoverable:
    reason: BlockedEdge | NoFactor


def cover_with_k(g: BipartiteMultigraph, k: int) -> OneFactorCover | Certificate:
    """At most k distinct 1-factors covering every edge, or a certificate."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)
    h = k_regular_thickening(g, k)
    if isinstance(h, Certificate):
        return h
    factors = {OneFactor(tuple(f)) for f in one_factorize(h, k)}
    return OneFactorCover(tuple(sorted(factors, key=lambda f: f.edges)))


def _feasible(g, k):
    return not isinstance(k_regular_thickening(g, k), Certificate)


def min_cover(g: BipartiteMultigraph, linear: bool = False) -> MinCover | NotCoverable:
    """Least k admitting a cover, searched over [max degree, |E|].

    Feasibility is monotone in k, and a 1-extendable graph always has a
    cover with one factor per edge, so |E| bounds the search. The search
    probes the max degree first, gallops upward and then bisects; only the
    thickening is computed per probe. ``linear`` scans upward instead
    (debug aid; same answer).
    """
    ext = is_one_extendable(g)
    if ext is not True:
        return NotCoverable(ext)
    lo = max(1, g.max_degree())
    hi = max(lo, len(g.edges()))
    if linear:
        k = lo
        while not _feasible(g, k):
            k += 1
        return MinCover(k, cover_with_k(g, k))
    step = 1
    while lo < hi and not _feasible(g, lo):
        probe = min(hi, lo + step)
        if _feasible(g, probe):
            hi = probe
            lo += 1
            break
        lo = min(probe + 1, hi)
        step *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(g, mid):
            hi = mid
        else:
            lo = mid + 1
    return MinCover(lo, cover_with_k(g, lo))


def _blocked_edge_reason(g: BipartiteMultigraph, x: str, y: str, violator: HallViolator) -> BlockedEdge:
    t = violator.T
    n = g.neighborhood(t)
    if len(n) < len(t):
        return BlockedEdge((x, y), violator.part, t, "hall")
    escape = sorted(g.neighborhood(n) - set(t))
    return BlockedEdge((x, y), violator.part, t, "closure", escape[0] if escape else None)


def _components(nodes, succ) -> dict:
    """Strongly connected component id of each node (iterative Kosaraju)."""
    order, seen = [], set()
    for root in nodes:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in seen:
                    seen.add(w)
                    stack.append((w, iter(succ[w])))
                    break
            else:
                stack.pop()
                order.append(v)
    pred = {v: [] for v in nodes}
    for v in nodes:
        for w in succ[v]:
            pred[w].append(v)
    comp: dict = {}
    for root in reversed(order):
        if root in comp:
            continue
        comp[root] = root
        stack = [root]
        while stack:
            v = stack.pop()
            for w in pred[v]:
                if w not in comp:
                    comp[w] = root
                    stack.append(w)
    return comp


def is_one_extendable(g: BipartiteMultigraph) -> bool | BlockedEdge | NoFactor:
    """True iff every edge lies in a 1-factor.

    Given one perfect matching M, orient matching edges right to left and
    the others left to right; a non-matching edge lies in some 1-factor iff
    it closes an M-alternating cycle, i.e. both ends share a strongly
    connected component. The first blocked edge xy is then explained by a
    Hall violator of g - x - y.
    """
    pm = perfect_matching(g)
    if isinstance(pm, HallViolator):
        return NoFactor(pm)
    mate = dict(pm.edges)
    succ = {v: [] for v in g.vertices}
    for x, y in g.edges():
        if mate[x] == y:
            succ[y].append(x)
        else:
            succ[x].append(y)
    comp = _components(g.vertices, succ)
    for x, y in g.edges():
        if mate[x] != y and comp[x] != comp[y]:
            rest = g.induced(v for v in g.vertices if v != x and v != y)
            sub = perfect_matching(rest)
            if not isinstance(sub, HallViolator):
                raise AssertionError(f"edge {x}-{y} extends after all")
            return _blocked_edge_reason(g, x, y, sub)
    return True


def check_condition_ii(g: BipartiteMultigraph, t: Iterable[str], k: int) -> tuple[int, int, bool]:
    """Both sides of the cover inequality for T, and whether it holds."""
    lhs, rhs = condition_sides(g, t, k)
    return lhs, rhs, lhs >= rhs

