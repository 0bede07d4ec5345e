"""Thickenings, the thickening flow network, matchings and 1-factorization.

A k-thickening of G on a vertex set S raises edge multiplicities inside
G[S] so that every vertex whose whole neighbourhood lies in S reaches degree
exactly k, while the remaining vertices of S stay within the budget
``k - deg_G(x) + deg_G[S](x)``. Existence on a closed window S is decided
by a max-flow computation; when no such thickening exists, a minimum cut
names a vertex set T violating

    k * (|N(T)| - |T|) >= sum(deg(N(T))) - sum(deg(T)).
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from . import kernels
from .errors import InvalidK, InvalidT, NotRegular
from .flow import Cut, FlowAssignment, FlowNetwork, max_flow
from .graphs import LEFT, RIGHT, BipartiteMultigraph, OneFactor

DEGREE_EXCEEDED = "degree-exceeded"
CONDITION_II = "condition-ii"


class Terminal(enum.Enum):
    SOURCE = "a"
    SINK = "b"
    AUX = "b'"

    def __repr__(self):
        return self.value


@dataclass(frozen=True)
class Certificate:
    """A finite witness that no cover with at most k 1-factors exists.

    Both kinds read as the strict inequality ``lhs < rhs``: for
    ``degree-exceeded`` lhs is k and rhs the degree of the single vertex in
    ``T``; for ``condition-ii`` the two sides are ``k(|N(T)|-|T|)`` and
    ``sum deg N(T) - sum deg T``.
    """

    kind: str
    part: str
    T: tuple[str, ...]
    lhs: int
    rhs: int
    k: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "part": self.part, "T": list(self.T), "lhs": self.lhs, "rhs": self.rhs, "k": self.k}

    def recheck(self, g: BipartiteMultigraph) -> bool:
        """Recompute both sides against ``g``; True iff still a strict violation."""
        if self.kind == DEGREE_EXCEEDED:
            (x,) = self.T
            return g.degree(x) == self.rhs and self.rhs > self.k == self.lhs
        lhs, rhs = condition_sides(g, self.T, self.k)
        return (lhs, rhs) == (self.lhs, self.rhs) and lhs < rhs


def condition_sides(g: BipartiteMultigraph, t: Iterable[str], k: int) -> tuple[int, int]:
    t = set(t)
    parts = {g.part(v) for v in t}
    if len(parts) > 1:
        raise InvalidT("T must lie inside one part")
    n = g.neighborhood(t)
    lhs = k * (len(n) - len(t))
    rhs = sum(g.degree(v) for v in n) - sum(g.degree(v) for v in t)
    return lhs, rhs


def _condition_ii_certificate(g, t, k) -> Certificate:
    t = tuple(sorted(t))
    lhs, rhs = condition_sides(g, t, k)
    return Certificate(CONDITION_II, g.part(t[0]), t, lhs, rhs, k)


def _degree_certificate(g, x, k) -> Certificate:
    return Certificate(DEGREE_EXCEEDED, g.part(x), (x,), k, g.degree(x), k)


# windows ------------------------------------------------------------------

def close_window(g: BipartiteMultigraph, s_star: Iterable[str]) -> frozenset[str]:
    """S* together with every neighbour of its left vertices."""
    s = set(s_star)
    for v in s:
        g.part(v)
    s |= g.neighborhood(v for v in list(s) if g.part(v) == LEFT)
    return frozenset(s)


@dataclass(frozen=True)
class WindowPartition:
    s: frozenset
    s1: tuple[str, ...]
    s2_prime: tuple[str, ...]
    s2_doubleprime: tuple[str, ...]
    c: dict = field(hash=False, compare=False)
    m: int = 0
    m2: int = 0


def partition_window(g: BipartiteMultigraph, s: Iterable[str], k: int) -> WindowPartition | Certificate:
    """Split a closed window and compute spare capacities ``c_x = k - deg(x)``.

    Returns a degree certificate if some vertex of S already exceeds k.
    """
    s = frozenset(s)
    for v in sorted(s):
        if g.degree(v) > k:
            return _degree_certificate(g, v, k)
    s1 = tuple(sorted(v for v in s if g.part(v) == LEFT))
    s1_set = set(s1)
    s2 = sorted(v for v in s if g.part(v) == RIGHT)
    s2pp = tuple(y for y in s2 if set(g.neighbors(y)) <= s1_set)
    s2pp_set = set(s2pp)
    s2p = tuple(y for y in s2 if y not in s2pp_set)
    c = {v: k - g.degree(v) for v in s}
    return WindowPartition(
        s=s,
        s1=s1,
        s2_prime=s2p,
        s2_doubleprime=s2pp,
        c=c,
        m=sum(c[x] for x in s1),
        m2=sum(c[y] for y in s2pp),
    )


class InfeasibleWindow(Exception):
    def __init__(self, certificate: Certificate):
        self.certificate = certificate
        super().__init__(certificate)


def build_network(g: BipartiteMultigraph, s: Iterable[str], k: int):
    """Flow network for a k-thickening of ``g`` on the closed window ``s``.

    Returns ``(network, edge_arcs, partition)`` where ``edge_arcs`` maps the
    index of each graph-edge arc to its (left, right) vertex pair. Raises
    InfeasibleWindow when a degree exceeds k or when the right-side demand
    m'' already exceeds m (then T = S2'' violates the inequality).
    """
    if k < 1:
        raise InvalidK(k)
    s = frozenset(s)
    left_in_s = [v for v in s if g.part(v) == LEFT]
    if not g.neighborhood(left_in_s) <= s:
        raise ValueError("window is not closed under neighbours of its left vertices")
    wp = partition_window(g, s, k)
    if isinstance(wp, Certificate):
        raise InfeasibleWindow(wp)
    if wp.m2 > wp.m:
        raise InfeasibleWindow(_condition_ii_certificate(g, wp.s2_doubleprime, k))
    a, b, b_aux = Terminal.SOURCE, Terminal.SINK, Terminal.AUX
    # capacities never reach m + 1 in a cut of capacity <= m, so m + 1 acts as infinity
    inf = wp.m + 1
    arcs = []
    edge_arcs = {}
    for x in wp.s1:
        for y in g.neighbors(x):
            edge_arcs[len(arcs)] = (x, y)
            arcs.append((x, y, inf))
    for x in wp.s1:
        arcs.append((a, x, wp.c[x]))
    for y in wp.s2_prime:
        arcs.append((y, b_aux, wp.c[y]))
    for y in wp.s2_doubleprime:
        arcs.append((y, b, wp.c[y]))
    arcs.append((b_aux, b, wp.m - wp.m2))
    nodes = (a, *wp.s1, *wp.s2_prime, *wp.s2_doubleprime, b_aux, b)
    return FlowNetwork(nodes, tuple(arcs), a, b), edge_arcs, wp


def certificate_from_cut(g: BipartiteMultigraph, wp: WindowPartition, cut: Cut, k: int) -> Certificate:
    """Translate a cut of capacity below m into a violating set T."""
    if Terminal.AUX in cut.side_a:
        t = [y for y in wp.s2_doubleprime if y in cut.side_b]
    else:
        t = [x for x in wp.s1 if x in cut.side_a]
    return _condition_ii_certificate(g, t, k)


@dataclass(frozen=True)
class Thickening:
    graph: BipartiteMultigraph
    window: WindowPartition
    k: int
    flow: FlowAssignment | None = None


def k_thickening_on(g: BipartiteMultigraph, s_star: Iterable[str], k: int) -> Thickening | Certificate:
    """A k-thickening of ``g`` on the closure of ``s_star``, or a certificate."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)
    s = close_window(g, s_star)
    try:
        net, edge_arcs, wp = build_network(g, s, k)
    except InfeasibleWindow as exc:
        return exc.certificate
    flow, cut = max_flow(net)
    if flow.magnitude < wp.m:
        return certificate_from_cut(g, wp, cut, k)
    mu = {(x, y): g.mu[(x, y)] for x in wp.s1 for y in g.neighbors(x)}
    for i, (x, y) in edge_arcs.items():
        mu[(x, y)] += flow.values[i]
    h = BipartiteMultigraph(wp.s1, wp.s2_prime + wp.s2_doubleprime, mu)
    return Thickening(h, wp, k, flow)


def k_regular_thickening(g: BipartiteMultigraph, k: int) -> BipartiteMultigraph | Certificate:
    res = k_thickening_on(g, g.vertices, k)
    if isinstance(res, Certificate):
        return res
    return res.graph


def is_k_thickening_on(g: BipartiteMultigraph, s: Iterable[str], h: BipartiteMultigraph, k: int) -> bool:
    """Check the definition of a k-thickening of ``g`` on ``s`` directly."""
    s = set(s)
    if set(h.vertices) != s:
        return False
    gs = g.induced(s)
    for (x, y), m in h.mu.items():
        if gs.mu.get((x, y), 0) == 0:
            return False
    for e, m in gs.mu.items():
        if h.mu.get(e, 0) < m:
            return False
    for x in s:
        if set(g.neighbors(x)) <= s:
            if h.degree(x) != k:
                return False
        elif h.degree(x) > k - g.degree(x) + gs.degree(x):
            return False
    return True


# perfect matchings --------------------------------------------------------

@dataclass(frozen=True)
class HallViolator:
    """A set inside one part with fewer neighbours than members."""

    part: str
    T: tuple[str, ...]
    neighborhood: tuple[str, ...]

    def recheck(self, g: BipartiteMultigraph) -> bool:
        return len(g.neighborhood(self.T)) < len(self.T) and all(g.part(v) == self.part for v in self.T)


def maximum_matching(g: BipartiteMultigraph) -> dict[str, str]:
    """Maximum matching of the support of ``g`` as a left -> right dict."""
    left, right = g.left, g.right
    ridx = {v: i for i, v in enumerate(right)}
    indptr = [0]
    indices = []
    for x in left:
        indices.extend(ridx[y] for y in g.neighbors(x))
        indptr.append(len(indices))
    match_l, _ = kernels.hopcroft_karp(len(left), len(right), indptr, indices)
    return {left[i]: right[j] for i, j in enumerate(match_l) if j >= 0}


def _alternating_reach(g, free, matched_to):
    """Vertices reachable from ``free`` along non-matching then matching edges."""
    same, other = set(free), set()
    queue = deque(free)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w in other:
                continue
            other.add(w)
            mate = matched_to.get(w)
            if mate is not None and mate not in same:
                same.add(mate)
                queue.append(mate)
    return same, other


def perfect_matching(g: BipartiteMultigraph) -> OneFactor | HallViolator:
    match = maximum_matching(g)
    if len(match) == len(g.left) == len(g.right):
        return OneFactor(tuple(match.items()))
    rev = {y: x for x, y in match.items()}
    free_left = [x for x in g.left if x not in match]
    if free_left:
        t, n = _alternating_reach(g, free_left, rev)
        return HallViolator(LEFT, tuple(sorted(t)), tuple(sorted(n)))
    free_right = [y for y in g.right if y not in rev]
    t, n = _alternating_reach(g, free_right, match)
    return HallViolator(RIGHT, tuple(sorted(t)), tuple(sorted(n)))


def one_factorize(m: BipartiteMultigraph, k: int) -> list[OneFactor]:
    """Split a k-regular bipartite multigraph into k 1-factors.

    Perfect matchings are peeled off the support one at a time; the result is
    canonical for a given input.
    """
    for v in m.vertices:
        if m.degree(v) != k:
            raise NotRegular(v, m.degree(v), k)
    left, right = m.left, m.right
    ridx = {v: i for i, v in enumerate(right)}
    # per left vertex: sorted right indices and their remaining multiplicities
    rows = [[ridx[y] for y in m.neighbors(x)] for x in left]
    remaining = [{} for _ in left]
    for i, x in enumerate(left):
        for j in rows[i]:
            remaining[i][j] = m.mu[(x, right[j])]
    factors = []
    for _ in range(k):
        indptr, indices = [0], []
        for i in range(len(left)):
            indices.extend(j for j in rows[i] if remaining[i][j])
            indptr.append(len(indices))
        match_l, _ = kernels.hopcroft_karp(len(left), len(right), indptr, indices)
        if any(j < 0 for j in match_l):
            raise AssertionError("regular bipartite multigraph without a 1-factor")
        for i, j in enumerate(match_l):
            remaining[i][j] -= 1
        factors.append(OneFactor(tuple((left[i], right[j]) for i, j in enumerate(match_l))))
    return factors
