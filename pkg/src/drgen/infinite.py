"""Locally finite infinite (di)graphs and sound window refutation.

An infinite digraph is given by neighbour functions. A finite window (a ball
around a centre) is closed under out-neighbours, the bipartite double of the
window is materialised together with every edge touching it, and a
k-thickening is sought on it. Because degrees come from the full graph,
failure yields a finite set T violating the generation inequality in the
infinite graph itself, so the refutation is sound. Success proves nothing
about the infinite graph and is reported as unresolved.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .derangements import DigraphCertificate, certificate_from_double
from .errors import InvalidFamily, InvalidK
from .graphs import LEFT, RIGHT, BipartiteMultigraph, Digraph, in_copy, out_copy
from .thickening import DEGREE_EXCEEDED, Certificate, close_window, k_thickening_on

REFUTED = "refuted"
UNRESOLVED = "unresolved"

DEFAULT_K_MAX = 8


@dataclass(frozen=True)
class LazyDigraph:
    out_neighbors: Callable[[str], Sequence[str]]
    in_neighbors: Callable[[str], Sequence[str]]
    seed: str
    name: str = "digraph"


@dataclass(frozen=True)
class LazyGraph:
    """Locally finite bipartite graph; ``part(v)`` is "left" or "right"."""

    neighbors: Callable[[str], Sequence[str]]
    part: Callable[[str], str]
    seed: str
    name: str = "graph"


# families -----------------------------------------------------------------

def _index(name: str, prefix: str) -> int:
    if not name.startswith(prefix):
        raise KeyError(name)
    return int(name[len(prefix):])


def ladder_digraph() -> LazyDigraph:
    """Arcs w_i -> w_{i+1}, w_i -> w_{i-1} and w_{2i-1} -> w_{2i+1}, i in Z."""

    def out(name):
        i = _index(name, "w")
        ns = [i - 1, i + 1] + ([i + 2] if i % 2 else [])
        return sorted(f"w{j}" for j in ns)

    def inn(name):
        i = _index(name, "w")
        ns = [i - 1, i + 1] + ([i - 2] if i % 2 else [])
        return sorted(f"w{j}" for j in ns)

    return LazyDigraph(out, inn, "w0", "ladder-digraph")


def ladder_graph() -> LazyGraph:
    """Two-way infinite paths v and u joined by rungs v_i u_i for odd i.

    Parts follow the double of the ladder digraph: v_odd and u_even on the
    left, v_even and u_odd on the right.
    """

    def nbrs(name):
        kind, i = name[0], _index(name, name[0])
        if kind not in "uv":
            raise KeyError(name)
        other = "u" if kind == "v" else "v"
        ns = [f"{kind}{i - 1}", f"{kind}{i + 1}"]
        if i % 2:
            ns.append(f"{other}{i}")
        return sorted(ns)

    def part(name):
        kind, i = name[0], _index(name, name[0])
        return LEFT if (kind == "v") == bool(i % 2) else RIGHT

    return LazyGraph(nbrs, part, "v0", "ladder-graph")


def subdivided_product(h: BipartiteMultigraph) -> LazyGraph:
    """Infinite path times H, with every path edge (i,y)-(i+1,y) subdivided.

    Vertex (i, y) is named ``p{i}:{y}``; the subdivision vertex between
    (i, y) and (i+1, y) is ``s{i}:{y}``.
    """
    if not h.is_simple() or not h.vertices:
        raise InvalidFamily("H must be a nonempty simple bipartite graph")
    reg = h.degree(h.vertices[0])
    if reg < 1 or not h.is_regular(reg):
        raise InvalidFamily("H must be regular of positive degree")

    def split(name):
        head, sep, y = name.partition(":")
        if not sep or head[:1] not in ("p", "s") or y not in h:
            raise KeyError(name)
        return head[0], int(head[1:]), y

    def nbrs(name):
        kind, i, y = split(name)
        if kind == "s":
            return sorted([f"p{i}:{y}", f"p{i + 1}:{y}"])
        ns = [f"p{i}:{z}" for z in h.neighbors(y)] + [f"s{i}:{y}", f"s{i - 1}:{y}"]
        return sorted(ns)

    def part(name):
        kind, _, y = split(name)
        side = h.part(y)
        if kind == "s":
            side = RIGHT if side == LEFT else LEFT
        return side

    return LazyGraph(nbrs, part, f"p0:{h.left[0] if h.left else h.right[0]}", "subdivided-product")


def ladder_graph_finite(k: int) -> BipartiteMultigraph:
    """Induced subgraph of the ladder graph on v_i, u_i for 1 <= i <= 2k-1."""
    if not isinstance(k, int) or k < 1:
        raise InvalidFamily(f"Gk needs k >= 1, got {k!r}")
    lazy = ladder_graph()
    names = [f"{c}{i}" for c in "uv" for i in range(1, 2 * k)]
    keep = set(names)
    left = [v for v in names if lazy.part(v) == LEFT]
    right = [v for v in names if lazy.part(v) == RIGHT]
    edges = {(x, y): 1 for x in left for y in lazy.neighbors(x) if y in keep}
    return BipartiteMultigraph(left, right, edges)


def ladder_digraph_finite(k: int) -> Digraph:
    """Induced subdigraph on w_1..w_{2k+1} minus arcs (w2,w3) and (w_{2k-1},w_{2k})."""
    if not isinstance(k, int) or k < 1:
        raise InvalidFamily(f"Dk needs k >= 1, got {k!r}")
    lazy = ladder_digraph()
    names = [f"w{i}" for i in range(1, 2 * k + 2)]
    keep = set(names)
    arcs = {(x, y) for x in names for y in lazy.out_neighbors(x) if y in keep}
    arcs -= {("w2", "w3"), (f"w{2 * k - 1}", f"w{2 * k}")}
    return Digraph(names, arcs)


def cycle_graph(n: int) -> BipartiteMultigraph:
    """The even cycle C_2n as a bipartite graph (a_i left, b_i right)."""
    left = [f"a{i}" for i in range(n)]
    right = [f"b{i}" for i in range(n)]
    edges = {}
    for i in range(n):
        edges[(left[i], right[i])] = 1
        edges[(left[(i + 1) % n], right[i])] = 1
    return BipartiteMultigraph(left, right, edges)


FAMILIES = ("ladder-graph", "ladder-digraph", "subdivided-product", "Gk", "Dk")


def family(name: str, **params):
    """Built-in family by name.

    ``subdivided-product`` takes ``H`` (a finite regular bipartite graph);
    ``Gk`` and ``Dk`` take ``k`` and return finite objects.
    """
    if name == "ladder-graph":
        return ladder_graph()
    if name == "ladder-digraph":
        return ladder_digraph()
    if name == "subdivided-product":
        h = params.get("H")
        if not isinstance(h, BipartiteMultigraph):
            raise InvalidFamily("subdivided-product needs H, a bipartite graph")
        return subdivided_product(h)
    if name == "Gk":
        return ladder_graph_finite(params.get("k"))
    if name == "Dk":
        return ladder_digraph_finite(params.get("k"))
    raise InvalidFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def as_lazy(g: Digraph | BipartiteMultigraph) -> LazyDigraph | LazyGraph:
    """View a finite object through the lazy interface."""
    if isinstance(g, Digraph):
        seed = g.vertices[0] if g.vertices else ""
        return LazyDigraph(g.out_neighbors, g.in_neighbors, seed, "finite-digraph")
    seed = g.vertices[0] if g.vertices else ""
    return LazyGraph(g.neighbors, g.part, seed, "finite-graph")


# windows ------------------------------------------------------------------

def _undirected(l):
    if isinstance(l, LazyDigraph):
        return lambda v: set(l.out_neighbors(v)) | set(l.in_neighbors(v))
    return lambda v: set(l.neighbors(v))


def ball(l: LazyDigraph | LazyGraph, center: str, r: int) -> tuple[str, ...]:
    """Vertices within undirected distance r of ``center``, sorted."""
    if r < 0:
        raise ValueError("radius must be nonnegative")
    step = _undirected(l)
    dist = {center: 0}
    queue = deque([center])
    while queue:
        v = queue.popleft()
        if dist[v] == r:
            continue
        for w in sorted(step(v)):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return tuple(sorted(dist))


def double_window(l: LazyDigraph, window: Iterable[str]) -> tuple[BipartiteMultigraph, list[str]]:
    """Bipartite double of the window plus every edge touching its closure.

    Returns the finite multigraph and the unclosed window S* (both copies of
    each window vertex). Degrees of closure vertices are exact.
    """
    window = set(window)
    heads = set(window)
    for x in window:
        heads.update(l.out_neighbors(x))
    edges = {}
    for x in window:
        for y in l.out_neighbors(x):
            edges[(out_copy(x), in_copy(y))] = 1
    for y in heads:
        for x in l.in_neighbors(y):
            edges[(out_copy(x), in_copy(y))] = 1
    left = {x for x, _ in edges} | {out_copy(x) for x in window}
    right = {y for _, y in edges} | {in_copy(y) for y in heads}
    s_star = sorted([out_copy(x) for x in window] + [in_copy(x) for x in window])
    return BipartiteMultigraph(left, right, edges), s_star


def graph_window(l: LazyGraph, window: Iterable[str]) -> BipartiteMultigraph:
    """The window's closure plus every edge touching it."""
    window = set(window)
    closed = set(window)
    for x in window:
        if l.part(x) == LEFT:
            closed.update(l.neighbors(x))
    edges = {}
    verts = set(closed)
    for x in closed:
        for y in l.neighbors(x):
            verts.add(y)
            edges[(x, y) if l.part(x) == LEFT else (y, x)] = 1
    left = [v for v in verts if l.part(v) == LEFT]
    right = [v for v in verts if l.part(v) == RIGHT]
    return BipartiteMultigraph(left, right, edges)


@dataclass(frozen=True)
class WindowReport:
    verdict: str
    radius: int
    k: int
    window_size: int
    certificate: Certificate | DigraphCertificate | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict == REFUTED

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "radius": self.radius, "k": self.k, "window_size": self.window_size}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def window_refute(l: LazyDigraph | LazyGraph, k: int, center: str | None = None, r: int = 0) -> WindowReport:
    """Try to refute generation by at most k derangements (or cover by k factors)."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)
    center = l.seed if center is None else center
    window = ball(l, center, r)
    if isinstance(l, LazyDigraph):
        g, s_star = double_window(l, window)
    else:
        g, s_star = graph_window(l, window), list(window)
    size = len(close_window(g, s_star))
    res = k_thickening_on(g, s_star, k)
    if isinstance(res, Certificate):
        cert = certificate_from_double(res) if isinstance(l, LazyDigraph) else res
        return WindowReport(REFUTED, r, k, size, cert)
    return WindowReport(UNRESOLVED, r, k, size)


def recheck_lazy(l: LazyDigraph | LazyGraph, cert) -> bool:
    """Recompute a window certificate with degrees taken from the full graph."""
    if isinstance(l, LazyDigraph):
        if cert.condition == "i":
            (x,) = cert.T
            deg = len(l.out_neighbors(x) if cert.direction == "out" else l.in_neighbors(x))
            return deg == cert.rhs and cert.lhs == cert.k < deg
        fwd, back = (l.out_neighbors, l.in_neighbors) if cert.condition == "ii" else (l.in_neighbors, l.out_neighbors)
        t = set(cert.T)
        n = set().union(*(set(fwd(x)) for x in t))
        lhs = cert.k * (len(n) - len(t))
        rhs = sum(len(back(v)) for v in n) - sum(len(fwd(v)) for v in t)
        return (lhs, rhs) == (cert.lhs, cert.rhs) and lhs < rhs
    if cert.kind == DEGREE_EXCEEDED:
        (x,) = cert.T
        return len(l.neighbors(x)) == cert.rhs > cert.k
    t = set(cert.T)
    if {l.part(v) for v in t} != {cert.part}:
        return False
    n = set().union(*(set(l.neighbors(x)) for x in t))
    lhs = cert.k * (len(n) - len(t))
    rhs = sum(len(l.neighbors(v)) for v in n) - sum(len(l.neighbors(v)) for v in t)
    return (lhs, rhs) == (cert.lhs, cert.rhs) and lhs < rhs


@dataclass(frozen=True)
class ScanRow:
    k: int
    radius: int | None
    report: WindowReport | None = None


def lower_bound_scan(l: LazyDigraph | LazyGraph, k_max: int = DEFAULT_K_MAX, r_max: int | None = None, center: str | None = None) -> list[ScanRow]:
    """For each k <= k_max the least radius <= r_max at which a window refutes."""
    if k_max < 1:
        raise InvalidK(k_max)
    if r_max is None:
        r_max = 4 * k_max
    rows = []
    for k in range(1, k_max + 1):
        row = ScanRow(k, None)
        for r in range(r_max + 1):
            rep = window_refute(l, k, center, r)
            if rep.refuted:
                row = ScanRow(k, r, rep)
                break
        rows.append(row)
    return rows
