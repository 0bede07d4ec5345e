"""Digraphs, bipartite multigraphs, the DGF text format and the bipartite double.

All objects are immutable once built. Vertex names are whitespace-free
strings; every iteration order is derived from plain lexicographic order of
the names so that downstream output is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidVertex, ParseError

LEFT = "left"
RIGHT = "right"


class Digraph:
    """Finite simple loopless digraph on named vertices."""

    __slots__ = ("vertices", "arcs", "_index", "_out", "_in")

    def __init__(self, vertices: Iterable[str] = (), arcs: Iterable[tuple[str, str]] = ()):
        arcs = frozenset((str(u), str(v)) for u, v in arcs)
        names = {str(v) for v in vertices}
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop arc at {u}")
            names.add(u)
            names.add(v)
        for name in names:
            _check_name(name)
        self.vertices: tuple[str, ...] = tuple(sorted(names))
        self.arcs: frozenset[tuple[str, str]] = arcs
        self._index = {v: i for i, v in enumerate(self.vertices)}
        out: dict[str, list[str]] = {v: [] for v in self.vertices}
        inn: dict[str, list[str]] = {v: [] for v in self.vertices}
        for u, v in sorted(arcs):
            out[u].append(v)
            inn[v].append(u)
        self._out = {v: tuple(ns) for v, ns in out.items()}
        self._in = {v: tuple(sorted(ns)) for v, ns in inn.items()}

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        return f"Digraph(|V|={len(self.vertices)}, |E|={len(self.arcs)})"

    def __contains__(self, vertex) -> bool:
        return vertex in self._index

    def index(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise InvalidVertex(vertex) from None

    def out_neighbors(self, x: str) -> tuple[str, ...]:
        self.index(x)
        return self._out[x]

    def in_neighbors(self, x: str) -> tuple[str, ...]:
        self.index(x)
        return self._in[x]

    def out_degree(self, x: str) -> int:
        return len(self.out_neighbors(x))

    def in_degree(self, x: str) -> int:
        return len(self.in_neighbors(x))

    def max_degree(self) -> int:
        """Largest in- or out-degree; 0 for an arcless digraph."""
        return max((max(len(self._out[v]), len(self._in[v])) for v in self.vertices), default=0)

    def is_regular(self, k: int) -> bool:
        return all(len(self._out[v]) == k and len(self._in[v]) == k for v in self.vertices)

    def sorted_arcs(self) -> list[tuple[str, str]]:
        return sorted(self.arcs)

    def relabel(self, mapping: Mapping[str, str]) -> "Digraph":
        return Digraph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in self.arcs))

    def induced(self, subset: Iterable[str]) -> "Digraph":
        keep = set(subset)
        for v in keep:
            self.index(v)
        return Digraph(keep, ((u, v) for u, v in self.arcs if u in keep and v in keep))


class BipartiteMultigraph:
    """Bipartite multigraph with explicit parts and edge multiplicities.

    ``mu`` maps (left vertex, right vertex) to a positive multiplicity; pairs
    that are absent have multiplicity zero. A simple bipartite graph is the
    case where every multiplicity is 1.
    """

    __slots__ = ("left", "right", "mu", "_part", "_nbrs", "_deg")

    def __init__(self, left: Iterable[str], right: Iterable[str], mu: Mapping[tuple[str, str], int] | Iterable[tuple[str, str]] = ()):
        left_set = {str(v) for v in left}
        right_set = {str(v) for v in right}
        both = left_set & right_set
        if both:
            raise ValueError(f"vertex {min(both)} is in both parts")
        for name in left_set | right_set:
            _check_name(name)
        if not isinstance(mu, Mapping):
            pairs: dict[tuple[str, str], int] = {}
            for x, y in mu:
                pairs[(x, y)] = pairs.get((x, y), 0) + 1
            mu = pairs
        clean: dict[tuple[str, str], int] = {}
        for (x, y), m in mu.items():
            if m < 0 or int(m) != m:
                raise ValueError(f"bad multiplicity {m!r} on {x}-{y}")
            if x not in left_set or y not in right_set:
                raise ValueError(f"edge {x}-{y} must join a left vertex to a right vertex")
            if m:
                clean[(x, y)] = int(m)
        self.left: tuple[str, ...] = tuple(sorted(left_set))
        self.right: tuple[str, ...] = tuple(sorted(right_set))
        self.mu: dict[tuple[str, str], int] = dict(sorted(clean.items()))
        self._part = {v: LEFT for v in self.left}
        self._part.update({v: RIGHT for v in self.right})
        nbrs: dict[str, list[str]] = {v: [] for v in self._part}
        deg = {v: 0 for v in self._part}
        for (x, y), m in self.mu.items():
            nbrs[x].append(y)
            nbrs[y].append(x)
            deg[x] += m
            deg[y] += m
        self._nbrs = {v: tuple(sorted(ns)) for v, ns in nbrs.items()}
        self._deg = deg

    def __eq__(self, other):
        if not isinstance(other, BipartiteMultigraph):
            return NotImplemented
        return self.left == other.left and self.right == other.right and self.mu == other.mu

    def __hash__(self):
        return hash((self.left, self.right, tuple(self.mu.items())))

    def __repr__(self):
        return f"BipartiteMultigraph(|V1|={len(self.left)}, |V2|={len(self.right)}, |E|={self.edge_count()})"

    def __contains__(self, vertex) -> bool:
        return vertex in self._part

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.left + self.right

    def part(self, v: str) -> str:
        try:
            return self._part[v]
        except KeyError:
            raise InvalidVertex(v) from None

    def neighbors(self, v: str) -> tuple[str, ...]:
        self.part(v)
        return self._nbrs[v]

    def degree(self, v: str) -> int:
        """Number of edges at ``v``, counted with multiplicity."""
        self.part(v)
        return self._deg[v]

    def multiplicity(self, x: str, y: str) -> int:
        if self.part(x) == RIGHT:
            x, y = y, x
        return self.mu.get((x, y), 0)

    def edges(self) -> list[tuple[str, str]]:
        """Distinct adjacent (left, right) pairs, sorted."""
        return list(self.mu)

    def edge_count(self) -> int:
        return sum(self.mu.values())

    def is_simple(self) -> bool:
        return all(m == 1 for m in self.mu.values())

    def max_degree(self) -> int:
        return max(self._deg.values(), default=0)

    def is_regular(self, k: int) -> bool:
        return all(d == k for d in self._deg.values())

    def neighborhood(self, t: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for v in t:
            out.update(self.neighbors(v))
        return frozenset(out)

    def induced(self, s: Iterable[str]) -> "BipartiteMultigraph":
        return induced_multigraph(self, s)

    def support(self) -> "BipartiteMultigraph":
        return BipartiteMultigraph(self.left, self.right, {e: 1 for e in self.mu})


@dataclass(frozen=True)
class OneFactor:
    """A perfect matching, stored as sorted (left, right) pairs."""

    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def mate(self) -> dict[str, str]:
        out = {}
        for x, y in self.edges:
            out[x] = y
            out[y] = x
        return out

    def is_factor_of(self, g: BipartiteMultigraph) -> bool:
        seen: set[str] = set()
        for x, y in self.edges:
            if g.mu.get((x, y), 0) < 1 or x in seen or y in seen:
                return False
            seen.add(x)
            seen.add(y)
        return len(seen) == len(g.left) + len(g.right)


def _check_name(name: str) -> None:
    if not name or any(c.isspace() for c in name):
        raise ValueError(f"invalid vertex name {name!r}")


def out_neighborhood(d: Digraph, t: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for x in t:
        out.update(d.out_neighbors(x))
    return frozenset(out)


def in_neighborhood(d: Digraph, t: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for x in t:
        out.update(d.in_neighbors(x))
    return frozenset(out)


def neighborhood(g: BipartiteMultigraph, t: Iterable[str]) -> frozenset[str]:
    return g.neighborhood(t)


def induced_multigraph(g: BipartiteMultigraph, s: Iterable[str]) -> BipartiteMultigraph:
    keep = set(s)
    for v in keep:
        g.part(v)
    return BipartiteMultigraph(
        (v for v in g.left if v in keep),
        (v for v in g.right if v in keep),
        {(x, y): m for (x, y), m in g.mu.items() if x in keep and y in keep},
    )


# bipartite double ---------------------------------------------------------

def out_copy(x: str) -> str:
    return f"{x}.1"


def in_copy(x: str) -> str:
    return f"{x}.2"


def strip_copy(name: str) -> str:
    """Inverse of out_copy/in_copy."""
    base, _, tag = name.rpartition(".")
    if tag not in ("1", "2") or not base:
        raise ValueError(f"{name!r} is not a bipartite-double vertex")
    return base


def bipartite_double(d: Digraph) -> BipartiteMultigraph:
    """Left part holds x.1, right part x.2; arc (x, y) becomes edge x.1 - y.2."""
    return BipartiteMultigraph(
        (out_copy(v) for v in d.vertices),
        (in_copy(v) for v in d.vertices),
        {(out_copy(u), in_copy(v)): 1 for u, v in d.arcs},
    )


def symmetrize(d: Digraph) -> Digraph:
    """Replace every arc by the pair of opposite arcs (undirected reading)."""
    return Digraph(d.vertices, set(d.arcs) | {(v, u) for u, v in d.arcs})


# DGF text format ----------------------------------------------------------

def parse_graph(text: str, dedup: bool = False) -> Digraph | BipartiteMultigraph:
    """Parse DGF text into a Digraph or a BipartiteMultigraph.

    Duplicate arc/edge lines raise ``ParseError("duplicate")`` unless
    ``dedup`` is set, in which case repeats are dropped silently.
    """
    header = None
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if tokens != ["digraph"] and tokens != ["bipartite"]:
                raise ParseError("syntax", lineno, "expected 'digraph' or 'bipartite' header")
            header = tokens[0]
            continue
        lines.append((lineno, tokens))
    if header is None:
        raise ParseError("syntax", None, "empty input")
    if header == "digraph":
        return _parse_digraph(lines, dedup)
    return _parse_bipartite(lines, dedup)


def _parse_digraph(lines, dedup):
    vertices: set[str] = set()
    arcs: set[tuple[str, str]] = set()
    for lineno, tokens in lines:
        op, args = tokens[0], tokens[1:]
        if op == "v" and len(args) == 1:
            if args[0] in vertices and not dedup:
                raise ParseError("duplicate", lineno, f"vertex {args[0]}")
            vertices.add(args[0])
        elif op == "a" and len(args) == 2:
            u, v = args
            if u == v:
                raise ParseError("loop", lineno, f"{u} -> {v}")
            if (u, v) in arcs and not dedup:
                raise ParseError("duplicate", lineno, f"{u} -> {v}")
            arcs.add((u, v))
        else:
            raise ParseError("syntax", lineno, f"unexpected {' '.join(tokens)!r}")
    return Digraph(vertices, arcs)


def _parse_bipartite(lines, dedup):
    part: dict[str, str] = {}
    mu: dict[tuple[str, str], int] = {}
    for lineno, tokens in lines:
        op, args = tokens[0], tokens[1:]
        if op in ("l", "r") and len(args) == 1:
            side = LEFT if op == "l" else RIGHT
            name = args[0]
            if name in part:
                if part[name] != side:
                    raise ParseError("part", lineno, f"{name} declared in both parts")
                if not dedup:
                    raise ParseError("duplicate", lineno, f"vertex {name}")
            part[name] = side
        elif op == "e" and len(args) in (2, 3):
            x, y = args[0], args[1]
            if x == y:
                raise ParseError("loop", lineno, f"{x} - {y}")
            if part.get(x) != LEFT or part.get(y) != RIGHT:
                raise ParseError("part", lineno, f"edge {x} {y} needs a declared left then right vertex")
            m = 1
            if len(args) == 3:
                try:
                    m = int(args[2])
                except ValueError:
                    raise ParseError("syntax", lineno, f"bad multiplicity {args[2]!r}") from None
                if m < 1:
                    raise ParseError("syntax", lineno, "multiplicity must be positive")
            if (x, y) in mu:
                if not dedup:
                    raise ParseError("duplicate", lineno, f"edge {x} {y}")
                continue
            mu[(x, y)] = m
        else:
            raise ParseError("syntax", lineno, f"unexpected {' '.join(tokens)!r}")
    left = [v for v, s in part.items() if s == LEFT]
    right = [v for v, s in part.items() if s == RIGHT]
    return BipartiteMultigraph(left, right, mu)


def serialize(g: Digraph | BipartiteMultigraph) -> str:
    if isinstance(g, Digraph):
        out = ["digraph"]
        out += [f"v {v}" for v in g.vertices]
        out += [f"a {u} {v}" for u, v in g.sorted_arcs()]
    else:
        out = ["bipartite"]
        out += [f"l {v}" for v in g.left]
        out += [f"r {v}" for v in g.right]
        out += [f"e {x} {y}" if m == 1 else f"e {x} {y} {m}" for (x, y), m in g.mu.items()]
    return "\n".join(out) + "\n"


def read_graph(path: str, dedup: bool = False) -> Digraph | BipartiteMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), dedup=dedup)
