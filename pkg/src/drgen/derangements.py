"""Generating digraphs by derangements.

A set of derangements generates the digraph whose arcs are all pairs
(x, sigma(x)). Through the bipartite double, generating sets correspond to
1-factor covers: the factor of sigma consists of the edges x.1 - sigma(x).2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cover import BlockedEdge, NoFactor, NotCoverable, OneFactorCover, cover_with_k, is_one_extendable, min_cover
from .errors import InvalidK, InvalidPermutation, InvalidVertex, NotDerangement
from .graphs import LEFT, Digraph, OneFactor, bipartite_double, in_neighborhood, out_neighborhood, strip_copy
from .thickening import DEGREE_EXCEEDED, Certificate


class Derangement:
    """Fixed-point-free permutation of a finite vertex set."""

    __slots__ = ("_map", "_key")

    def __init__(self, mapping: Mapping[str, str]):
        mapping = dict(mapping)
        if set(mapping.values()) != set(mapping) or len(set(mapping.values())) != len(mapping):
            raise InvalidPermutation("mapping is not a bijection of its domain")
        for x, y in mapping.items():
            if x == y:
                raise NotDerangement(f"{x} is a fixed point")
        self._map = dict(sorted(mapping.items()))
        self._key = frozenset(self._map.items())

    def __call__(self, x: str) -> str:
        return self._map[x]

    def __eq__(self, other):
        if not isinstance(other, Derangement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Derangement({self.cycle_notation()!r})"

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self._map)

    def arcs(self) -> set[tuple[str, str]]:
        return set(self._map.items())

    def cycles(self) -> list[tuple[str, ...]]:
        """Cycles rotated to start at their least vertex, sorted by that vertex."""
        seen: set[str] = set()
        out = []
        for start in self._map:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self._map[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self._map[x]
            out.append(tuple(cyc))
        return out

    def cycle_notation(self) -> str:
        return "".join("(" + " ".join(c) + ")" for c in self.cycles())


def cycle_notation(sigma: Derangement) -> str:
    return sigma.cycle_notation()


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, vertices: Iterable[str] | None = None) -> Derangement:
    """Read cycle notation such as ``"(w1 w3 w2)(w4 w5)"``.

    Every vertex of ``vertices`` must occur in some cycle of length >= 2;
    when ``vertices`` is omitted the domain is whatever the cycles mention.
    """
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise InvalidPermutation(f"malformed cycle notation {text!r}")
    mapping: dict[str, str] = {}
    for body in _CYCLE.findall(stripped):
        cyc = body.split()
        if len(cyc) < 2:
            raise NotDerangement(f"cycle ({body.strip()}) fixes a point")
        for i, x in enumerate(cyc):
            if x in mapping:
                raise InvalidPermutation(f"{x} appears twice")
            mapping[x] = cyc[(i + 1) % len(cyc)]
    if vertices is not None:
        vertices = set(vertices)
        extra = set(mapping) - vertices
        if extra:
            raise InvalidVertex(min(extra))
        missing = vertices - set(mapping)
        if missing:
            raise NotDerangement(f"{min(missing)} is fixed")
    return Derangement(mapping)


class DerangementSet:
    """Distinct derangements of a common vertex set, sorted by cycle notation."""

    __slots__ = ("vertices", "derangements")

    def __init__(self, derangements: Iterable[Derangement], vertices: Iterable[str] | None = None):
        ds = sorted(set(derangements), key=Derangement.cycle_notation)
        if vertices is None:
            vertices = ds[0].domain if ds else ()
        self.vertices = tuple(sorted(vertices))
        for s in ds:
            if s.domain != set(self.vertices):
                raise InvalidPermutation("derangements act on different vertex sets")
        self.derangements: tuple[Derangement, ...] = tuple(ds)

    def __len__(self):
        return len(self.derangements)

    def __iter__(self):
        return iter(self.derangements)

    def __eq__(self, other):
        if not isinstance(other, DerangementSet):
            return NotImplemented
        return self.vertices == other.vertices and self.derangements == other.derangements

    def __repr__(self):
        return f"DerangementSet({self.notation()!r})"

    @property
    def generated_arcs(self) -> frozenset[tuple[str, str]]:
        return frozenset(a for s in self.derangements for a in s.arcs())

    def notation(self) -> list[str]:
        return [s.cycle_notation() for s in self.derangements]

    def to_json(self, k: int | None = None) -> dict:
        return {"k": len(self) if k is None else k, "derangements": self.notation()}


# certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class DigraphCertificate:
    """Violated generation condition for at most k derangements.

    condition "i": a vertex of T has out- (or in-, see ``direction``) degree
    rhs > k = lhs. Conditions "ii" and "iii" use out- and in-neighbourhoods:
    ``k(|N(T)|-|T|) < sum deg N(T) - sum deg T`` with lhs/rhs the two sides.
    """

    condition: str
    T: tuple[str, ...]
    lhs: int
    rhs: int
    k: int
    direction: str | None = None

    def to_json(self) -> dict:
        out = {"kind": f"condition-{self.condition}", "T": list(self.T), "lhs": self.lhs, "rhs": self.rhs, "k": self.k}
        if self.direction:
            out["direction"] = self.direction
        return out

    def recheck(self, d: Digraph) -> bool:
        if self.condition == "i":
            (x,) = self.T
            deg = d.out_degree(x) if self.direction == "out" else d.in_degree(x)
            return deg == self.rhs and self.lhs == self.k < deg
        lhs, rhs = digraph_condition_sides(d, self.T, self.k, self.condition)
        return (lhs, rhs) == (self.lhs, self.rhs) and lhs < rhs


def digraph_condition_sides(d: Digraph, t: Iterable[str], k: int, condition: str) -> tuple[int, int]:
    t = set(t)
    if condition == "ii":
        n = out_neighborhood(d, t)
        rhs = sum(d.in_degree(v) for v in n) - sum(d.out_degree(v) for v in t)
    elif condition == "iii":
        n = in_neighborhood(d, t)
        rhs = sum(d.out_degree(v) for v in n) - sum(d.in_degree(v) for v in t)
    else:
        raise ValueError(f"unknown condition {condition!r}")
    return k * (len(n) - len(t)), rhs


def certificate_from_double(cert: Certificate) -> DigraphCertificate:
    """Read a cover certificate of the double as a digraph condition.

    Left-part sets (x.1) give condition (ii), right-part sets (x.2) give
    condition (iii); degree violations give condition (i).
    """
    t = tuple(sorted(strip_copy(v) for v in cert.T))
    out_side = cert.part == LEFT
    if cert.kind == DEGREE_EXCEEDED:
        return DigraphCertificate("i", t, cert.lhs, cert.rhs, cert.k, "out" if out_side else "in")
    return DigraphCertificate("ii" if out_side else "iii", t, cert.lhs, cert.rhs, cert.k)


@dataclass(frozen=True)
class GenerabilityCertificate:
    """Why no set of derangements at all generates the digraph.

    condition "i": ``|N(T)| < |T|`` for the out- (or in-) neighbourhood.
    condition "ii": ``|N+(T)| == |T|`` yet ``escape`` lies in N-(N+(T)) outside T.
    condition "iii": the same with the directions swapped.
    """

    condition: str
    T: tuple[str, ...]
    direction: str | None = None
    escape: str | None = None

    def recheck(self, d: Digraph) -> bool:
        fwd, back = (out_neighborhood, in_neighborhood)
        if self.direction == "in" or self.condition == "iii":
            fwd, back = back, fwd
        n = fwd(d, self.T)
        if self.condition == "i":
            return len(n) < len(self.T)
        return len(n) == len(self.T) and self.escape in back(d, n) and self.escape not in self.T

    def to_json(self) -> dict:
        out = {"kind": f"condition-{self.condition}", "T": list(self.T)}
        if self.direction:
            out["direction"] = self.direction
        if self.escape is not None:
            out["escape"] = self.escape
        return out


def _generability_certificate(reason: BlockedEdge | NoFactor) -> GenerabilityCertificate:
    if isinstance(reason, NoFactor):
        v = reason.violator
        return GenerabilityCertificate("i", tuple(sorted(strip_copy(x) for x in v.T)), "out" if v.part == LEFT else "in")
    t = tuple(sorted(strip_copy(x) for x in reason.T))
    if reason.violation == "hall":
        return GenerabilityCertificate("i", t, "out" if reason.part == LEFT else "in")
    return GenerabilityCertificate("ii" if reason.part == LEFT else "iii", t, escape=strip_copy(reason.escape))


# operations -----------------------------------------------------------------

def _derangement_from_factor(f: OneFactor) -> Derangement:
    return Derangement({strip_copy(x): strip_copy(y) for x, y in f})


def _set_from_cover(d: Digraph, cover: OneFactorCover) -> DerangementSet:
    return DerangementSet((_derangement_from_factor(f) for f in cover.factors), d.vertices)


def generate_with_k(d: Digraph, k: int) -> DerangementSet | DigraphCertificate:
    """At most k derangements generating exactly E(d), or a violated condition."""
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)
    res = cover_with_k(bipartite_double(d), k)
    if isinstance(res, Certificate):
        return certificate_from_double(res)
    return _set_from_cover(d, res)


@dataclass(frozen=True)
class MinDerangements:
    k: int
    derangements: DerangementSet


@dataclass(frozen=True)
class NotGenerable:
    reason: GenerabilityCertificate


def min_derangements(d: Digraph) -> MinDerangements | NotGenerable:
    res = min_cover(bipartite_double(d))
    if isinstance(res, NotCoverable):
        return NotGenerable(_generability_certificate(res.reason))
    return MinDerangements(res.k, _set_from_cover(d, res.cover))


def can_generate_some(d: Digraph) -> bool | GenerabilityCertificate:
    """True iff some (finite) set of derangements generates ``d``."""
    res = is_one_extendable(bipartite_double(d))
    if res is True:
        return True
    return _generability_certificate(res)


@dataclass(frozen=True)
class Mismatch:
    missing: tuple[tuple[str, str], ...] = ()
    extra: tuple[tuple[str, str], ...] = ()
    detail: str = ""


def verify_generates(d: Digraph, s: Iterable[Derangement]) -> bool | Mismatch:
    s = list(s)
    vs = set(d.vertices)
    for sigma in s:
        if sigma.domain != vs:
            return Mismatch(detail=f"{sigma.cycle_notation()} does not act on V(d)")
    if not s and vs:
        return Mismatch(tuple(sorted(d.arcs)), (), "empty set of derangements")
    got = {a for sigma in s for a in sigma.arcs()}
    if got == set(d.arcs):
        return True
    return Mismatch(tuple(sorted(d.arcs - got)), tuple(sorted(got - d.arcs)), "arc sets differ")


@dataclass(frozen=True)
class ConditionReport:
    k: int
    max_out_degree: int
    max_in_degree: int
    degree_ok: bool
    ii: tuple[int, int, bool]
    iii: tuple[int, int, bool]

    @property
    def holds(self) -> bool:
        return self.degree_ok and self.ii[2] and self.iii[2]


def check_conditions(d: Digraph, t: Iterable[str], k: int) -> ConditionReport:
    t = set(t)
    for v in t:
        d.index(v)
    out_max = max((d.out_degree(v) for v in d.vertices), default=0)
    in_max = max((d.in_degree(v) for v in d.vertices), default=0)
    sides = {}
    for cond in ("ii", "iii"):
        lhs, rhs = digraph_condition_sides(d, t, k, cond)
        sides[cond] = (lhs, rhs, lhs >= rhs)
    return ConditionReport(k, out_max, in_max, out_max <= k and in_max <= k, sides["ii"], sides["iii"])
