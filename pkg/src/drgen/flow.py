"""Integral max-flow / min-cut on small capacitated networks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from . import kernels
from .errors import InvalidFlow


@dataclass(frozen=True)
class FlowNetwork:
    """Finite network with integer capacities.

    ``arcs`` is a sequence of (tail, head, capacity). Arc order is
    significant: it fixes the augmentation order and hence which maximum
    flow is returned.
    """

    nodes: tuple[Hashable, ...]
    arcs: tuple[tuple[Hashable, Hashable, int], ...]
    source: Hashable
    sink: Hashable

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "arcs", tuple((t, h, c) for t, h, c in self.arcs))
        index = {v: i for i, v in enumerate(self.nodes)}
        if len(index) != len(self.nodes):
            raise ValueError("duplicate node")
        if self.source not in index or self.sink not in index or self.source == self.sink:
            raise ValueError("source and sink must be distinct nodes")
        for t, h, c in self.arcs:
            if t not in index or h not in index:
                raise ValueError(f"arc ({t!r}, {h!r}) has an unknown endpoint")
            if int(c) != c or c < 0:
                raise ValueError(f"capacity {c!r} is not a nonnegative integer")
            if h == self.source:
                raise ValueError("source may not have incoming arcs")
            if t == self.sink:
                raise ValueError("sink may not have outgoing arcs")
        object.__setattr__(self, "_index", index)

    def index(self, node) -> int:
        return self._index[node]

    def source_capacity(self) -> int:
        return sum(c for t, _, c in self.arcs if t == self.source)


@dataclass(frozen=True)
class FlowAssignment:
    values: tuple[int, ...]
    magnitude: int


@dataclass(frozen=True)
class Cut:
    side_a: frozenset
    side_b: frozenset
    capacity: int


def cut_capacity(net: FlowNetwork, side_a) -> int:
    side_a = set(side_a)
    return sum(c for t, h, c in net.arcs if t in side_a and h not in side_a)


def max_flow(net: FlowNetwork) -> tuple[FlowAssignment, Cut]:
    """Maximum flow plus the source-side residual-reachable minimum cut."""
    idx = net._index
    tails = [idx[t] for t, _, _ in net.arcs]
    heads = [idx[h] for _, h, _ in net.arcs]
    caps = [int(c) for _, _, c in net.arcs]
    value, flows, reach = kernels.dinic(len(net.nodes), tails, heads, caps, idx[net.source], idx[net.sink])
    side_a = frozenset(v for v, r in zip(net.nodes, reach) if r)
    side_b = frozenset(net.nodes) - side_a
    flow = FlowAssignment(tuple(int(f) for f in flows), int(value))
    return flow, Cut(side_a, side_b, cut_capacity(net, side_a))


def check_flow(net: FlowNetwork, flow: FlowAssignment) -> bool:
    """Capacity bounds, conservation at internal nodes, consistent magnitude."""
    if len(flow.values) != len(net.arcs):
        raise InvalidFlow(f"flow has {len(flow.values)} values for {len(net.arcs)} arcs")
    balance = {v: 0 for v in net.nodes}
    for (t, h, c), f in zip(net.arcs, flow.values):
        if f < 0 or f > c:
            return False
        balance[t] -= f
        balance[h] += f
    for v, b in balance.items():
        if v not in (net.source, net.sink) and b != 0:
            return False
    return -balance[net.source] == flow.magnitude == balance[net.sink]


def zero_flow(net: FlowNetwork) -> FlowAssignment:
    return FlowAssignment((0,) * len(net.arcs), 0)


def network_from_arcs(n_nodes: int, arcs: Sequence[tuple[int, int, int]], source: int = 0, sink: int | None = None) -> FlowNetwork:
    """Convenience constructor on integer nodes 0..n-1."""
    if sink is None:
        sink = n_nodes - 1
    return FlowNetwork(tuple(range(n_nodes)), tuple(arcs), source, sink)
