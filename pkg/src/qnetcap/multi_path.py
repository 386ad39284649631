"""Multi-path (flooding) network capacity via max-flow / min-cut.

The undirected network is turned into a directed flow network: alice's edges
leave her (source), bob's edges enter him (sink), and every interior edge is
split into two opposite arcs of equal capacity.  The maximum flow on that
network equals the minimum over alice/bob cuts of the total crossing
capacity, which is the multi-path capacity of a distillable network.

Dinic's blocking-flow algorithm is used because its phase count depends only
on the graph size, so it terminates on real-valued (irrational) capacities
where naive augmenting-path schemes need not.
"""

from __future__ import annotations

from dataclasses import dataclass

from .channels import capacity
from .network import Cut, QNetwork, make_cut

#: Residual capacities at or below this are treated as saturated.  This is
#: the only epsilon inside an algorithm in the package; it guards against
#: denormal drift in repeated float subtractions.
RESIDUAL_EPS = 1e-12


@dataclass(frozen=True)
class Arc:
    """Directed arc of the flow network, tied back to its undirected edge."""

    source: str
    target: str
    capacity: float
    edge_id: str
    forward: bool  # True when source is the edge's declared u endpoint


@dataclass(frozen=True)
class FlowNetwork:
    """Directed version of a network: alice a pure source, bob a pure sink."""

    points: tuple[str, ...]
    alice: str
    bob: str
    arcs: tuple[Arc, ...]
    #: edge id -> indices into ``arcs`` (one arc for end-point edges, two for
    #: interior edges, one per direction)
    mapping: dict[str, tuple[int, ...]]


@dataclass(frozen=True)
class FlowReport:
    """Optimal flow value with per-edge effective rates and a certifying cut.

    ``effective_rates[edge_id]`` is signed relative to the edge's declared
    (u, v) order: positive means net flow u -> v.  ``orientation`` holds the
    flow direction for edges actually carrying flow; edges with zero net rate
    have no orientation.  ``min_cut`` is extracted from residual reachability
    and its total crossing capacity equals ``value``.
    """

    value: float
    effective_rates: dict[str, float]
    orientation: dict[str, tuple[str, str]]
    min_cut: Cut


def build_flow_network(net: QNetwork) -> FlowNetwork:
    """Split undirected edges into arcs; at most 2|E| arcs result."""
    arcs: list[Arc] = []
    mapping: dict[str, tuple[int, ...]] = {}
    for edge in net.edges:
        cap = capacity(edge.channel)
        indices: list[int] = []
        if net.alice in (edge.u, edge.v):
            other = edge.other(net.alice)
            indices.append(len(arcs))
            arcs.append(Arc(net.alice, other, cap, edge.edge_id, net.alice == edge.u))
        elif net.bob in (edge.u, edge.v):
            other = edge.other(net.bob)
            indices.append(len(arcs))
            arcs.append(Arc(other, net.bob, cap, edge.edge_id, other == edge.u))
        else:
            indices.append(len(arcs))
            arcs.append(Arc(edge.u, edge.v, cap, edge.edge_id, True))
            indices.append(len(arcs))
            arcs.append(Arc(edge.v, edge.u, cap, edge.edge_id, False))
        mapping[edge.edge_id] = tuple(indices)
    return FlowNetwork(
        points=net.points,
        alice=net.alice,
        bob=net.bob,
        arcs=tuple(arcs),
        mapping=mapping,
    )


class _Residual:
    """Adjacency-array residual graph; entry i pairs with i ^ 1."""

    def __init__(self, points):
        self.to: list[str] = []
        self.cap: list[float] = []
        self.adj: dict[str, list[int]] = {p: [] for p in points}

    def add(self, source: str, target: str, cap: float) -> int:
        index = len(self.to)
        self.to.append(target)
        self.cap.append(cap)
        self.adj[source].append(index)
        self.to.append(source)
        self.cap.append(0.0)
        self.adj[target].append(index + 1)
        return index

    def push(self, index: int, amount: float):
        self.cap[index] -= amount
        self.cap[index ^ 1] += amount


def _bfs_levels(res: _Residual, source: str, sink: str):
    level = {source: 0}
    queue = [source]
    for point in queue:
        for idx in res.adj[point]:
            other = res.to[idx]
            if other not in level and res.cap[idx] > RESIDUAL_EPS:
                level[other] = level[point] + 1
                queue.append(other)
    return level if sink in level else None


def _blocking_flow(res: _Residual, level, ptr, point: str, sink: str, limit: float) -> float:
    if point == sink:
        return limit
    while ptr[point] < len(res.adj[point]):
        idx = res.adj[point][ptr[point]]
        other = res.to[idx]
        if res.cap[idx] > RESIDUAL_EPS and level.get(other) == level[point] + 1:
            pushed = _blocking_flow(
                res, level, ptr, other, sink, min(limit, res.cap[idx])
            )
            if pushed > 0.0:
                res.push(idx, pushed)
                return pushed
        ptr[point] += 1
    return 0.0


def max_flow(net: QNetwork) -> FlowReport:
    """Maximum end-to-end flow with rates, orientation, and min-cut witness.

    Never raises on disconnected inputs: the value is then 0, every rate is
    zero, and the min cut is the trivial bipartition along alice's component.
    """
    flow_net = build_flow_network(net)
    res = _Residual(net.points)
    arc_index = [res.add(a.source, a.target, a.capacity) for a in flow_net.arcs]

    while True:
        level = _bfs_levels(res, net.alice, net.bob)
        if level is None:
            break
        ptr = {p: 0 for p in net.points}
        while True:
            pushed = _blocking_flow(res, level, ptr, net.alice, net.bob, float("inf"))
            if pushed <= 0.0:
                break

    def arc_flow(i: int) -> float:
        return flow_net.arcs[i].capacity - res.cap[arc_index[i]]

    effective_rates: dict[str, float] = {}
    orientation: dict[str, tuple[str, str]] = {}
    for edge in net.edges:
        rate = 0.0
        for i in flow_net.mapping[edge.edge_id]:
            signed = arc_flow(i)
            rate += signed if flow_net.arcs[i].forward else -signed
        effective_rates[edge.edge_id] = rate
        if rate > RESIDUAL_EPS:
            orientation[edge.edge_id] = (edge.u, edge.v)
        elif rate < -RESIDUAL_EPS:
            orientation[edge.edge_id] = (edge.v, edge.u)

    value = sum(
        arc_flow(i)
        for i, arc in enumerate(flow_net.arcs)
        if arc.source == net.alice
    )

    # Points still reachable in the residual graph form the alice side of a
    # minimum cut (standard max-flow/min-cut certificate).
    side_a = {net.alice}
    stack = [net.alice]
    while stack:
        point = stack.pop()
        for idx in res.adj[point]:
            other = res.to[idx]
            if other not in side_a and res.cap[idx] > RESIDUAL_EPS:
                side_a.add(other)
                stack.append(other)
    return FlowReport(
        value=value,
        effective_rates=effective_rates,
        orientation=orientation,
        min_cut=make_cut(net, side_a),
    )


def multi_path_capacity(net: QNetwork) -> float:
    """Multi-path capacity: the max-flow value, 0 when disconnected."""
    return max_flow(net).value
