"""Budget-bounded shortest paths via a layered search digraph.

A path in the complete graph on the instance vertices may use non-edges as
long as their insertion costs sum to at most a budget ``beta``. To compute
the cheapest such path for every budget 0..B at once, the instance graph is
replicated into B+1 layers: staying inside a layer follows existing edges,
jumping from layer ``i`` to layer ``i + cost({u, v})`` crosses the non-edge
``{u, v}``, and a zero-weight arc from ``(v, i)`` to ``(v, i + 1)`` lets a
path stop spending early. The shortest directed distance from ``(u, 0)`` to
``(v, beta)`` then equals the cheapest beta-bounded u-v path weight, and
one single-source run per vertex fills the whole table.

The layered digraph is materialized only on request (for inspection and
tests); the searches generate arcs on the fly.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import (
    INF,
    MAX_FINITE_DISTANCE,
    Dist,
    Pair,
    WeightedInstance,
    ensure_valid,
    ordered_pair,
)

LayeredNode = tuple[int, int]  # (vertex, layer)


class NoPathError(LookupError):
    """Requested a path witness for an unreachable table entry."""


@dataclass(frozen=True, eq=False)
class LayeredDigraph:
    """Materialized layered search digraph (inspection/testing only).

    ``nodes`` lists every (vertex, layer) pair; ``arcs`` lists
    (source, target, weight) triples sorted by (source, target).
    """

    n: int
    budget: int
    nodes: tuple[LayeredNode, ...]
    arcs: tuple[tuple[LayeredNode, LayeredNode, int], ...]


def build_layered_digraph(instance: WeightedInstance) -> LayeredDigraph:
    ensure_valid(instance)
    n, budget = instance.n, instance.budget
    nodes = tuple((v, i) for v in range(n) for i in range(budget + 1))
    arcs: list[tuple[LayeredNode, LayeredNode, int]] = []
    for i in range(budget + 1):
        for u, v in instance.edges:
            w = instance.weight.get(u, v)
            arcs.append(((u, i), (v, i), w))
            arcs.append(((v, i), (u, i), w))
    for u, v in instance.non_edges():
        c = instance.cost.get(u, v)
        w = instance.weight.get(u, v)
        for i in range(budget - c + 1):
            arcs.append(((u, i), (v, i + c), w))
            arcs.append(((v, i), (u, i + c), w))
    for v in range(n):
        for i in range(budget):
            arcs.append(((v, i), (v, i + 1), 0))
    arcs.sort(key=lambda arc: (arc[0], arc[1]))
    return LayeredDigraph(n=n, budget=budget, nodes=nodes, arcs=tuple(arcs))


def _cross_candidates(instance: WeightedInstance) -> list[list[tuple[int, int, int]]]:
    """Per-vertex list of (other, weight, cost) over the non-edges at that vertex."""
    n = instance.n
    neighbor_sets = [set(x for x, _ in entries) for entries in instance.adjacency]
    out: list[list[tuple[int, int, int]]] = []
    for v in range(n):
        row = []
        for x in range(n):
            if x == v or x in neighbor_sets[v]:
                continue
            row.append((x, instance.weight.get(v, x), instance.cost.get(v, x)))
        out.append(row)
    return out


def _layered_dijkstra(
    instance: WeightedInstance,
    source: int,
    cross: list[list[tuple[int, int, int]]],
) -> tuple[list[Dist], list[int]]:
    """Single-source run over the implicit layered digraph from (source, 0).

    Returns distances and predecessors indexed by ``layer * n + vertex``.
    Predecessor ties go to the smaller (vertex, layer) key, making witness
    paths deterministic; -1 marks the source and unreachable nodes.
    """
    n, budget = instance.n, instance.budget
    size = (budget + 1) * n
    dist: list[Dist] = [INF] * size
    pred = [-1] * size
    done = [False] * size
    start = source  # layer 0
    dist[start] = 0
    heap: list[tuple[Dist, int]] = [(0, start)]
    adjacency = instance.adjacency

    def pred_key(node: int) -> tuple[int, int]:
        return (node % n, node // n)

    while heap:
        d, node = heapq.heappop(heap)
        if done[node]:
            continue
        done[node] = True
        layer, v = divmod(node, n)
        base = layer * n

        def relax(target: int, weight: int) -> None:
            nd = d + weight
            if nd < dist[target]:
                dist[target] = nd
                pred[target] = node
                heapq.heappush(heap, (nd, target))
            elif nd == dist[target] and not done[target] and target != start:
                # Rewiring only unsettled targets keeps every predecessor
                # earlier in settlement order, so chains cannot cycle even
                # through zero-weight ties.
                cur = pred[target]
                if cur < 0 or pred_key(node) < pred_key(cur):
                    pred[target] = node

        if layer < budget:
            relax(node + n, 0)
        for x, w in adjacency[v]:
            relax(base + x, w)
        for x, w, c in cross[v]:
            j = layer + c
            if j <= budget:
                relax(j * n + x, w)
    return dist, pred


def _to_int64(dist: list[Dist]) -> np.ndarray:
    return np.array(
        [MAX_FINITE_DISTANCE if d == INF else d for d in dist], dtype=np.int64
    )


def _as_dist(value: int) -> Dist:
    return INF if value >= MAX_FINITE_DISTANCE else int(value)


@dataclass(frozen=True, eq=False)
class SourceDistances:
    """One row of the bounded-cost distance table: a fixed source vertex.

    ``table[beta][v]`` is the cheapest weight of a beta-bounded path from
    the source to ``v`` (int64, with 2**62 standing in for unreachable).
    """

    source: int
    table: np.ndarray

    def get(self, beta: int, v: int) -> Dist:
        return _as_dist(int(self.table[beta, v]))


@dataclass(frozen=True, eq=False)
class BoundedCostDistances:
    """Full bounded-cost distance table ``table[beta][u][v]`` plus provenance.

    Keeps the originating instance so witness paths can be reconstructed on
    demand; predecessors are not stored globally, reconstruction re-runs a
    single-source search.
    """

    instance: WeightedInstance
    table: np.ndarray

    @property
    def budget(self) -> int:
        return self.table.shape[0] - 1

    @property
    def n(self) -> int:
        return self.table.shape[1]

    def get(self, beta: int, u: int, v: int) -> Dist:
        return _as_dist(int(self.table[beta, u, v]))

    def entries(self) -> Iterator[tuple[int, int, int, Dist]]:
        budget, n = self.budget, self.n
        for beta in range(budget + 1):
            for u in range(n):
                for v in range(n):
                    yield beta, u, v, self.get(beta, u, v)


def sssp_b(instance: WeightedInstance, source: int) -> SourceDistances:
    """Bounded-cost distances from one source, for every budget 0..B."""
    ensure_valid(instance)
    if not (0 <= source < instance.n):
        raise ValueError(f"source {source} out of range for n={instance.n}")
    cross = _cross_candidates(instance)
    dist, _ = _layered_dijkstra(instance, source, cross)
    table = _to_int64(dist).reshape(instance.budget + 1, instance.n)
    return SourceDistances(source=source, table=table)


def apsp_b(instance: WeightedInstance) -> BoundedCostDistances:
    """Bounded-cost distances between all pairs, for every budget 0..B.

    One single-source run per vertex over the layered digraph; output is
    independent of the execution order of those runs.
    """
    ensure_valid(instance)
    n, budget = instance.n, instance.budget
    cross = _cross_candidates(instance)
    table = np.empty((budget + 1, n, n), dtype=np.int64)
    for u in range(n):
        dist, _ = _layered_dijkstra(instance, u, cross)
        table[:, u, :] = _to_int64(dist).reshape(budget + 1, n)
    return BoundedCostDistances(instance=instance, table=table)


@dataclass(frozen=True)
class PathWitness:
    """A concrete path realizing a bounded-cost distance table entry.

    ``cost`` sums the insertion costs along the walk (a repeated non-edge
    is counted every time, which can only overstate the budget actually
    needed); ``used_non_edges`` is the set of distinct non-edges crossed.
    """

    vertices: tuple[int, ...]
    used_non_edges: frozenset[Pair]
    weight: int
    cost: int


class PathSource:
    """Witness-path factory for a fixed source vertex.

    Wraps one predecessor-carrying single-source run so several targets and
    budgets can be reconstructed without repeating the search.
    """

    def __init__(self, instance: WeightedInstance, source: int):
        ensure_valid(instance)
        if not (0 <= source < instance.n):
            raise ValueError(f"source {source} out of range for n={instance.n}")
        self.instance = instance
        self.source = source
        cross = _cross_candidates(instance)
        self._dist, self._pred = _layered_dijkstra(instance, source, cross)

    def distance(self, beta: int, v: int) -> Dist:
        n = self.instance.n
        return self._dist[beta * n + v]

    def path_to(self, v: int, beta: int) -> PathWitness:
        """Witness path for the (beta, source, v) table entry.

        Raises NoPathError when the entry is unreachable.
        """
        instance, n = self.instance, self.instance.n
        if not (0 <= beta <= instance.budget):
            raise ValueError(f"beta {beta} out of range for budget {instance.budget}")
        target = beta * n + v
        if self._dist[target] == INF:
            raise NoPathError(f"no path: source {self.source}, target {v}, budget {beta}")
        chain = [target]
        while chain[-1] != self.source:  # source node index == vertex id at layer 0
            chain.append(self._pred[chain[-1]])
        chain.reverse()

        vertices = [self.source]
        used: set[Pair] = set()
        weight = 0
        cost = 0
        for a, b in zip(chain, chain[1:]):
            la, va = divmod(a, n)
            lb, vb = divmod(b, n)
            if va == vb:
                continue  # zero-weight layer advance: same vertex, no step
            weight += instance.weight.get(va, vb)
            if lb != la:
                used.add(ordered_pair(va, vb))
                cost += lb - la
            vertices.append(vb)
        return PathWitness(
            vertices=tuple(vertices),
            used_non_edges=frozenset(used),
            weight=weight,
            cost=cost,
        )


def reconstruct_path(
    dists: BoundedCostDistances, beta: int, u: int, v: int
) -> PathWitness:
    """Witness path for a finite table entry of :func:`apsp_b`."""
    return PathSource(dists.instance, u).path_to(v, beta)
