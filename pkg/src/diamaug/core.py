"""Instance model and exact shortest-path primitives.

An instance is an undirected graph on vertices ``0..n-1`` with nonnegative
integer edge weights. Every vertex pair additionally carries a weight (the
weight a new edge would have if inserted) and every non-edge a positive
insertion cost. A solver may insert non-edges whose costs sum to at most the
instance budget, trying to shrink the diameter of the augmented graph.

All arithmetic is integer-only; unreachable distances are represented by
``math.inf``, which absorbs addition and compares greater than every finite
value.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

INF = math.inf

# Finite values are ints; math.inf marks "unreachable".
Dist = int | float

Pair = tuple[int, int]

# Headroom bound: every finite distance produced by any solver must stay
# below 2**62 so downstream int64 table arithmetic cannot overflow.
MAX_FINITE_DISTANCE = 2**62


class InstanceError(ValueError):
    """Raised when an operation receives an invalid instance."""


def ordered_pair(u: int, v: int) -> Pair:
    """Normalize an unordered vertex pair to (min, max)."""
    if u == v:
        raise ValueError(f"pair must have distinct endpoints, got ({u}, {v})")
    return (u, v) if u < v else (v, u)


def all_pairs(n: int) -> Iterator[Pair]:
    """All unordered vertex pairs of an n-vertex instance, lexicographic."""
    for u in range(n):
        for v in range(u + 1, n):
            yield (u, v)


@dataclass(frozen=True)
class PairTable:
    """Symmetric integer function over unordered vertex pairs.

    Stored as a default value plus per-pair overrides; pairs not listed in
    ``overrides`` take ``default``. A table with ``default=None`` is partial
    and only valid if the overrides cover every pair (checked by
    :func:`validate`).
    """

    default: int | None
    overrides: Mapping[Pair, int] = field(default_factory=dict)

    def get(self, u: int, v: int) -> int:
        value = self.overrides.get(ordered_pair(u, v), self.default)
        if value is None:
            raise KeyError(f"pair ({u}, {v}) has no value and no default")
        return value

    def covers(self, n: int) -> bool:
        if self.default is not None:
            return True
        return all(pair in self.overrides for pair in all_pairs(n))

    def max_value(self) -> int:
        values = list(self.overrides.values())
        if self.default is not None:
            values.append(self.default)
        return max(values, default=0)


@dataclass(frozen=True)
class WeightedInstance:
    """An augmentation problem instance.

    Attributes:
        n: vertex count (vertices are 0..n-1).
        edges: existing undirected edges, as normalized pairs.
        weight: weight of every pair, existing edges and candidate
            insertions alike.
        cost: insertion cost of every pair; consulted only on non-edges and
            required to be a positive integer there.
        budget: total insertion budget.
    """

    n: int
    edges: frozenset[Pair]
    weight: PairTable
    cost: PairTable
    budget: int

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuple of (neighbor, weight) pairs, neighbors ascending."""
        lists: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.edges):
            w = self.weight.get(u, v)
            lists[u].append((v, w))
            lists[v].append((u, w))
        return tuple(tuple(sorted(entries)) for entries in lists)

    def is_edge(self, u: int, v: int) -> bool:
        return ordered_pair(u, v) in self.edges

    def non_edges(self) -> list[Pair]:
        """All insertable pairs, lexicographically sorted."""
        return [pair for pair in all_pairs(self.n) if pair not in self.edges]


@dataclass(frozen=True)
class Augmentation:
    """A set of inserted non-edges with its total cost and resulting diameter."""

    added: frozenset[Pair]
    total_cost: int
    diameter: Dist


def validate(instance: WeightedInstance) -> list[str]:
    """Check every instance invariant and report violations.

    Returns the list of violated invariants; an empty list means the
    instance is valid. Never raises and never mutates.
    """
    problems: list[str] = []
    n = instance.n
    if n < 1:
        problems.append(f"vertex count must be >= 1, got {n}")
        return problems
    if instance.budget < 0:
        problems.append(f"budget must be >= 0, got {instance.budget}")

    for pair in instance.edges:
        u, v = pair
        if not (0 <= u < v < n):
            problems.append(f"edge {pair} is not a normalized pair of distinct vertices in [0, {n})")

    for table, name in ((instance.weight, "weight"), (instance.cost, "cost")):
        for pair, value in table.overrides.items():
            u, v = pair
            if not (0 <= u < v < n):
                problems.append(f"{name} override {pair} is out of range")

    if not instance.weight.covers(n):
        problems.append("weight not total: no default and some pairs unlisted")
    if instance.cost.default is None and any(
        pair not in instance.cost.overrides
        for pair in all_pairs(n)
        if pair not in instance.edges
    ):
        # Costs are only consulted on non-edges, so edges need no cost entry.
        problems.append("cost not total: no default and some non-edges unlisted")

    if instance.weight.default is not None and instance.weight.default < 0:
        problems.append(f"default weight must be >= 0, got {instance.weight.default}")
    for pair, value in instance.weight.overrides.items():
        if value < 0:
            problems.append(f"weight of {pair} must be >= 0, got {value}")

    for pair in all_pairs(n):
        if pair in instance.edges:
            continue
        try:
            cost = instance.cost.get(*pair)
        except KeyError:
            continue
        if cost < 1:
            problems.append(f"cost of non-edge {pair} must be >= 1, got {cost}")

    if instance.weight.covers(n) and n * instance.weight.max_value() >= MAX_FINITE_DISTANCE:
        problems.append(
            f"overflow headroom exceeded: n * max_weight = {n * instance.weight.max_value()} "
            f"must stay below {MAX_FINITE_DISTANCE}"
        )
    return problems


def ensure_valid(instance: WeightedInstance) -> None:
    """Raise InstanceError if the instance violates any invariant."""
    problems = validate(instance)
    if problems:
        raise InstanceError("; ".join(problems))


def _dijkstra(
    n: int,
    adjacency: Iterable[Iterable[tuple[int, int]]],
    source: int,
) -> tuple[list[Dist], list[int]]:
    """Nonnegative-weight single-source shortest paths.

    Returns (distances, predecessors). Ties between equal-length paths are
    resolved toward the smallest predecessor vertex id, so reconstruction is
    deterministic. Predecessor -1 means source or unreachable.
    """
    adj = adjacency if isinstance(adjacency, (list, tuple)) else list(adjacency)
    dist: list[Dist] = [INF] * n
    pred = [-1] * n
    dist[source] = 0
    done = [False] * n
    heap: list[tuple[Dist, int]] = [(0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = u
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and not done[v] and v != source and (pred[v] < 0 or u < pred[v]):
                # settled targets keep their predecessor: chains then follow
                # settlement order and stay acyclic under zero-weight ties
                pred[v] = u
    return dist, pred


def _augmented_adjacency(
    instance: WeightedInstance, added: Iterable[Pair]
) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [list(entries) for entries in instance.adjacency]
    for pair in added:
        u, v = ordered_pair(*pair)
        w = instance.weight.get(u, v)
        adj[u].append((v, w))
        adj[v].append((u, w))
    return adj


def sssp(
    instance: WeightedInstance, source: int, added: Iterable[Pair] = ()
) -> list[Dist]:
    """Distances from ``source`` using the instance edges plus ``added`` pairs.

    Unreachable vertices get ``INF``. With the default empty ``added`` this
    is the plain graph metric.
    """
    if not (0 <= source < instance.n):
        raise ValueError(f"source {source} out of range for n={instance.n}")
    added = tuple(added)
    if added:
        adj = _augmented_adjacency(instance, added)
    else:
        adj = instance.adjacency  # type: ignore[assignment]
    dist, _ = _dijkstra(instance.n, adj, source)
    return dist


def diameter(instance: WeightedInstance, added: Iterable[Pair] = ()) -> Dist:
    """Largest distance between any two vertices; 0 for a single vertex."""
    added = tuple(added)
    adj = _augmented_adjacency(instance, added) if added else instance.adjacency
    worst: Dist = 0
    for source in range(instance.n):
        dist, _ = _dijkstra(instance.n, adj, source)
        for d in dist:
            if d > worst:
                worst = d
    return worst


def augment(instance: WeightedInstance, added: Iterable[Pair]) -> Augmentation:
    """Bundle a set of inserted non-edges with its cost and achieved diameter.

    Raises InstanceError if some pair is already an edge of the instance.
    """
    pairs = frozenset(ordered_pair(*pair) for pair in added)
    for pair in pairs:
        if pair in instance.edges:
            raise InstanceError(f"pair {pair} is already an edge")
    total = sum(instance.cost.get(*pair) for pair in pairs)
    return Augmentation(added=pairs, total_cost=total, diameter=diameter(instance, pairs))
