"""Shared fixtures and corpus builders for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from diamaug import PairTable, WeightedInstance, gen_random


def build(
    n: int,
    edges: set[tuple[int, int]],
    *,
    budget: int = 1,
    default_weight: int = 1,
    default_cost: int = 1,
    edge_weight: int | None = None,
    weight_overrides: dict[tuple[int, int], int] | None = None,
    cost_overrides: dict[tuple[int, int], int] | None = None,
) -> WeightedInstance:
    overrides = dict(weight_overrides or {})
    if edge_weight is not None:
        for edge in edges:
            overrides.setdefault(edge, edge_weight)
    return WeightedInstance(
        n=n,
        edges=frozenset(edges),
        weight=PairTable(default=default_weight, overrides=overrides),
        cost=PairTable(default=default_cost, overrides=cost_overrides or {}),
        budget=budget,
    )


def path_graph(n: int, **kwargs) -> WeightedInstance:
    return build(n, {(i, i + 1) for i in range(n - 1)}, **kwargs)


def cycle_graph(n: int, **kwargs) -> WeightedInstance:
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)}
    return build(n, edges, **kwargs)


def complete_graph(n: int, **kwargs) -> WeightedInstance:
    return build(n, set(combinations(range(n), 2)), **kwargs)


def star_graph(leaves: int, **kwargs) -> WeightedInstance:
    return build(leaves + 1, {(0, i) for i in range(1, leaves + 1)}, **kwargs)


def p4(budget: int = 1, **kwargs) -> WeightedInstance:
    return path_graph(4, budget=budget, **kwargs)


def _connected(n: int, edges: list[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def connected_unit_instances(max_n: int, budget: int) -> list[WeightedInstance]:
    """Every connected graph on up to max_n labeled vertices, unit weights/costs."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for bits in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
            if _connected(n, edges):
                out.append(build(n, set(edges), budget=budget))
    return out


def seeded_corpus(
    count: int,
    seed: int,
    *,
    n_range: tuple[int, int] = (2, 7),
    budget_range: tuple[int, int] = (1, 3),
    max_weight: int = 3,
    max_cost: int = 2,
) -> list[WeightedInstance]:
    """Deterministic random instances; may be disconnected."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(*n_range)
        budget = rng.randint(*budget_range)
        p = rng.choice((0.25, 0.4, 0.6, 0.85))
        out.append(gen_random(n, p, max_weight, max_cost, budget, seed * 100_000 + i))
    return out
