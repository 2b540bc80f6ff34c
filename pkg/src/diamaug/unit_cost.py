"""Polynomial-time solvers for instances where every insertion costs 1.

With unit costs the budget k is simply a number of new edges, which admits
cheaper center-based strategies than the budget-exponential solver:

* ``pairwise_centers``: connect every pair of the k+1 greedy centers by a
  cheapest k-bounded path; spends up to k(k+1)^2 insertions for a diameter
  within 3x of the best achievable.
* ``star_centers``: connect the first center to every other center the same
  way; up to k^2 insertions, diameter within 4x.
* ``cluster_spanning_mst``: join the k+1 clusters by a minimum spanning
  tree over their lightest connecting pairs; at most k insertions, diameter
  within (3k+2)x.
"""

from __future__ import annotations

from .budget_paths import NoPathError, PathSource
from .clustering import greedy_centers
from .core import (
    Augmentation,
    InstanceError,
    Pair,
    WeightedInstance,
    augment,
    ensure_valid,
)


def ensure_unit_cost(instance: WeightedInstance) -> None:
    """Raise InstanceError unless every non-edge has insertion cost 1."""
    ensure_valid(instance)
    for u, v in instance.non_edges():
        cost = instance.cost.get(u, v)
        if cost != 1:
            raise InstanceError(
                f"unit-cost solver requires cost 1 on non-edges, ({u}, {v}) costs {cost}"
            )


def pairwise_centers(instance: WeightedInstance, first_center: int = 0) -> Augmentation:
    """Insert the non-edges of a cheapest k-bounded path between every center pair.

    Unreachable center pairs contribute nothing. The bounded-path searches
    run once per center and serve all of its pairs.
    """
    ensure_unit_cost(instance)
    centers = greedy_centers(instance, first_center).centers
    added: set[Pair] = set()
    k = instance.budget
    for i, ci in enumerate(centers[:-1]):
        source = PathSource(instance, ci)
        for cj in centers[i + 1 :]:
            try:
                witness = source.path_to(cj, k)
            except NoPathError:
                continue
            added.update(witness.used_non_edges)
    return augment(instance, added)


def star_centers(instance: WeightedInstance, first_center: int = 0) -> Augmentation:
    """Insert the non-edges of cheapest k-bounded paths from the first center.

    A single bounded-path search from the first center serves every other
    center.
    """
    ensure_unit_cost(instance)
    centers = greedy_centers(instance, first_center).centers
    added: set[Pair] = set()
    if centers:
        source = PathSource(instance, centers[0])
        for cj in centers[1:]:
            try:
                witness = source.path_to(cj, instance.budget)
            except NoPathError:
                continue
            added.update(witness.used_non_edges)
    return augment(instance, added)


def cluster_spanning_mst(instance: WeightedInstance, first_center: int = 0) -> Augmentation:
    """Join the clusters along a minimum spanning tree of lightest connectors.

    For every pair of non-empty clusters the lightest connecting vertex pair
    becomes a candidate; a minimum spanning tree over those candidates is
    selected and only its non-edge connectors are inserted, so at most k
    edges are spent. Weight ties prefer existing edges (they cost nothing to
    use), then the lexicographically smallest (cluster i, cluster j, u, v).
    """
    ensure_unit_cost(instance)
    clusters = greedy_centers(instance, first_center)
    members = [clusters.members(i) for i in range(len(clusters.centers))]
    occupied = [i for i, vs in enumerate(members) if vs]

    connectors: dict[tuple[int, int], tuple[int, bool, int, int]] = {}
    for a_pos, i in enumerate(occupied):
        for j in occupied[a_pos + 1 :]:
            best: tuple[int, bool, int, int] | None = None
            for u in members[i]:
                for v in members[j]:
                    candidate = (
                        instance.weight.get(u, v),
                        not instance.is_edge(u, v),
                        u,
                        v,
                    )
                    if best is None or candidate < best:
                        best = candidate
            assert best is not None
            connectors[(i, j)] = best

    # Kruskal over the cluster graph; candidate order fixes all ties.
    ranked = sorted(
        (weight, i, j, u, v)
        for (i, j), (weight, _, u, v) in connectors.items()
    )
    parent = {i: i for i in occupied}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    added: set[Pair] = set()
    for weight, i, j, u, v in ranked:
        ri, rj = find(i), find(j)
        if ri == rj:
            continue
        parent[ri] = rj
        pair = (u, v) if u < v else (v, u)
        if pair not in instance.edges:
            added.add(pair)
    return augment(instance, added)
