"""Greedy farthest-first selection of cluster centers.

Picks budget+1 centers: an arbitrary first one, then repeatedly the vertex
farthest (in the bare graph metric) from everything selected so far. The
resulting covering radius never exceeds the optimal achievable diameter,
which is what makes the centers a safe skeleton for the solvers built on
top.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Dist, WeightedInstance, ensure_valid, sssp


@dataclass(frozen=True)
class ClusterCenters:
    """Selected centers with the induced assignment.

    Attributes:
        centers: centers in selection order (min(budget + 1, n) of them).
        assignment: per-vertex index into ``centers`` of its nearest center,
            ties resolved toward the earliest-selected center.
        center_distances: per-vertex distance to its assigned center.
        radius: largest of those distances (may be INF on disconnected
            inputs).
    """

    centers: tuple[int, ...]
    assignment: tuple[int, ...]
    center_distances: tuple[Dist, ...]
    radius: Dist

    def members(self, center_index: int) -> tuple[int, ...]:
        """Vertices assigned to the given center, ascending."""
        return tuple(
            v for v, c in enumerate(self.assignment) if c == center_index
        )


def greedy_centers(instance: WeightedInstance, first_center: int = 0) -> ClusterCenters:
    """Farthest-first traversal from ``first_center``.

    Each round runs one single-source search from the newly selected center
    and keeps the per-vertex best distance, so selection is O(budget) such
    searches. Ties for the farthest vertex go to the smallest vertex id; a
    vertex unreachable from every selected center counts as farthest. When
    n <= budget + 1 every vertex becomes a center and the radius is 0.
    """
    ensure_valid(instance)
    n = instance.n
    if not (0 <= first_center < n):
        raise ValueError(f"first center {first_center} out of range for n={n}")
    count = min(instance.budget + 1, n)

    centers = [first_center]
    best: list[Dist] = list(sssp(instance, first_center))
    assignment = [0] * n
    selected = {first_center}

    while len(centers) < count:
        farthest = -1
        farthest_dist: Dist = -1
        for v in range(n):
            if v in selected:
                continue
            if best[v] > farthest_dist:
                farthest = v
                farthest_dist = best[v]
        centers.append(farthest)
        selected.add(farthest)
        idx = len(centers) - 1
        dist = sssp(instance, farthest)
        for v in range(n):
            if dist[v] < best[v]:
                best[v] = dist[v]
                assignment[v] = idx

    radius: Dist = max(best) if best else 0
    return ClusterCenters(
        centers=tuple(centers),
        assignment=tuple(assignment),
        center_distances=tuple(best),
        radius=radius,
    )
