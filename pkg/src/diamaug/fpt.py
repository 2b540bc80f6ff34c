"""Budget-exponential solver: subset dynamic program over center sets.

The solver picks budget+1 greedy centers, then builds the cheapest-to-insert
tree that hangs every non-root center below the first center while keeping
the tree height small. Heights come from a table indexed by
(center subset, remaining budget, root vertex):

* a single center costs the bounded-path distance from the root vertex to
  that center, and
* a larger subset is split: walk from the root vertex to some via vertex
  spending part of the budget, then solve the two halves of the subset from
  the via vertex with the rest, paying the larger of their heights.

Inserting the tree's non-edges into the graph spends at most the budget and
provably brings the diameter within 4x of the best achievable value.

The table is filled with vectorized min-plus sweeps, smallest subsets
first. Splits are only enumerated with the subset containing the
lowest-indexed center, which halves the work without changing any value
(the two halves are interchangeable). Ties between choices are broken by
the smallest (via vertex, subset mask, first budget, second budget) tuple,
restricted to that enumeration, so reconstruction is deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .budget_paths import BoundedCostDistances, PathSource, apsp_b
from .clustering import ClusterCenters, greedy_centers
from .core import (
    INF,
    MAX_FINITE_DISTANCE,
    Augmentation,
    Dist,
    Pair,
    WeightedInstance,
    augment,
    ensure_valid,
)

_INF64 = MAX_FINITE_DISTANCE


class InfeasibleEntryError(LookupError):
    """Requested a tree for an unreachable height-table entry."""


@dataclass(frozen=True)
class BaseChoice:
    """Leaf rule: the entry is a bounded path straight to the one center."""

    center: int
    budget: int


@dataclass(frozen=True)
class SplitChoice:
    """Branch rule: path to ``via``, then the two subset halves from there.

    ``budgets`` = (path budget, kept-subset budget, complement budget).
    """

    via: int
    subset_mask: int
    budgets: tuple[int, int, int]


@dataclass(frozen=True, eq=False)
class HeightTable:
    """Minimum spanning heights for every (subset, budget, root vertex).

    ``others`` lists the non-root centers in selection order; bit i of a
    subset mask stands for ``others[i]``. ``values`` has shape
    (2**len(others), budget+1, n) with 2**62 marking unreachable entries.
    """

    others: tuple[int, ...]
    budget: int
    values: np.ndarray
    choice_v: np.ndarray
    choice_mask: np.ndarray
    choice_j1: np.ndarray
    choice_j2: np.ndarray

    @property
    def full_mask(self) -> int:
        return (1 << len(self.others)) - 1

    def height(self, u: int, mask: int, j: int) -> Dist:
        value = int(self.values[mask, j, u])
        return INF if value >= _INF64 else value

    def choice(self, u: int, mask: int, j: int) -> BaseChoice | SplitChoice | None:
        """The recorded minimizing rule for a finite entry, else None."""
        if mask == 0 or not 0 <= j <= self.budget:
            raise ValueError(f"bad table entry: mask={mask}, j={j}")
        if int(self.values[mask, j, u]) >= _INF64:
            return None
        if mask.bit_count() == 1:
            return BaseChoice(center=self.others[mask.bit_length() - 1], budget=j)
        v = int(self.choice_v[mask, j, u])
        smask = int(self.choice_mask[mask, j, u])
        j1 = int(self.choice_j1[mask, j, u])
        j2 = int(self.choice_j2[mask, j, u])
        return SplitChoice(via=v, subset_mask=smask, budgets=(j1, j2, j - j1 - j2))


def solve_height_table(
    instance: WeightedInstance,
    centers: ClusterCenters,
    dists: BoundedCostDistances,
) -> HeightTable:
    """Fill the height table bottom-up over subsets of the non-root centers."""
    ensure_valid(instance)
    n, budget = instance.n, instance.budget
    if dists.n != n or dists.budget != budget:
        raise ValueError("distance table does not match the instance")
    others = tuple(centers.centers[1:])
    m = len(others)
    d64 = dists.table  # (budget+1, n, n)
    d_inf = d64 >= _INF64

    values = np.full(((1 << m), budget + 1, n), _INF64, dtype=np.int64)
    shape = values.shape
    choice_v = np.full(shape, -1, dtype=np.int32)
    choice_mask = np.full(shape, -1, dtype=np.int32)
    choice_j1 = np.full(shape, -1, dtype=np.int32)
    choice_j2 = np.full(shape, -1, dtype=np.int32)

    for i, c in enumerate(others):
        values[1 << i] = d64[:, :, c]

    rows = np.arange(n)
    for mask in sorted(range(1, 1 << m), key=lambda s: (s.bit_count(), s)):
        if mask.bit_count() < 2:
            continue
        best_val = values[mask]
        best_v = choice_v[mask]
        low_bit = mask & -mask
        rest = mask ^ low_bit
        for sub in range(rest + 1):
            if sub & rest != sub or sub == rest:
                continue
            smask = low_bit | sub
            kept = values[smask]
            comp = values[mask ^ smask]
            for j1 in range(budget + 1):
                for j2 in range(budget - j1 + 1):
                    for j3 in range(budget - j1 - j2 + 1):
                        j = j1 + j2 + j3
                        inner = np.maximum(kept[j2], comp[j3])
                        inner_inf = inner >= _INF64
                        if inner_inf.all():
                            continue
                        total = d64[j1] + inner[None, :]
                        bad = d_inf[j1] | inner_inf[None, :]
                        total = np.where(bad, _INF64, total)
                        cand_v = np.argmin(total, axis=1).astype(np.int32)
                        cand_val = total[rows, cand_v]
                        improve = (cand_val < best_val[j]) | (
                            (cand_val == best_val[j]) & (cand_v < best_v[j])
                        )
                        improve &= cand_val < _INF64
                        if not improve.any():
                            continue
                        best_val[j] = np.where(improve, cand_val, best_val[j])
                        best_v[j] = np.where(improve, cand_v, best_v[j])
                        choice_mask[mask, j] = np.where(improve, smask, choice_mask[mask, j])
                        choice_j1[mask, j] = np.where(improve, j1, choice_j1[mask, j])
                        choice_j2[mask, j] = np.where(improve, j2, choice_j2[mask, j])

    return HeightTable(
        others=others,
        budget=budget,
        values=values,
        choice_v=choice_v,
        choice_mask=choice_mask,
        choice_j1=choice_j1,
        choice_j2=choice_j2,
    )


@dataclass(frozen=True)
class TreeEdge:
    """One edge of a reconstructed tree; parent/child are tree-node ids."""

    parent: int
    child: int
    pair: Pair
    weight: int
    is_new_edge: bool


@dataclass(frozen=True)
class CenterTree:
    """A rooted tree realizing a height-table entry.

    The same graph vertex may appear as several tree nodes (the table
    composes walks), so nodes carry ids with ``node_vertices`` mapping each
    id back to its vertex. ``new_edges`` is the set of distinct non-edges
    the tree uses.
    """

    root_vertex: int
    node_vertices: tuple[int, ...]
    edges: tuple[TreeEdge, ...]
    height: Dist
    new_edges: frozenset[Pair]


def reconstruct_tree(
    table: HeightTable,
    instance: WeightedInstance,
    dists: BoundedCostDistances,
    u: int,
    mask: int,
    j: int,
) -> CenterTree:
    """Expand recorded choices into a concrete tree for a finite entry.

    Leaf rules expand into bounded-path witnesses, branch rules into a
    witness path grafted onto the two recursively expanded halves. Raises
    InfeasibleEntryError on unreachable entries.
    """
    if table.height(u, mask, j) == INF:
        raise InfeasibleEntryError(f"entry (vertex {u}, mask {mask:#x}, budget {j}) is unreachable")

    node_vertices: list[int] = [u]
    edges: list[TreeEdge] = []
    sources: dict[int, PathSource] = {}

    def witness_path(src: int, dst: int, beta: int):
        if src not in sources:
            sources[src] = PathSource(instance, src)
        return sources[src].path_to(dst, beta)

    def graft(anchor: int, src: int, dst: int, beta: int) -> int:
        """Attach the witness path src->dst below tree node ``anchor``."""
        witness = witness_path(src, dst, beta)
        current = anchor
        for a, b in zip(witness.vertices, witness.vertices[1:]):
            node_vertices.append(b)
            child = len(node_vertices) - 1
            edges.append(
                TreeEdge(
                    parent=current,
                    child=child,
                    pair=(a, b) if a < b else (b, a),
                    weight=instance.weight.get(a, b),
                    is_new_edge=not instance.is_edge(a, b),
                )
            )
            current = child
        return current

    def expand(anchor: int, vertex: int, mask: int, j: int) -> None:
        rule = table.choice(vertex, mask, j)
        if rule is None:
            raise InfeasibleEntryError(
                f"entry (vertex {vertex}, mask {mask:#x}, budget {j}) is unreachable"
            )
        if isinstance(rule, BaseChoice):
            graft(anchor, vertex, rule.center, rule.budget)
            return
        j1, j2, j3 = rule.budgets
        via_node = graft(anchor, vertex, rule.via, j1)
        expand(via_node, rule.via, rule.subset_mask, j2)
        expand(via_node, rule.via, mask ^ rule.subset_mask, j3)

    expand(0, u, mask, j)

    depth = [0] * len(node_vertices)
    for edge in edges:  # edges are appended parent-first, so one pass settles depths
        depth[edge.child] = depth[edge.parent] + edge.weight
    height = max(depth, default=0)
    new_edges = frozenset(e.pair for e in edges if e.is_new_edge)
    return CenterTree(
        root_vertex=u,
        node_vertices=tuple(node_vertices),
        edges=tuple(edges),
        height=height,
        new_edges=new_edges,
    )


@dataclass(frozen=True)
class FptOutcome:
    """Result of the end-to-end budget-exponential solver."""

    augmentation: Augmentation
    tree_height: Dist
    cluster_radius: Dist
    centers: tuple[int, ...]
    infeasible_height: bool
    timings: dict[str, float]


def fpt_solve(instance: WeightedInstance, first_center: int = 0) -> FptOutcome:
    """Insert non-edges within budget, aiming at 4x the best diameter.

    Pipeline: bounded-cost distance table, greedy centers, height table,
    tree reconstruction rooted at the first center over all other centers.
    The distinct non-edges of that tree are the answer. Runtime grows with
    3**budget, so this is practical for small budgets only.

    Degenerate cases return no insertions: budget 0 or a single vertex. If
    some center is unreachable within budget the outcome is flagged
    ``infeasible_height`` and carries whatever diameter the bare graph has.
    """
    ensure_valid(instance)
    timings: dict[str, float] = {}
    if instance.budget == 0 or instance.n == 1:
        start = time.perf_counter()
        centers = greedy_centers(instance, first_center)
        timings["clustering"] = time.perf_counter() - start
        start = time.perf_counter()
        augmentation = augment(instance, ())
        timings["diameter"] = time.perf_counter() - start
        return FptOutcome(
            augmentation=augmentation,
            tree_height=0,
            cluster_radius=centers.radius,
            centers=centers.centers,
            infeasible_height=False,
            timings=timings,
        )

    start = time.perf_counter()
    dists = apsp_b(instance)
    timings["bounded_paths"] = time.perf_counter() - start

    start = time.perf_counter()
    centers = greedy_centers(instance, first_center)
    timings["clustering"] = time.perf_counter() - start

    start = time.perf_counter()
    table = solve_height_table(instance, centers, dists)
    timings["table"] = time.perf_counter() - start

    root = centers.centers[0]
    full = table.full_mask
    start = time.perf_counter()
    height = table.height(root, full, instance.budget) if full else 0
    if height == INF:
        infeasible = True
        added: frozenset[Pair] = frozenset()
    else:
        infeasible = False
        if full:
            tree = reconstruct_tree(table, instance, dists, root, full, instance.budget)
            added = tree.new_edges
        else:
            added = frozenset()
    timings["reconstruct"] = time.perf_counter() - start

    start = time.perf_counter()
    augmentation = augment(instance, added)
    timings["diameter"] = time.perf_counter() - start
    return FptOutcome(
        augmentation=augmentation,
        tree_height=height,
        cluster_radius=centers.radius,
        centers=centers.centers,
        infeasible_height=infeasible,
        timings=timings,
    )
