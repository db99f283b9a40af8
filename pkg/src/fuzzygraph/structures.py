"""Fuzzy cycles, saturated cycles, maximum spanning trees and fuzzy trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .connectivity import EdgeLabel, classify_edges
from .graph import Edge, FuzzyGraph, GraphError, edge_key


class NotSaturatedError(GraphError):
    pass


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[Edge, ...]
    weight: float
    unique: bool

    def __contains__(self, e: object) -> bool:
        return isinstance(e, tuple) and len(e) == 2 and edge_key(*e) in self.edges

    def subgraph(self, g: FuzzyGraph) -> FuzzyGraph:
        """The spanning fuzzy subgraph (sigma, nu) carrying only the tree edges."""
        return g.edge_subgraph(self.edges)


def cycle_order(g: FuzzyGraph) -> list[str] | None:
    """Vertices in walking order if the underlying graph is one cycle, else None.

    The walk starts at the smallest vertex and heads to its smaller neighbour.
    """
    n = len(g)
    if n < 3 or len(g.edges) != n:
        return None
    if any(len(g.neighbors(v)) != 2 for v in g.vertices):
        return None
    start = min(g.vertices)
    order = [start]
    prev, cur = start, min(g.neighbors(start))
    while cur != start:
        order.append(cur)
        prev, cur = cur, next(x for x in g.neighbors(cur) if x != prev)
    return order if len(order) == n else None


def _cycle_edges(order: list[str]) -> list[Edge]:
    return [edge_key(a, b) for a, b in zip(order, order[1:] + order[:1])]


def is_fuzzy_cycle(g: FuzzyGraph) -> bool:
    """Underlying graph is a single cycle and its weakest value occurs at least twice."""
    if cycle_order(g) is None:
        return False
    values = list(g.edges.values())
    return values.count(min(values)) >= 2


def is_saturated_cycle(
    g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None = None
) -> bool:
    """Even fuzzy cycle whose edge labels alternate alpha, beta around the cycle."""
    if not is_fuzzy_cycle(g):
        return False
    order = cycle_order(g)
    if len(order) % 2:
        return False
    if labels is None:
        labels = classify_edges(g)
    walk = [labels[e] for e in _cycle_edges(order)]
    first = walk[0]
    if first not in (EdgeLabel.ALPHA, EdgeLabel.BETA):
        return False
    other = EdgeLabel.BETA if first is EdgeLabel.ALPHA else EdgeLabel.ALPHA
    return all(lab is (first if i % 2 == 0 else other) for i, lab in enumerate(walk))


def has_alpha_beta_incidence(
    g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None = None
) -> bool:
    """Every vertex lies on at least one alpha-strong and one beta-strong edge."""
    if labels is None:
        labels = classify_edges(g)
    seen: dict[str, set[EdgeLabel]] = {v: set() for v in g.vertices}
    for (u, v), lab in labels.items():
        seen[u].add(lab)
        seen[v].add(lab)
    return all({EdgeLabel.ALPHA, EdgeLabel.BETA} <= s for s in seen.values())


def saturated_parameters(g: FuzzyGraph) -> tuple[int, float, float]:
    """``(n, kappa, eta)`` of a saturated cycle with uniform alpha and beta values."""
    labels = classify_edges(g)
    if not is_saturated_cycle(g, labels):
        raise NotSaturatedError("graph is not a saturated fuzzy cycle")
    alpha = {g.edges[e] for e, lab in labels.items() if lab is EdgeLabel.ALPHA}
    beta = {g.edges[e] for e, lab in labels.items() if lab is EdgeLabel.BETA}
    if len(alpha) != 1:
        raise NotSaturatedError(f"unequal alpha strengths: {sorted(alpha)}")
    if len(beta) != 1:
        raise NotSaturatedError(f"unequal beta strengths: {sorted(beta)}")
    return len(g), alpha.pop(), beta.pop()


class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def _tree_path_strength(tree_adj: dict[str, dict[str, float]], x: str, y: str) -> float:
    # the tree path is unique; DFS carrying the running bottleneck
    stack = [(x, None, 2.0)]
    while stack:
        node, parent, low = stack.pop()
        if node == y:
            return low
        for nxt, mu in tree_adj[node].items():
            if nxt != parent:
                stack.append((nxt, node, min(low, mu)))
    raise GraphError(f"{x!r} and {y!r} are not joined in the tree")


def _tree_adjacency(g: FuzzyGraph, edges) -> dict[str, dict[str, float]]:
    adj: dict[str, dict[str, float]] = {v: {} for v in g.vertices}
    for u, v in edges:
        adj[u][v] = adj[v][u] = g.edges[u, v]
    return adj


def maximum_spanning_tree(g: FuzzyGraph) -> SpanningTree:
    """Kruskal in descending membership order, ties broken by edge name.

    ``unique`` is False when some non-tree edge matches the weakest edge on its
    tree path, since swapping them gives another tree of the same weight.
    """
    if len(g) == 0:
        raise GraphError("empty graph has no spanning tree")
    ds = _DisjointSet(g.vertices)
    chosen = []
    for e in sorted(g.edges, key=lambda e: (-g.edges[e], e)):
        if ds.union(*e):
            chosen.append(e)
    if len(chosen) != len(g) - 1:
        raise GraphError("graph is disconnected; no spanning tree")

    tree_adj = _tree_adjacency(g, chosen)
    in_tree = set(chosen)
    unique = all(
        _tree_path_strength(tree_adj, x, y) > g.edges[x, y]
        for x, y in g.edges
        if (x, y) not in in_tree
    )
    chosen.sort()
    return SpanningTree(tuple(chosen), sum(g.edges[e] for e in chosen), unique)


def is_fuzzy_tree(g: FuzzyGraph) -> bool:
    """Connected, and every non-tree edge is beaten by the strength of its MST path."""
    try:
        tree = maximum_spanning_tree(g)
    except GraphError:
        return False
    tree_adj = _tree_adjacency(g, tree.edges)
    ok = all(
        _tree_path_strength(tree_adj, x, y) > mu
        for (x, y), mu in g.edges.items()
        if (x, y) not in tree
    )
    assert not ok or tree.unique
    return ok
