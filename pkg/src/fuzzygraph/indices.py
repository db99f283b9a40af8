"""Geodesics, the geodesic distance d_s, and the Wiener and connectivity indices.

A geodesic is a strong path with the fewest edges; d_s(u, v) is the smallest
weight (sum of memberships) among the u-v geodesics. Both indices sum over
unordered pairs of distinct vertices, each pair weighted by
``sigma(u) * sigma(v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .connectivity import EdgeLabel, classify_edges, strength_matrix
from .graph import Edge, FuzzyGraph, GraphError, PathRecord


class NoStrongPathError(GraphError):
    """Raised when two vertices are not joined by any strong path."""


@dataclass(frozen=True)
class GeodesicSet:
    source: str
    target: str
    length: int
    paths: frozenset[PathRecord]

    @property
    def min_weight(self) -> float:
        return min(p.weight for p in self.paths)

    def cheapest(self) -> PathRecord:
        return min(self.paths, key=lambda p: (p.weight, p.vertices))


@dataclass(frozen=True)
class PairRow:
    u: str
    v: str
    conn: float
    ds: float
    geodesic_length: int


@dataclass(frozen=True)
class IndexReport:
    wiener: float
    connectivity: float
    rows: tuple[PairRow, ...]

    def ds_table(self) -> dict[tuple[str, str], float]:
        """d_s keyed by both orientations of every pair."""
        table = {}
        for r in self.rows:
            table[r.u, r.v] = table[r.v, r.u] = r.ds
        return table


def _strong_adjacency(
    g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None
) -> dict[str, dict[str, float]]:
    if labels is None:
        labels = classify_edges(g)
    adj: dict[str, dict[str, float]] = {v: {} for v in g.vertices}
    for (u, v), lab in labels.items():
        if lab.is_strong:
            mu = g.edges[u, v]
            adj[u][v] = mu
            adj[v][u] = mu
    return adj


def _hops(adj: Mapping[str, Mapping[str, float]], source: str) -> dict[str, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _geodesic_weights(
    adj: Mapping[str, Mapping[str, float]], source: str
) -> tuple[dict[str, int], dict[str, float]]:
    """Hop counts and d_s from ``source`` to every strongly reachable vertex.

    Every shortest path moves one BFS layer per step, so the cheapest geodesic
    is a min-plus pass over the layers in order.
    """
    dist = _hops(adj, source)
    best = {source: 0.0}
    for x in sorted(dist, key=dist.__getitem__):
        if x == source:
            continue
        best[x] = min(
            best[p] + mu for p, mu in adj[x].items() if dist.get(p) == dist[x] - 1
        )
    return dist, best


def _check_pair(g: FuzzyGraph, u: str, v: str) -> None:
    for x in (u, v):
        if x not in g:
            raise GraphError(f"unknown vertex {x!r}")
    if u == v:
        raise GraphError("geodesics need two distinct vertices")


def geodesics(
    g: FuzzyGraph, u: str, v: str, labels: Mapping[Edge, EdgeLabel] | None = None
) -> GeodesicSet:
    """All minimum-length strong u-v paths."""
    _check_pair(g, u, v)
    adj = _strong_adjacency(g, labels)
    from_u = _hops(adj, u)
    if v not in from_u:
        raise NoStrongPathError(f"no strong path between {u!r} and {v!r}")
    from_v = _hops(adj, v)
    k = from_u[v]

    paths = set()
    stack = [(u,)]
    while stack:
        seq = stack.pop()
        x = seq[-1]
        if x == v:
            paths.add(PathRecord.from_vertices(g, seq))
            continue
        step = len(seq)
        for y in adj[x]:
            if from_u.get(y) == step and from_v.get(y) == k - step:
                stack.append(seq + (y,))
    return GeodesicSet(u, v, k, frozenset(paths))


def ds(g: FuzzyGraph, u: str, v: str, labels: Mapping[Edge, EdgeLabel] | None = None) -> float:
    """Smallest weight among the u-v geodesics."""
    _check_pair(g, u, v)
    _, best = _geodesic_weights(_strong_adjacency(g, labels), u)
    if v not in best:
        raise NoStrongPathError(f"no strong path between {u!r} and {v!r}")
    return best[v]


def geodesic_table(
    g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None = None
) -> list[tuple[str, str, int, float]]:
    """``(u, v, geodesic length, d_s)`` for every unordered pair, ``u < v``."""
    adj = _strong_adjacency(g, labels)
    verts = g.sorted_vertices()
    out = []
    for i, u in enumerate(verts):
        dist, best = _geodesic_weights(adj, u)
        for v in verts[i + 1 :]:
            if v not in best:
                raise NoStrongPathError(
                    f"no strong path between {u!r} and {v!r}; Wiener index undefined"
                )
            out.append((u, v, dist[v], best[v]))
    return out


def wiener_index(g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None = None) -> float:
    sigma = g.vertices
    return sum(sigma[u] * sigma[v] * d for u, v, _, d in geodesic_table(g, labels))


def connectivity_index(g: FuzzyGraph) -> float:
    sigma = g.vertices
    return sum(sigma[u] * sigma[v] * c for (u, v), c in strength_matrix(g).items())


def index_report(g: FuzzyGraph) -> IndexReport:
    conn = strength_matrix(g)
    sigma = g.vertices
    rows = tuple(PairRow(u, v, conn[u, v], d, k) for u, v, k, d in geodesic_table(g))
    return IndexReport(
        wiener=sum(sigma[r.u] * sigma[r.v] * r.ds for r in rows),
        connectivity=sum(sigma[r.u] * sigma[r.v] * r.conn for r in rows),
        rows=rows,
    )
