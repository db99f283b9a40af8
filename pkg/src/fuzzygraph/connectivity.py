"""Strength of connectedness and the alpha/beta/delta edge classification."""

from __future__ import annotations

import enum
from typing import Iterator, Mapping

from .graph import Edge, FuzzyGraph, GraphError, PathRecord, edge_key


class EdgeLabel(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    DELTA = "delta"

    @property
    def is_strong(self) -> bool:
        return self is not EdgeLabel.DELTA

    def __str__(self) -> str:
        return self.value


class StrengthMatrix(Mapping[Edge, float]):
    """Symmetric table of CONN(u, v) over unordered pairs of distinct vertices.

    Lookups accept either orientation: ``m[u, v] == m[v, u]``.
    """

    def __init__(self, values: Mapping[Edge, float]):
        self._values = dict(values)

    def __getitem__(self, pair: tuple[str, str]) -> float:
        u, v = pair
        if u == v:
            raise KeyError(pair)
        return self._values[edge_key(u, v)]

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        return f"StrengthMatrix({self._values!r})"


def _maxmin_closure(g: FuzzyGraph) -> dict[str, dict[str, float]]:
    # Floyd-Warshall over the (max, min) semiring; only comparisons, so exact.
    verts = g.sorted_vertices()
    conn = {u: {v: g.mu(u, v) for v in verts} for u in verts}
    for k in verts:
        row_k = conn[k]
        for i in verts:
            ik = conn[i][k]
            if ik == 0.0:
                continue
            row_i = conn[i]
            for j in verts:
                through = min(ik, row_k[j])
                if through > row_i[j]:
                    row_i[j] = through
    return conn


def strength_matrix(g: FuzzyGraph) -> StrengthMatrix:
    """CONN(u, v) for every pair: best bottleneck over all u-v paths, 0 if none."""
    conn = _maxmin_closure(g)
    verts = g.sorted_vertices()
    return StrengthMatrix(
        {(u, v): conn[u][v] for i, u in enumerate(verts) for v in verts[i + 1 :]}
    )


def conn_without_edge(g: FuzzyGraph, e: tuple[str, str]) -> float:
    u, v = e
    h = g.without_edge(u, v)
    return _maxmin_closure(h)[u][v]


def _label(mu: float, residual: float) -> EdgeLabel:
    if mu > residual:
        return EdgeLabel.ALPHA
    if mu == residual:
        return EdgeLabel.BETA
    return EdgeLabel.DELTA


def classify_edges(g: FuzzyGraph) -> dict[Edge, EdgeLabel]:
    """Label every edge by comparing its membership with CONN once it is removed."""
    return {e: _label(g.edges[e], conn_without_edge(g, e)) for e in g.sorted_edges()}


def strong_edges(g: FuzzyGraph, labels: Mapping[Edge, EdgeLabel] | None = None) -> set[Edge]:
    if labels is None:
        labels = classify_edges(g)
    return {e for e, lab in labels.items() if lab.is_strong}


def is_strong_path(
    g: FuzzyGraph, p: PathRecord, labels: Mapping[Edge, EdgeLabel] | None = None
) -> bool:
    # revalidates p against g so a path from another graph is rejected
    p = PathRecord.from_vertices(g, p.vertices)
    if labels is None:
        labels = classify_edges(g)
    return all(labels[e].is_strong for e in p.edges())


__all__ = [
    "EdgeLabel",
    "StrengthMatrix",
    "classify_edges",
    "conn_without_edge",
    "is_strong_path",
    "strength_matrix",
    "strong_edges",
]
