"""Exhaustive reference computations over enumerated simple paths.

Everything here is derived from the full list of simple paths between each
pair, applying the definitions literally. It is exponential on purpose and
shares nothing with the fast routines except the graph type; use it only to
certify them on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, FuzzyGraph, GraphError, PathRecord, edge_key

DEFAULT_MAX_ORDER = 12


class OracleLimitError(GraphError):
    pass


def enumerate_simple_paths(
    g: FuzzyGraph, u: str, v: str, max_order: int = DEFAULT_MAX_ORDER
) -> set[PathRecord]:
    if len(g) > max_order:
        raise OracleLimitError(
            f"graph has {len(g)} vertices; oracle is bounded at {max_order}"
        )
    if u == v:
        raise GraphError("paths need two distinct endpoints")
    for x in (u, v):
        if x not in g:
            raise GraphError(f"unknown vertex {x!r}")

    found: set[PathRecord] = set()

    def extend(seq: list[str], visited: set[str]) -> None:
        tail = seq[-1]
        for nxt in g.neighbors(tail):
            if nxt in visited:
                continue
            seq.append(nxt)
            if nxt == v:
                found.add(PathRecord.from_vertices(g, seq))
            else:
                visited.add(nxt)
                extend(seq, visited)
                visited.discard(nxt)
            seq.pop()

    extend([u], {u})
    return found


@dataclass(frozen=True)
class OracleReport:
    paths: dict[Edge, frozenset[PathRecord]]
    conn: dict[Edge, float]
    labels: dict[Edge, str]
    geodesics: dict[Edge, frozenset[PathRecord]]
    geodesic_length: dict[Edge, int]
    ds: dict[Edge, float]
    wiener: float | None
    connectivity: float

    def require_wiener(self) -> float:
        if self.wiener is None:
            raise GraphError("Wiener index undefined: some pair has no strong path")
        return self.wiener


def _best_strength(paths) -> float:
    return max((p.strength for p in paths), default=0.0)


def oracle_report(g: FuzzyGraph, max_order: int = DEFAULT_MAX_ORDER) -> OracleReport:
    """CONN, edge labels, geodesics, d_s, WI and CI from path enumeration.

    ``wiener`` is None when some pair has no strong path.
    """
    if len(g) > max_order:
        raise OracleLimitError(
            f"graph has {len(g)} vertices; oracle is bounded at {max_order}"
        )
    pairs = list(combinations(sorted(g.vertices), 2))
    paths = {
        (u, v): frozenset(enumerate_simple_paths(g, u, v, max_order)) for u, v in pairs
    }
    conn = {pair: _best_strength(ps) for pair, ps in paths.items()}

    labels = {}
    for x, y in g.edges:
        residual = _best_strength(enumerate_simple_paths(g.without_edge(x, y), x, y, max_order))
        mu = g.edges[x, y]
        labels[x, y] = "alpha" if mu > residual else "beta" if mu == residual else "delta"

    def strong(p: PathRecord) -> bool:
        return all(labels[edge_key(a, b)] != "delta" for a, b in zip(p.vertices, p.vertices[1:]))

    geos, lengths, ds = {}, {}, {}
    for pair, ps in paths.items():
        strong_paths = [p for p in ps if strong(p)]
        if not strong_paths:
            continue
        k = min(p.length for p in strong_paths)
        geos[pair] = frozenset(p for p in strong_paths if p.length == k)
        lengths[pair] = k
        ds[pair] = min(p.weight for p in geos[pair])

    sigma = g.vertices
    wiener = None
    if len(ds) == len(pairs):
        wiener = sum(sigma[u] * sigma[v] * ds[u, v] for u, v in pairs)
    connectivity = sum(sigma[u] * sigma[v] * conn[u, v] for u, v in pairs)
    return OracleReport(paths, conn, labels, geos, lengths, ds, wiener, connectivity)
