"""Fuzzy graph data model and the line-oriented text format.

A fuzzy graph carries a membership value ``sigma(v)`` in (0, 1] for every
vertex and a membership ``mu(uv)`` in (0, 1] for every undirected edge, with
``mu(uv) <= min(sigma(u), sigma(v))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Edge = Tuple[str, str]


class GraphError(ValueError):
    """Raised when a graph would violate one of its invariants.

    ``kind`` and ``index`` point at the offending entry of the vertex or edge
    list handed to :func:`build_graph`, when there is one.
    """

    def __init__(self, message: str, kind: str | None = None, index: int | None = None):
        super().__init__(message)
        self.kind = kind
        self.index = index


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def edge_key(u: str, v: str) -> Edge:
    """Canonical key of the undirected edge ``{u, v}``."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FuzzyGraph:
    """Immutable fuzzy graph. Build it with :func:`build_graph`."""

    vertices: Mapping[str, float]
    edges: Mapping[Edge, float]
    _adj: Mapping[str, Mapping[str, float]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        # build_graph reports errors with positions; this guards direct construction
        for v, s in self.vertices.items():
            if not 0.0 < s <= 1.0:
                raise GraphError(f"vertex {v!r}: membership {s!r} outside (0, 1]")
        adj: dict[str, dict[str, float]] = {v: {} for v in self.vertices}
        for (u, v), mu in self.edges.items():
            if u == v or (u, v) != edge_key(u, v) or u not in adj or v not in adj:
                raise GraphError(f"malformed edge key {(u, v)!r}")
            if not 0.0 < mu <= min(self.vertices[u], self.vertices[v]):
                raise GraphError(f"edge {u}-{v}: membership bound violated")
            adj[u][v] = mu
            adj[v][u] = mu
        object.__setattr__(self, "vertices", MappingProxyType(dict(self.vertices)))
        object.__setattr__(self, "edges", MappingProxyType(dict(self.edges)))
        object.__setattr__(
            self, "_adj", MappingProxyType({v: MappingProxyType(n) for v, n in adj.items()})
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return dict(self.vertices) == dict(other.vertices) and dict(self.edges) == dict(
            other.edges
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices.items()), frozenset(self.edges.items())))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def sigma(self, v: str) -> float:
        return self.vertices[v]

    def mu(self, u: str, v: str) -> float:
        """Membership of edge ``uv``; 0.0 when there is no such edge."""
        return self._adj[u].get(v, 0.0)

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def neighbors(self, v: str) -> Mapping[str, float]:
        return self._adj[v]

    def sorted_vertices(self) -> list[str]:
        return sorted(self.vertices)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def without_edge(self, u: str, v: str) -> FuzzyGraph:
        """Copy of the graph with edge ``uv`` deleted; all vertices are kept."""
        key = edge_key(u, v)
        if key not in self.edges:
            raise GraphError(f"unknown edge {key[0]}-{key[1]}")
        edges = {e: m for e, m in self.edges.items() if e != key}
        return FuzzyGraph(self.vertices, edges)

    def edge_subgraph(self, keep: Iterable[Edge]) -> FuzzyGraph:
        """Spanning subgraph with the same vertices and only the ``keep`` edges."""
        keys = {edge_key(*e) for e in keep}
        missing = keys - set(self.edges)
        if missing:
            u, v = sorted(missing)[0]
            raise GraphError(f"unknown edge {u}-{v}")
        return FuzzyGraph(self.vertices, {e: self.edges[e] for e in keys})

    def relabel(self, mapping: Mapping[str, str]) -> FuzzyGraph:
        return build_graph(
            [(mapping[v], s) for v, s in self.vertices.items()],
            [(mapping[u], mapping[v], m) for (u, v), m in self.edges.items()],
        )


def build_graph(
    vertex_list: Iterable[Tuple[str, float]],
    edge_list: Iterable[Tuple[str, str, float]],
) -> FuzzyGraph:
    """Validate vertex and edge records and assemble a :class:`FuzzyGraph`."""
    vertices: dict[str, float] = {}
    for i, (v, s) in enumerate(vertex_list):
        if v in vertices:
            raise GraphError(f"duplicate vertex {v!r}", "vertex", i)
        if not 0.0 < s <= 1.0:
            raise GraphError(
                f"vertex {v!r}: membership {s!r} outside (0, 1]", "vertex", i
            )
        vertices[v] = float(s)

    edges: dict[Edge, float] = {}
    for i, (u, v, m) in enumerate(edge_list):
        if u == v:
            raise GraphError(f"self-loop on {u!r}", "edge", i)
        for end in (u, v):
            if end not in vertices:
                raise GraphError(f"edge {u}-{v}: unknown vertex {end!r}", "edge", i)
        key = edge_key(u, v)
        if key in edges:
            raise GraphError(f"duplicate edge {u}-{v}", "edge", i)
        if not 0.0 < m <= 1.0:
            raise GraphError(f"edge {u}-{v}: membership {m!r} outside (0, 1]", "edge", i)
        bound = min(vertices[u], vertices[v])
        if m > bound:
            raise GraphError(
                f"edge {u}-{v}: membership bound violated ({m!r} > min(sigma) = {bound!r})",
                "edge",
                i,
            )
        edges[key] = float(m)
    return FuzzyGraph(vertices, edges)


@dataclass(frozen=True)
class PathRecord:
    """A simple path ``u_0 ... u_n`` together with its length, strength and weight."""

    vertices: Tuple[str, ...]
    length: int
    strength: float
    weight: float

    @classmethod
    def from_vertices(cls, g: FuzzyGraph, seq: Sequence[str]) -> PathRecord:
        seq = tuple(seq)
        if len(seq) < 2:
            raise GraphError("a path needs at least two vertices")
        if len(set(seq)) != len(seq):
            raise GraphError(f"path {'-'.join(seq)} repeats a vertex")
        values = []
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"path {'-'.join(seq)}: {a}-{b} is not an edge")
            values.append(g.mu(a, b))
        return cls(seq, len(values), min(values), sum(values))

    def edges(self) -> Iterator[Edge]:
        for a, b in zip(self.vertices, self.vertices[1:]):
            yield edge_key(a, b)

    def __str__(self) -> str:
        return "-".join(self.vertices)


def _parse_value(token: str, lineno: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"not a number: {token!r}", lineno) from None


def parse_graph_file(text: Union[str, bytes]) -> FuzzyGraph:
    """Parse the text graph format.

    One record per line::

        # comment
        vertex <id> <sigma>
        edge <u> <v> <mu>

    Blank lines and comments are ignored; record order does not matter.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    vertex_records: list[tuple[str, float]] = []
    vertex_lines: list[int] = []
    edge_records: list[tuple[str, str, float]] = []
    edge_lines: list[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "vertex":
            if len(parts) != 3:
                raise ParseError("expected 'vertex <id> <sigma>'", lineno)
            vertex_records.append((parts[1], _parse_value(parts[2], lineno)))
            vertex_lines.append(lineno)
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise ParseError("expected 'edge <u> <v> <mu>'", lineno)
            edge_records.append((parts[1], parts[2], _parse_value(parts[3], lineno)))
            edge_lines.append(lineno)
        else:
            raise ParseError(f"unknown record type {parts[0]!r}", lineno)

    try:
        return build_graph(vertex_records, edge_records)
    except GraphError as exc:
        lines = vertex_lines if exc.kind == "vertex" else edge_lines
        lineno = lines[exc.index] if exc.index is not None else None
        raise ParseError(str(exc), lineno) from None


def read_graph(path: str) -> FuzzyGraph:
    with open(path, "rb") as fh:
        return parse_graph_file(fh.read())


def format_graph(g: FuzzyGraph) -> str:
    """Serialize ``g`` in the text format; values use ``repr`` so they round-trip."""
    lines = [f"vertex {v} {g.vertices[v]!r}" for v in g.sorted_vertices()]
    lines += [f"edge {u} {v} {g.edges[(u, v)]!r}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"
