"""Closed-form Wiener index of saturated fuzzy cycles.

A saturated cycle here is the even cycle ``v_0 ... v_{n-1}`` with every vertex
at membership 1 and edge values alternating ``kappa, eta, kappa, eta, ...``
(``kappa > eta``), so the kappa-edges are alpha-strong and the eta-edges are
beta-strong.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Sequence

from .graph import Edge, FuzzyGraph, GraphError, build_graph, edge_key
from .indices import geodesic_table


@dataclass(frozen=True)
class CycleSpec:
    n: int
    kappa: float
    eta: float

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise GraphError(f"n must be an integer, got {self.n!r}")
        if self.n < 4:
            raise GraphError(f"n must be at least 4, got {self.n}")
        if self.n % 2:
            raise GraphError(f"n must be even, got {self.n}")
        if not 0.0 < self.eta < self.kappa <= 1.0:
            raise GraphError(
                f"need 0 < eta < kappa <= 1, got kappa={self.kappa!r}, eta={self.eta!r}"
            )


def cycle_vertex_names(n: int) -> list[str]:
    if n <= len(string.ascii_lowercase):
        return list(string.ascii_lowercase[:n])
    return [f"v{i}" for i in range(n)]


def generate_saturated_cycle(spec: CycleSpec, names: Sequence[str] | None = None) -> FuzzyGraph:
    """Edges ``(v_i, v_{i+1})`` get kappa for even ``i`` and eta for odd ``i``.

    Default names are ``a, b, c, ...`` (``v0, v1, ...`` past 26 vertices).
    """
    names = list(names) if names is not None else cycle_vertex_names(spec.n)
    if len(names) != spec.n:
        raise GraphError(f"need {spec.n} vertex names, got {len(names)}")
    edges = [
        (names[i], names[(i + 1) % spec.n], spec.kappa if i % 2 == 0 else spec.eta)
        for i in range(spec.n)
    ]
    return build_graph([(v, 1.0) for v in names], edges)


def corrected_wiener(spec: CycleSpec) -> float:
    n, k, e = spec.n, spec.kappa, spec.eta
    if n % 4 == 0:
        return n**3 / 16 * (k + e)
    return n * (n * n - 4) / 16 * k + n * (n * n + 4) / 16 * e


def incorrect_wiener_theorem_star(spec: CycleSpec) -> float:
    """The older closed form ``n((n+3)^2 - 6)/16 (kappa + eta)``.

    Kept only to reproduce its disagreement with the exhaustive value.
    """
    n = spec.n
    return n * ((n + 3) ** 2 - 6) / 16 * (spec.kappa + spec.eta)


def antipodal_ds(spec: CycleSpec) -> float:
    """d_s shared by every pair of opposite vertices (geodesic length n/2)."""
    n, k, e = spec.n, spec.kappa, spec.eta
    if n % 4 == 0:
        return n / 4 * (k + e)
    return (n - 2) / 4 * k + (n + 2) / 4 * e


def pairs_by_geodesic_length(g: FuzzyGraph) -> dict[int, set[Edge]]:
    """Unordered vertex pairs grouped by the length of their geodesics."""
    groups: dict[int, set[Edge]] = {}
    for u, v, k, _ in geodesic_table(g):
        groups.setdefault(k, set()).add(edge_key(u, v))
    return dict(sorted(groups.items()))


def ds_sums_by_geodesic_length(g: FuzzyGraph) -> dict[int, float]:
    """Sum of d_s over each geodesic-length class."""
    sums: dict[int, float] = {}
    for _, _, k, d in geodesic_table(g):
        sums[k] = sums.get(k, 0.0) + d
    return dict(sorted(sums.items()))
