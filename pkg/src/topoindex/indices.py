"""Degree-based and distance-based topological indices.

Integer-valued indices are returned as ``int`` and the degree variance as a
:class:`fractions.Fraction`, so equality cases can be compared exactly.
Only IRB, the square-root degree sum and the spectral quantities are
floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction
from functools import cached_property

from . import spectral
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    bipartition,
    diameter,
    edge_peripherality,
    is_connected,
    triangle_count,
)


def degree_variance(graph: Graph) -> Fraction:
    n = graph.n
    mean = Fraction(2 * graph.m, n)
    return sum(((d - mean) ** 2 for d in graph.degrees), Fraction(0)) / n


def first_zagreb(graph: Graph) -> int:
    return sum(d * d for d in graph.degrees)


def albertson(graph: Graph) -> int:
    deg = graph.degrees
    return sum(abs(deg[u] - deg[v]) for u, v in graph.edges)


def irb(graph: Graph) -> float:
    deg = graph.degrees
    return math.fsum((math.sqrt(deg[u]) - math.sqrt(deg[v])) ** 2 for u, v in graph.edges)


def sqrt_degree_sum(graph: Graph) -> float:
    return math.fsum(math.sqrt(d) for d in graph.degrees)


def mostar(graph: Graph) -> int:
    """Sum over edges of ``|n_e(u) - n_e(v)|``.  Connected graphs only."""
    return sum(abs(e.ne_u - e.ne_v) for e in edge_peripherality(graph))


def szeged(graph: Graph) -> int:
    return sum(e.ne_u * e.ne_v for e in edge_peripherality(graph))


def sum_n_uv(graph: Graph) -> int:
    return sum(e.n_uv for e in edge_peripherality(graph))


def bipartite_diam3_mostar_form(graph: Graph) -> int:
    """Mostar index of a bipartite diameter-3 graph from degrees and part sizes alone.

    With ``u`` in part 1 this is ``sum |(n1 + 2 deg u) - (n2 + 2 deg v)|``;
    it must agree with :func:`mostar`.
    """
    bp = bipartition(graph)
    if not bp.is_bipartite:
        raise GraphError("graph is not bipartite")
    diam = diameter(graph)
    if diam != 3:
        raise GraphError(f"graph has diameter {diam}, need exactly 3")
    deg = graph.degrees
    total = 0
    for u, v in graph.edges:
        if bp.part[u] == 2:
            u, v = v, u
        total += abs((bp.n1 + 2 * deg[u]) - (bp.n2 + 2 * deg[v]))
    return total


class Invariants:
    """Lazily computed invariants of one graph, each evaluated at most once.

    Bound checks share one instance per graph so spectra and distance
    splits are not recomputed.  Distance-based attributes raise
    :class:`DisconnectedGraphError` on disconnected graphs.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.m = graph.m

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def diameter(self) -> float | int:
        return diameter(self.graph)

    @cached_property
    def bipartition(self):
        return bipartition(self.graph)

    @cached_property
    def peripherality(self):
        return edge_peripherality(self.graph)

    @cached_property
    def degree_variance(self) -> Fraction:
        return degree_variance(self.graph)

    @cached_property
    def first_zagreb(self) -> int:
        return first_zagreb(self.graph)

    @cached_property
    def albertson(self) -> int:
        return albertson(self.graph)

    @cached_property
    def irb(self) -> float:
        return irb(self.graph)

    @cached_property
    def sqrt_degree_sum(self) -> float:
        return sqrt_degree_sum(self.graph)

    @cached_property
    def mostar(self) -> int:
        return sum(abs(e.ne_u - e.ne_v) for e in self.peripherality)

    @cached_property
    def szeged(self) -> int:
        return sum(e.ne_u * e.ne_v for e in self.peripherality)

    @cached_property
    def sum_n_uv(self) -> int:
        return sum(e.n_uv for e in self.peripherality)

    @cached_property
    def triangle_count(self) -> int:
        return triangle_count(self.graph)

    @cached_property
    def adjacency_spectrum(self) -> spectral.Spectrum:
        return spectral.adjacency_spectrum(self.graph)

    @cached_property
    def laplacian_spectrum(self) -> spectral.Spectrum:
        return spectral.laplacian_spectrum(self.graph)

    @cached_property
    def energy(self) -> float:
        return spectral.graph_energy(self.graph, self.adjacency_spectrum)

    @cached_property
    def lambda_max(self) -> float:
        return spectral.laplacian_spectral_radius(self.graph, self.laplacian_spectrum)


def invariants(graph: Graph | Invariants) -> Invariants:
    return graph if isinstance(graph, Invariants) else Invariants(graph)


@dataclass(frozen=True)
class IndexReport:
    """Every index of one graph.  Distance-based fields are ``None`` when disconnected."""

    n: int
    m: int
    degree_variance: Fraction
    first_zagreb: int
    albertson: int
    irb: float
    mostar: int | None
    szeged: int | None
    triangle_count: int
    sum_n_uv: int | None
    energy: float
    laplacian_lambda_max: float
    sqrt_degree_sum: float

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def index_report(graph: Graph | Invariants) -> IndexReport:
    inv = invariants(graph)
    distance_based = {}
    for name in ("mostar", "szeged", "sum_n_uv"):
        try:
            distance_based[name] = getattr(inv, name)
        except DisconnectedGraphError:
            distance_based[name] = None
    return IndexReport(
        n=inv.n,
        m=inv.m,
        degree_variance=inv.degree_variance,
        first_zagreb=inv.first_zagreb,
        albertson=inv.albertson,
        irb=inv.irb,
        triangle_count=inv.triangle_count,
        energy=inv.energy,
        laplacian_lambda_max=inv.lambda_max,
        sqrt_degree_sum=inv.sqrt_degree_sum,
        **distance_based,
    )
