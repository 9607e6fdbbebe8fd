"""Simple undirected graphs and the structural quantities derived from them.

Vertices are the integers ``0 .. n-1``.  A :class:`Graph` is immutable; the
distance matrix and adjacency structure are computed once and cached on the
instance, so a graph can be shared freely between threads or pickled to
worker processes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

#: Entry of a distance matrix for a pair of vertices in different components.
UNREACHABLE = -1


class GraphError(ValueError):
    """Raised for invalid graphs or quantities undefined on a given graph."""


class DisconnectedGraphError(GraphError):
    def __init__(self, what: str = "Mostar-type quantities"):
        super().__init__(f"{what} undefined: graph is disconnected")


@dataclass(frozen=True, eq=False)
class Graph:
    """A simple undirected graph on ``n`` vertices.

    ``edges`` is normalised to a sorted tuple of pairs ``(u, v)`` with
    ``u < v``.  Loops, repeated edges and out-of-range endpoints raise
    :class:`GraphError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.n
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {n!r}")
        seen: set[tuple[int, int]] = set()
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuple of every vertex."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            idx = np.array(self.edges)
            a[idx[:, 0], idx[:, 1]] = 1
            a[idx[:, 1], idx[:, 0]] = 1
        return a

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def distances(self) -> np.ndarray:
        m = all_pairs_distances(self)
        m.flags.writeable = False
        return m


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, tuple(edges))


# Distances and structure


def bfs_distances(graph: Graph, source: int) -> np.ndarray:
    dist = np.full(graph.n, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(graph: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by one BFS per vertex.

    Pairs in different components hold :data:`UNREACHABLE`.
    """
    return np.stack([bfs_distances(graph, s) for s in range(graph.n)])


def is_connected(graph: Graph) -> bool:
    return bool((graph.distances[0] != UNREACHABLE).all())


def diameter(graph: Graph) -> float | int:
    """Largest distance between two vertices; ``math.inf`` if disconnected."""
    d = graph.distances
    if (d == UNREACHABLE).any():
        return float("inf")
    return int(d.max())


def is_regular(graph: Graph) -> bool:
    return len(set(graph.degrees)) == 1


def is_tree(graph: Graph) -> bool:
    return graph.m == graph.n - 1 and is_connected(graph)


def is_star(graph: Graph) -> bool:
    """Degree-sequence test for ``S_n``: one vertex of degree n-1, the rest leaves.

    ``K_2`` counts as the star ``S_2``; a single vertex is ``S_1``.
    """
    n = graph.n
    if n == 1:
        return True
    if graph.m != n - 1:
        return False
    degs = sorted(graph.degrees)
    return degs[-1] == n - 1 and all(d == 1 for d in degs[:-1])


class Bipartition(NamedTuple):
    is_bipartite: bool
    part: tuple[int, ...]  # 1 or 2 per vertex; empty when not bipartite
    n1: int
    n2: int


def bipartition(graph: Graph) -> Bipartition:
    """Two-colour the graph by BFS.

    In each component the lowest-numbered vertex goes to part 1.
    """
    colour = [0] * graph.n
    adj = graph.adjacency
    for root in range(graph.n):
        if colour[root]:
            continue
        colour[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not colour[w]:
                    colour[w] = 3 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return Bipartition(False, (), 0, 0)
    n1 = colour.count(1)
    return Bipartition(True, tuple(colour), n1, graph.n - n1)


class EdgePeripherality(NamedTuple):
    """Distance split of the vertex set by one edge ``(u, v)``.

    ``ne_u`` counts vertices strictly closer to ``u`` (including ``u``),
    ``ne_v`` likewise for ``v``, and ``n_uv`` the vertices equidistant
    from both.
    """

    u: int
    v: int
    ne_u: int
    ne_v: int
    n_uv: int


def edge_peripherality(graph: Graph, distances: np.ndarray | None = None) -> list[EdgePeripherality]:
    d = graph.distances if distances is None else distances
    if (d == UNREACHABLE).any():
        raise DisconnectedGraphError()
    out = []
    for u, v in graph.edges:
        du, dv = d[u], d[v]
        closer_u = int(np.count_nonzero(du < dv))
        closer_v = int(np.count_nonzero(dv < du))
        out.append(EdgePeripherality(u, v, closer_u, closer_v, graph.n - closer_u - closer_v))
    return out


def triangle_count(graph: Graph) -> int:
    """Number of triangles, from common neighbours of the endpoints of each edge."""
    adj = [set(a) for a in graph.adjacency]
    total = sum(len(adj[u] & adj[v]) for u, v in graph.edges)
    assert total % 3 == 0
    return total // 3


def triangle_count_trace(graph: Graph) -> int:
    """Triangle count as ``trace(A^3) / 6``."""
    a = graph.adjacency_matrix()
    t = int(np.trace(a @ a @ a))
    assert t % 6 == 0
    return t // 6
