"""Graph families and seeded random batches.

Every random generator takes an explicit ``seed`` and is a pure function of
its arguments.  Exhaustive corpora (all trees of an order, all connected
graphs on at most seven vertices) come from networkx.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import Graph, GraphError, diameter

DIAM3_ATTEMPTS = 10_000

DETERMINISTIC = ("path", "cycle", "star", "complete", "complete_bipartite")
RANDOM = ("random_tree", "random_gnm_connected", "random_bipartite_diam3", "random_dense")
EXHAUSTIVE = ("tree", "connected")
FAMILIES = DETERMINISTIC + RANDOM + EXHAUSTIVE


class GenerationError(GraphError):
    pass


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GenerationError(msg)


def path(n: int) -> Graph:
    _need(n >= 2, f"path needs n >= 2, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n: int) -> Graph:
    """``S_n``: vertex 0 joined to ``n - 1`` leaves."""
    _need(n >= 2, f"star needs n >= 2, got {n}")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def complete(n: int) -> Graph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple(combinations(range(n), 2)))


def complete_bipartite(n1: int, n2: int) -> Graph:
    _need(n1 >= 1 and n2 >= 1, f"complete bipartite needs both parts nonempty, got {n1}, {n2}")
    return Graph(n1 + n2, tuple((i, n1 + j) for i in range(n1) for j in range(n2)))


def prufer_to_edges(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence of length ``n - 2`` over ``0..n-1``."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    # linear-time decoding: walk a pointer over the smallest leaf
    ptr = degree.index(1)
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if x < ptr and degree[x] == 1:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def random_tree(n: int, seed: int | random.Random) -> Graph:
    """Uniform random labelled tree via a uniform Prüfer sequence."""
    _need(n >= 1, f"tree needs n >= 1, got {n}")
    rng = _rng(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, tuple(prufer_to_edges(seq, n)))


def random_gnm_connected(n: int, m: int, seed: int | random.Random) -> Graph:
    """Connected graph with ``m`` edges: a random spanning tree plus random extra edges."""
    _need(n >= 1, f"n must be positive, got {n}")
    _need(n - 1 <= m <= n * (n - 1) // 2, f"need n-1 <= m <= n(n-1)/2, got n={n}, m={m}")
    rng = _rng(seed)
    tree = random_tree(n, rng)
    chosen = set(tree.edges)
    rest = [e for e in combinations(range(n), 2) if e not in chosen]
    chosen.update(rng.sample(rest, m - len(chosen)))
    return Graph(n, tuple(chosen))


def random_bipartite_diam3(n1: int, n2: int, seed: int | random.Random, p: float = 0.7) -> Graph:
    """Random bipartite graph with part sizes ``n1, n2`` and diameter exactly 3.

    Cross edges appear independently with probability ``p``; vertex labels
    are shuffled.  Samples are rejected until the diameter is 3.
    """
    _need(n1 >= 2 and n2 >= 2, f"diameter-3 bipartite graphs need both parts >= 2, got {n1}, {n2}")
    _need(0.0 < p < 1.0, f"edge probability must lie in (0, 1), got {p}")
    rng = _rng(seed)
    n = n1 + n2
    pairs = [(i, n1 + j) for i in range(n1) for j in range(n2)]
    for _ in range(DIAM3_ATTEMPTS):
        label = list(range(n))
        rng.shuffle(label)
        edges = tuple((label[u], label[v]) for u, v in pairs if rng.random() < p)
        g = Graph(n, edges)
        if diameter(g) == 3:
            return g
    raise GenerationError(f"no diameter-3 bipartite graph after {DIAM3_ATTEMPTS} attempts (n1={n1}, n2={n2}, p={p})")


def random_dense(n: int, seed: int | random.Random) -> Graph:
    """Connected graph with a uniformly drawn edge count ``m > n^2/4``."""
    lo = n * n // 4 + 1
    hi = n * (n - 1) // 2
    _need(lo <= hi, f"no simple graph on {n} vertices has more than n^2/4 edges")
    rng = _rng(seed)
    return random_gnm_connected(n, rng.randint(lo, hi), rng)


def all_trees(n: int) -> Iterator[Graph]:
    """All trees on ``n`` vertices up to isomorphism."""
    _need(n >= 1, f"tree needs n >= 1, got {n}")
    if n == 1:
        yield Graph(1)
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph(n, tuple(t.edges()))


def all_connected(n: int) -> Iterator[Graph]:
    """All connected graphs on ``n <= 7`` vertices up to isomorphism (graph atlas)."""
    _need(1 <= n <= 7, f"the graph atlas covers 1 <= n <= 7, got {n}")
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == n and nx.is_connected(h):
            yield Graph(n, tuple(h.edges()))


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def generate(family: str, seed: int | None = None, **params) -> Graph:
    """Build one graph of ``family``.

    Random families require ``seed``.  Parameters: ``n`` for most families,
    ``n1, n2`` for the bipartite ones, ``m`` for ``random_gnm_connected``
    and optionally ``p`` for ``random_bipartite_diam3``.
    """
    if family in RANDOM and seed is None:
        raise GenerationError(f"family {family!r} is random and needs a seed")
    try:
        if family == "path":
            return path(params["n"])
        if family == "cycle":
            return cycle(params["n"])
        if family == "star":
            return star(params["n"])
        if family == "complete":
            return complete(params["n"])
        if family == "complete_bipartite":
            return complete_bipartite(params["n1"], params["n2"])
        if family == "random_tree":
            return random_tree(params["n"], seed)
        if family == "random_gnm_connected":
            return random_gnm_connected(params["n"], params["m"], seed)
        if family == "random_bipartite_diam3":
            return random_bipartite_diam3(params["n1"], params["n2"], seed, params.get("p", 0.7))
        if family == "random_dense":
            return random_dense(params["n"], seed)
    except KeyError as exc:
        raise GenerationError(f"family {family!r} needs parameter {exc.args[0]!r}") from None
    raise GenerationError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def batch(
    family: str,
    *,
    n: int | None = None,
    n_min: int | None = None,
    n_max: int | None = None,
    count: int = 1,
    seed: int | None = None,
    **params,
) -> list[Graph]:
    """A reproducible list of graphs.

    Deterministic families give one graph per order in ``[n_min, n_max]``;
    exhaustive families give every graph of every order in the range;
    random families give ``count`` graphs with orders drawn uniformly from
    the range.  Missing per-graph parameters (``m``, ``n1``/``n2``) are
    drawn at random too.
    """
    if n is not None:
        n_min = n_max = n
    if n_max is None:
        raise GenerationError("need n or n_max")
    if n_min is None:
        n_min = _smallest_order(family)
    _need(n_min <= n_max, f"empty order range {n_min}..{n_max}")
    if family in EXHAUSTIVE:
        src = all_trees if family == "tree" else all_connected
        return [g for k in range(n_min, n_max + 1) for g in src(k)]
    if family in DETERMINISTIC:
        if family == "complete_bipartite" and "n1" in params:
            return [generate(family, **params)]
        out = []
        for k in range(n_min, n_max + 1):
            if family == "complete_bipartite":
                out.extend(complete_bipartite(a, k - a) for a in range(1, k // 2 + 1))
            else:
                out.append(generate(family, n=k))
        return out
    if family not in RANDOM:
        raise GenerationError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if seed is None:
        raise GenerationError(f"family {family!r} is random and needs a seed")
    _need(count >= 0, f"count must be nonnegative, got {count}")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.randint(n_min, n_max)
        kw = dict(params)
        if family == "random_gnm_connected":
            kw.setdefault("m", rng.randint(k - 1, k * (k - 1) // 2))
        if family == "random_bipartite_diam3":
            if "n1" not in params:
                _need(k >= 4, f"diameter-3 bipartite graphs need n >= 4, got {k}")
                kw["n1"] = rng.randint(2, k - 2)
                kw["n2"] = k - kw["n1"]
            kw.setdefault("p", rng.uniform(0.6, 0.9))
        out.append(generate(family, seed=rng.getrandbits(64), n=k, **kw))
    return out


def _smallest_order(family: str) -> int:
    return {
        "path": 2,
        "cycle": 3,
        "star": 2,
        "complete_bipartite": 2,
        "random_bipartite_diam3": 4,
        "random_dense": 3,
    }.get(family, 1)

