import random

import pytest
from hypothesis import strategies as st

from topoindex import generators as gen
from topoindex.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, b in zip(pairs, bits) if b))


@st.composite
def connected_graphs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(n - 1, n * (n - 1) // 2))
    return gen.random_gnm_connected(n, m, draw(st.integers(0, 2**32)))


@pytest.fixture(scope="session")
def zoo():
    """Small named graphs, plus a disconnected one."""
    return {
        "K2": gen.complete(2),
        "P3": gen.path(3),
        "P4": gen.path(4),
        "S4": gen.star(4),
        "S5": gen.star(5),
        "K3": gen.complete(3),
        "K4": gen.complete(4),
        "K5": gen.complete(5),
        "C5": gen.cycle(5),
        "C6": gen.cycle(6),
        "K23": gen.complete_bipartite(2, 3),
        "two_edges": Graph(4, ((0, 1), (2, 3))),
    }


@pytest.fixture(scope="session")
def mixed_batch():
    """A few hundred assorted graphs used by several oracle comparisons."""
    rng = random.Random(20261014)
    out = list(gen.batch("connected", n_min=1, n_max=6))
    out += gen.batch("random_gnm_connected", n_min=2, n_max=20, count=150, seed=rng.randrange(2**32))
    out += gen.batch("random_bipartite_diam3", n_max=14, count=50, seed=rng.randrange(2**32))
    out += [Graph(6, ((0, 1), (1, 2), (3, 4))), Graph(5)]
    return out


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def acceptance(request):
    lines = request.config._acceptance_lines

    def record(criterion: str, ok: bool, detail: str = "") -> None:
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else ""))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
