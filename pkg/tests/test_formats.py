import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from topoindex import generators as gen
from topoindex.formats import (
    FormatError,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    write_edge_list,
    write_graph6,
)
from topoindex.graph import Graph


def nx_decode(s):
    h = nx.from_graph6_bytes(s.encode())
    return Graph(h.number_of_nodes(), tuple(h.edges()))


@pytest.mark.parametrize("s, n, m", [("C~", 4, 6), ("A_", 2, 1), ("A?", 2, 0)])
def test_graph6_examples(s, n, m):
    g = parse_graph6(s)
    assert (g.n, g.m) == (n, m)
    assert g == nx_decode(s)
    assert write_graph6(g) == s


def test_graph6_last_bit():
    # n=4 fills exactly six bits, so no padding; the last bit is edge (2, 3)
    assert parse_graph6("C@").edges == ((2, 3),)


def test_graph6_header_and_whitespace():
    assert parse_graph6(">>graph6<<C~\n") == gen.complete(4)


@pytest.mark.parametrize(
    "s, match, offset",
    [
        ("", "empty", 0),
        ("C~~", "expected 2 bytes", 2),
        ("C", "expected 2 bytes", 1),
        ("B`", "padding", 1),  # n=3 uses 3 of 6 bits, the low three must be zero
        ("~?@", "long-form", 0),
        ("C\x7f", "outside", 1),
        ("?", "no vertices", 0),
    ],
)
def test_graph6_errors(s, match, offset):
    with pytest.raises(FormatError, match=match) as info:
        parse_graph6(s)
    assert info.value.offset == offset


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip_and_interop(g):
    s = write_graph6(g)
    assert parse_graph6(s) == g
    assert nx_decode(s) == g
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == s


def test_graph6_rejects_large_graphs():
    with pytest.raises(FormatError, match="at most 62"):
        write_graph6(gen.path(63))
    assert parse_graph6(write_graph6(gen.path(62))) == gen.path(62)


def test_edge_list_examples():
    assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == gen.path(4)
    assert parse_edge_list("4 3\n0 1\n0 2\n0 3") == gen.star(4)


@pytest.mark.parametrize(
    "text, match, line",
    [
        ("3 1\n0 0", "loop", 2),
        ("3 2\n0 1\n1 0", "duplicate", 3),
        ("3 1\n0 5", "out of range", 2),
        ("3 2\n0 1", "declares 2", 1),
        ("x y\n", "header", 1),
        ("3 1\n0 one", "edge line", 2),
    ],
)
def test_edge_list_errors(text, match, line):
    with pytest.raises(FormatError, match=match) as info:
        parse_edge_list(text)
    assert info.value.offset == line


def test_edge_list_round_trip():
    g = gen.random_gnm_connected(9, 14, seed=4)
    text = write_edge_list(g)
    assert text.splitlines()[0] == "9 14"
    assert parse_edge_list(text) == g
    assert parse_edge_list("# comment\n\n3 1\n0 2  # trailing\n") == Graph(3, ((0, 2),))


def test_read_graphs_detects_format():
    assert read_graphs("4 3\n0 1\n1 2\n2 3\n") == [gen.path(4)]
    assert read_graphs("C~\n\nA_\n") == [gen.complete(4), gen.complete(2)]
    with pytest.raises(FormatError, match="line 2"):
        read_graphs("C~\nC~~\n")


def test_random_round_trip_large():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 62)
        p = rng.random()
        g = Graph(n, tuple((i, j) for j in range(n) for i in range(j) if rng.random() < p))
        s = write_graph6(g)
        assert write_graph6(parse_graph6(s)) == s
