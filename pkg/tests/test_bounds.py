import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import connected_graphs
from topoindex import bounds as b
from topoindex import generators as gen
from topoindex.graph import Graph
from topoindex.indices import Invariants

SQ2 = math.sqrt(2)
IRB_P3 = 2 * (SQ2 - 1) ** 2


# Degree-based


def test_var_irr_examples(zoo):
    c = b.check_var_irr(zoo["C6"])
    assert c.holds and c.equality and c.lhs == c.rhs == 0 and c.discrepancy is None
    c = b.check_var_irr(zoo["P4"])
    assert (c.lhs, c.rhs, c.slack) == (Fraction(1, 4), Fraction(1, 12), Fraction(1, 6))
    assert c.holds and not c.equality and c.sense == ">="
    c = b.check_var_irr(zoo["S4"])
    assert c.lhs == c.rhs == Fraction(3, 4) and c.equality and c.holds
    assert c.discrepancy == "equality attained by a non-regular graph"
    assert not b.check_var_irr(zoo["two_edges"]).applicable
    assert not b.check_var_irr(Graph(3)).applicable


def test_zagreb_examples(zoo):
    c = b.check_zagreb_lower(zoo["S4"])
    assert (c.lhs, c.rhs, c.equality) == (12, 12, True)
    c = b.check_zagreb_lower(zoo["P4"])
    assert c.lhs == 10 and c.rhs == 9 + Fraction(1, 3) and c.holds and not c.equality
    assert c.extras["classical"] == 9 and c.extras["improvement"] == Fraction(1, 3)
    for n in (3, 5, 8):
        c = b.check_zagreb_lower(gen.complete(n))
        assert c.lhs == c.rhs == n * (n - 1) ** 2


# Energy


def test_energy_irb_examples(zoo):
    c = b.check_energy_irb(zoo["K3"])
    assert c.lhs == pytest.approx(4) and c.rhs == pytest.approx(math.sqrt(18)) and c.holds
    assert c.rhs == pytest.approx(c.extras["mcclelland"])
    c = b.check_energy_irb(zoo["P3"])
    assert c.lhs == pytest.approx(2 * SQ2, abs=1e-12)
    assert c.rhs == pytest.approx(math.sqrt(12 - IRB_P3), abs=1e-12)
    assert c.holds and not c.exact
    assert not b.check_energy_irb(Graph(3)).applicable


def test_energy_irb_chain():
    for g in gen.batch("random_gnm_connected", n_min=2, n_max=14, count=200, seed=9):
        c = b.check_energy_irb(g)
        irb, mid, top = c.extras["chain"]
        assert irb <= mid + b.FLOAT_TOL and mid <= top + b.FLOAT_TOL
        assert c.rhs <= c.extras["mcclelland"] + b.FLOAT_TOL


def test_koolen_moulton_examples(zoo):
    c = b.check_koolen_moulton(zoo["K4"])
    assert c.lhs == pytest.approx(6) and c.rhs == pytest.approx(6) and c.equality and c.holds
    c = b.check_koolen_moulton(zoo["P4"])
    assert c.applicable and c.holds and c.extras["tighter"] in {"koolen_moulton", "energy_irb", "tie"}
    c = b.check_koolen_moulton(zoo["K2"])
    assert not c.applicable and "2m > n" in c.reason


def test_energy_sqrtdeg_and_mcclelland(zoo):
    c = b.check_energy_sqrtdeg(zoo["K2"])
    assert c.lhs == pytest.approx(2) and c.rhs == pytest.approx(2) and c.equality
    c = b.check_energy_sqrtdeg(zoo["K3"])
    assert c.rhs == pytest.approx(3 * SQ2) and c.holds
    c = b.check_energy_sqrtdeg(zoo["S4"])
    assert c.lhs == pytest.approx(2 * math.sqrt(3)) and c.rhs == pytest.approx(math.sqrt(3) + 3)
    c = b.check_mcclelland(zoo["two_edges"])
    assert c.applicable and c.holds


# Mostar


def test_mostar_trivial_examples(zoo):
    c = b.check_mostar_trivial(gen.star(6))
    assert c.lhs == c.rhs == 20 and c.equality and c.discrepancy is None
    c = b.check_mostar_trivial(zoo["K4"])
    assert c.lhs == 0 and c.extras["left_equality"] and not c.equality
    c = b.check_mostar_trivial(zoo["P4"])
    assert (c.lhs, c.rhs) == (4, 6) and not c.equality and not c.extras["left_equality"]
    assert not b.check_mostar_trivial(zoo["K2"]).applicable


def test_diameter2_and_tree_checks(zoo):
    c = b.check_diameter2_mostar(zoo["S5"])
    assert c.sense == "==" and c.holds and c.lhs == c.rhs == 12
    assert not b.check_diameter2_mostar(zoo["P4"]).applicable
    c = b.check_tree_mostar(zoo["P4"])
    assert (c.lhs, c.rhs) == (4, 2) and c.extras["same_parity"] and not c.extras["star"]
    c = b.check_tree_mostar(zoo["S5"])
    assert c.equality and c.extras["star"] and c.discrepancy is None
    assert not b.check_tree_mostar(zoo["C5"]).applicable


def test_bipartite_diam3_examples(zoo):
    c = b.check_bipartite_diam3(zoo["P4"])
    assert c.extras["polynomial"] == 16 and c.lhs == 4
    assert c.rhs == pytest.approx(math.sqrt(3 * (2 + SQ2) / 4 * 16), abs=1e-12)
    assert c.rhs == pytest.approx(6.40082516153, abs=1e-10)
    c = b.check_bipartite_diam3(zoo["C6"])
    assert c.applicable and c.lhs == 0 and c.holds
    c = b.check_bipartite_diam3(zoo["K23"])
    assert not c.applicable and "diameter is 2" in c.reason


def test_bipartite_diam3_monotone_in_lambda():
    for g in gen.batch("random_bipartite_diam3", n_max=14, count=150, seed=2):
        c = b.check_bipartite_diam3(g)
        assert c.holds and c.extras["mostar_form"] == c.lhs
        assert c.rhs <= c.extras["rhs_lambda_n"] + b.FLOAT_TOL


def test_goldberg_examples(zoo):
    c = b.check_goldberg(zoo["C6"])
    assert c.lhs == 0 and c.holds
    c = b.check_goldberg(zoo["P4"])
    assert c.lhs == 2 and c.rhs == pytest.approx(math.sqrt(3 * 4 * (2 + SQ2) / 4), abs=1e-12)
    assert c.extras["mostar_twice_irr"]
    c = b.check_goldberg(zoo["S4"])
    assert c.lhs == 6 and c.rhs == pytest.approx(6, abs=1e-10) and c.equality and c.holds


def test_part_size_examples(zoo):
    c = b.check_part_size(zoo["P4"])
    assert c.lhs == 4 and c.rhs == pytest.approx(12.3168057427, abs=1e-9)
    assert b.check_part_size(zoo["C6"]).holds
    assert not b.check_part_size(zoo["K23"]).applicable
    for n1, n2 in [(2, 5), (3, 7), (6, 4)]:
        assert b.part_size_bound(n1, n2) == pytest.approx(b.part_size_bound(n2, n1), rel=1e-14)


def test_part_size_swap_invariant_under_relabel():
    g = gen.random_bipartite_diam3(3, 6, seed=8)
    # relabel so that vertex 0 moves to the other part
    bp0 = Invariants(g).bipartition
    other = next(v for v in range(g.n) if bp0.part[v] != bp0.part[0])
    perm = list(range(g.n))
    perm[0], perm[other] = other, 0
    h = Graph(g.n, tuple((perm[u], perm[v]) for u, v in g.edges))
    bp1 = Invariants(h).bipartition
    assert (bp0.n1, bp0.n2) == (bp1.n2, bp1.n1)
    for check in (b.check_part_size, b.check_bipartite_diam3):
        assert check(g).rhs == pytest.approx(check(h).rhs, rel=1e-12)


def test_mostar_szeged_examples(zoo):
    c = b.check_mostar_szeged(zoo["P4"])
    assert c.lhs == 4 and c.extras["radicand"] == 24 and c.rhs == pytest.approx(math.sqrt(24))
    assert c.holds and not c.equality and c.extras["per_edge_identity"]
    for n in range(3, 12):
        c = b.check_mostar_szeged(gen.star(n))
        assert c.lhs == (n - 1) * (n - 2) and c.equality
    assert not b.check_mostar_szeged(zoo["K3"]).applicable


def test_triangle_sandwich_examples(zoo):
    c = b.check_triangle_sandwich(zoo["K4"])
    assert (c.lhs, c.extras["three_t"], c.rhs) == (12, 12, 12) and c.equality
    c = b.check_triangle_sandwich(gen.random_tree(10, 0))
    assert c.lhs <= 0 and c.extras["three_t"] == 0 and c.holds
    c = b.check_triangle_sandwich(zoo["C5"])
    assert (c.lhs, c.extras["three_t"], c.rhs) == (-5, 0, 5)


def test_dense_mostar_examples(zoo):
    c = b.check_dense_mostar(zoo["K4"])
    assert c.lhs == 0 and c.extras["radicand"] == 0 and c.equality and c.holds
    assert not c.extras["strict"] and c.discrepancy
    c = b.check_dense_mostar(zoo["K5"])
    assert c.extras["radicand"] == 0 and not c.extras["strict"]
    k5e = Graph(5, tuple(e for e in gen.complete(5).edges if e != (0, 1)))
    c = b.check_dense_mostar(k5e)
    assert c.applicable and c.lhs == 6 and c.extras["radicand"] == Fraction(972, 5)
    assert c.holds and c.extras["strict"] and c.discrepancy is None
    assert not b.check_dense_mostar(zoo["C6"]).applicable


@settings(max_examples=150, deadline=None)
@given(connected_graphs(max_n=11))
def test_no_violations_on_random_connected(g):
    for c in b.check_graph(g):
        assert not c.violation, (c.bound_id, c.graph6, c.reason)
        if not c.applicable:
            assert c.holds is None


def test_run_suite_counts_and_ordering(zoo):
    graphs = [zoo["S4"], zoo["K4"], zoo["two_edges"], zoo["P4"]]
    res = b.run_suite(graphs)
    assert res.ok and res.graphs == 4
    assert len(res.checks) == 4 * len(b.BOUNDS)
    assert [c.bound_id for c in res.checks[: len(b.BOUNDS)]] == list(b.BOUNDS)
    s = res.summary
    for bid, row in s.items():
        assert row["checked"] == 4 and row["applicable"] + row["not_applicable"] == 4
        assert row["violation"] == 0
    assert s["mostar_trivial"]["not_applicable"] == 1  # the disconnected graph
    assert {c.bound_id for c in res.discrepancies} == {"var_irr", "dense_mostar"}


def test_run_suite_empty_and_selection():
    res = b.run_suite([])
    assert res.ok and res.checks == [] and all(v == 0 for r in res.summary.values() for v in r.values())
    res = b.run_suite([gen.path(5)], ["mostar_szeged", "var_irr"])
    assert [c.bound_id for c in res.checks] == ["mostar_szeged", "var_irr"]
    with pytest.raises(KeyError, match="unknown bound"):
        b.run_suite([gen.path(5)], ["nope"])


def test_run_suite_parallel_identical():
    graphs = gen.batch("random_gnm_connected", n_min=3, n_max=10, count=40, seed=5)
    serial = b.run_suite(graphs)
    parallel = b.run_suite(graphs, jobs=3)
    assert serial.to_json() == parallel.to_json()
    assert serial.to_csv() == parallel.to_csv()


def test_violation_is_reported_with_witness(monkeypatch):
    def broken(graph):
        inv = b.invariants(graph)
        return b._exact("broken", inv, inv.m + 1, inv.m)

    monkeypatch.setitem(b.BOUNDS, "broken", broken)
    res = b.run_suite([gen.cycle(5)], ["broken"])
    assert not res.ok
    (v,) = res.violations
    assert v.graph6 == "Dhc" and v.lhs == 6
    doc = json.loads(res.to_json())
    assert doc["violations"][0]["graph6"] == "Dhc"
    assert "VIOLATION broken Dhc" in res.to_text()


def test_serialisation(zoo):
    res = b.run_suite([zoo["P4"]], ["var_irr", "energy_irb", "mostar_szeged"])
    doc = json.loads(res.to_json())
    assert set(doc) >= {"summary", "checks", "violations"}
    assert doc["checks"][0]["lhs"] == "1/4" and doc["checks"][0]["slack"] == "1/6"
    rows = res.to_csv().splitlines()
    assert rows[0] == ",".join(b.CSV_COLUMNS)
    assert rows[1] == "var_irr,Ch,1/4,1/12,1/6,false,true"
    assert rows[2].startswith("energy_irb,Ch,4.472135955,")
    assert b.fmt_value(math.pi) == "3.14159265359"
