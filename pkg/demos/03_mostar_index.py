"""
The Mostar index and its upper bounds
=====================================

Per-edge distance splits, the Mostar and Szeged indices, and the bounds
for bipartite graphs of diameter three and for dense graphs.
"""

from topoindex import bounds
from topoindex import generators as gen
from topoindex.graph import edge_peripherality
from topoindex.indices import albertson, bipartite_diam3_mostar_form, mostar, szeged

g = gen.path(4)
for e in edge_peripherality(g):
    print(f"edge ({e.u},{e.v}): closer to u={e.ne_u}, closer to v={e.ne_v}, equidistant={e.n_uv}")
print("Mo(P_4) =", mostar(g), " Sz(P_4) =", szeged(g))

# Stars are the extremal trees: Mo(S_n) = (n-1)(n-2).
print([mostar(gen.star(n)) for n in range(3, 9)])

# On bipartite diameter-3 graphs Mo depends only on degrees and part sizes.
g = gen.random_bipartite_diam3(4, 6, seed=11)
print("Mo from distances", mostar(g), "from degrees", bipartite_diam3_mostar_form(g), "Irr", albertson(g))
for check in (bounds.check_bipartite_diam3, bounds.check_part_size, bounds.check_mostar_szeged):
    c = check(g)
    print(f"{c.bound_id:16} Mo={c.lhs} <= {c.rhs:.3f}  holds={c.holds}")

# Dense graphs: complete graphs meet the "strict" bound with 0 = 0.
for g in (gen.complete(5), gen.random_dense(8, seed=2)):
    c = bounds.check_dense_mostar(g)
    print(f"n={g.n} m={g.m} Mo={c.lhs} rhs={c.rhs:.3f} strict={c.extras['strict']} note={c.discrepancy}")
