"""
Degree-based indices of small graphs
====================================

Degree variance, first Zagreb, Albertson and IRB indices on a few named
graphs, and how the variance relates to the Albertson index.
"""

from fractions import Fraction

from topoindex import generators as gen
from topoindex.indices import albertson, degree_variance, first_zagreb, irb

graphs = {
    "P_4": gen.path(4),
    "S_4": gen.star(4),
    "C_6": gen.cycle(6),
    "K_{2,3}": gen.complete_bipartite(2, 3),
}

# Variance is exact: a Fraction, not a float.
for name, g in graphs.items():
    print(f"{name:8} Var={str(degree_variance(g)):5} M1={first_zagreb(g):3} "
          f"Irr={albertson(g):2} IRB={irb(g):.6f}")

# The variance is M1/n - (2m/n)^2, exactly.
g = graphs["K_{2,3}"]
print(degree_variance(g) == Fraction(first_zagreb(g), g.n) - Fraction(2 * g.m, g.n) ** 2)

# Var >= Irr^2 / (m n^2).  Stars and complete bipartite graphs meet it with
# equality even though they are not regular.
for name, g in graphs.items():
    rhs = Fraction(albertson(g) ** 2, g.m * g.n**2)
    print(f"{name:8} {degree_variance(g)} >= {rhs}: {degree_variance(g) >= rhs}")
