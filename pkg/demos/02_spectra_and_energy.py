"""
Spectra, energy and the Laplacian spectral radius
=================================================

The Jacobi eigensolver on adjacency and Laplacian matrices, graph energy
against its upper bounds, and the max-ratio characterisation of the
largest Laplacian eigenvalue.
"""

import math

import numpy as np

from topoindex import generators as gen
from topoindex import spectral as sp
from topoindex.indices import irb, sqrt_degree_sum

g = gen.path(4)
spec = sp.adjacency_spectrum(g)
print("A(P_4) eigenvalues:", np.round(spec.values, 6), "residual", f"{spec.residual:.1e}")
print("energy:", sp.graph_energy(g), "= 2*sqrt(5) =", 2 * math.sqrt(5))

# Energy never exceeds sqrt(2mn - IRB), which never exceeds sqrt(2mn).
for g in (gen.path(6), gen.star(6), gen.complete(6), gen.random_gnm_connected(10, 20, seed=1)):
    n, m = g.n, g.m
    print(f"n={n:2} m={m:2}  E={sp.graph_energy(g):.4f}  "
          f"sum sqrt(deg)={sqrt_degree_sum(g):.4f}  "
          f"sqrt(2mn-IRB)={math.sqrt(2 * m * n - irb(g)):.4f}  sqrt(2mn)={math.sqrt(2 * m * n):.4f}")

# The top Laplacian eigenvalue is the maximum of the ratio over nonconstant
# vectors; random vectors stay below it and the top eigenvector attains it.
g = gen.random_gnm_connected(12, 25, seed=3)
lam = sp.laplacian_spectral_radius(g)
x = np.random.default_rng(0).standard_normal((10_000, g.n))
print("lambda_max", lam, "best random ratio", sp.fiedler_ratio(g, x).max())
print("ratio at top eigenvector", sp.fiedler_ratio(g, sp.top_laplacian_vector(g)))
