"""
Checking every bound over a corpus
==================================

Run the whole suite over all connected graphs on at most six vertices and
a batch of random trees, then look at the equality cases it finds.  The
same run is available from the shell as
``topoindex verify --family connected --n-max 6``.
"""

from collections import Counter

from topoindex import bounds
from topoindex import generators as gen

graphs = gen.batch("connected", n_max=6) + gen.batch("random_tree", n_min=4, n_max=12, count=100, seed=0)
result = bounds.run_suite(graphs)
print(result.to_text().split("DISCREPANCY")[0])
print("violations:", len(result.violations))

# Which bounds are tight most often?
tight = Counter(c.bound_id for c in result.checks if c.applicable and c.equality)
for bid, k in tight.most_common():
    print(f"{bid:18} {k}")

# Discrepancies: equality where the stated characterisation says otherwise.
for c in result.discrepancies[:5]:
    print(c.bound_id, c.graph6, c.discrepancy)

# Violations would be serialised with graph6 witnesses; CSV columns:
print(result.to_csv().splitlines()[0])
