"""
Generic d-parallel independence
===============================

An edge set is d-parallel independent when its picture space has the
expected dimension.  The test reads this off the Poincare series.
"""

from picspace import Multigraph, parallel_independent, max_cellules

k3 = Multigraph.complete(3)
k4 = Multigraph.complete(4)

for g, name in [(k3, "K3"), (k4, "K4")]:
    for d in (2, 3):
        v = parallel_independent(g, d)
        w = v.witness_polynomial
        lead = w.coeffs()[-1]
        print(f"{name} d={d}: {v}  witness degree {w.degree()} (expected {v.expected_degree}),"
              f" leading coefficient {lead}")

# Trees are always independent
path = Multigraph.path(5)
print("path on 5 vertices:", [str(parallel_independent(path, d)) for d in (2, 3, 4)])

# The dimension also comes from the cellule decomposition: find which
# coincidence patterns give the biggest stratum
dim, winners = max_cellules(k4, 2)
print("K4, d=2: dimension", dim, "reached by", [str(A) for A in winners])
