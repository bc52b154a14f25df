"""
Tutte polynomials by deletion and contraction
=============================================

Build a few multigraphs, compute T_G(x, y) two ways and look at the
standard evaluations.
"""

from picspace import Multigraph, tutte, tutte_by_subsets

# A triangle, a digon and a single loop
triangle = Multigraph.complete(3)
digon = Multigraph.banana(2)
loop = Multigraph.bouquet(1)

for name, g in [("K3", triangle), ("digon", digon), ("loop", loop)]:
    print(f"T_{name} = {tutte(g)}")

# The recursive computation is memoized on an isomorphism-invariant key,
# the subset expansion is the brute-force check
k4 = Multigraph.complete(4)
T = tutte(k4)
assert T == tutte_by_subsets(k4)
print("T_K4 =", T)

# T(1,1) counts spanning trees, T(2,2) counts edge subsets
print("spanning trees of K4:", T.evaluate(x=1, y=1))
print("2^6 =", T.evaluate(x=2, y=2))

# Multiplicative over disjoint unions
both = triangle.disjoint_union(digon)
print("T_{K3 + digon} =", tutte(both))
