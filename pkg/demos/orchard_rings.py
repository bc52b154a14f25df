"""
Cohomology rings of orchards
============================

When every edge is a loop or an isthmus the picture space is smooth and
its cohomology ring has an explicit presentation.  Here we build it,
check its Hilbert function and compute in it.
"""

from picspace import Multigraph, build_ring, is_orchard, poincare

tree = Multigraph(["1", "2", "3"], {"12": ("1", "2"), "13": ("1", "3")})
print("orchard?", is_orchard(tree), is_orchard(Multigraph.complete(3)))

R = build_ring(tree, 2)
print("generators:", R.vars)
for r in R.relations():
    print("  relation:", r)

# Normal-form monomials, graded by degree
print("graded ranks:", R.graded_ranks())
print("poincare    :", poincare(tree, 2).coeffs())

# Arithmetic happens on reduced classes
x1, z12 = R.x("1"), R.z("12")
c = R.reduce(x1 * z12)
print("x1*z12 =", c)
print("(x1*z12)^2 =", c * c)

# The point class spans the top degree
print("point class:", R.point_class())

# A loop adds a projective-space factor over its vertex
loopy = tree.with_edges({"L": ("2", "2")})
S = build_ring(loopy, 2)
print("with a loop at 2:", S.graded_ranks())
