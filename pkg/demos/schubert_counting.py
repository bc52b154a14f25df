"""
Counting pictures with Schubert calculus
========================================

Three points in P^3 on fixed planes, and two lines through point 1 that
each meet three fixed lines.  How many such configurations exist?
"""

from picspace import (
    Multigraph,
    Permutation,
    build_ring,
    intersection_number,
    pullback_class,
    schubert_polynomial,
)

# A few Schubert polynomials
for w in ([2, 1, 3, 4], [1, 3, 2, 4], [1, 4, 2, 3], [4, 3, 2, 1]):
    print(Permutation(w), "->", schubert_polynomial(w))

tree = Multigraph(["1", "2", "3"], {"12": ("1", "2"), "13": ("1", "3")})
R = build_ring(tree, 3)

# point i on a plane: 2134 pulled back along (i, edge)
# line e meets a line: 1324 pulled back along (1, e)
conditions = [("1", "12", [2, 1, 3, 4]), ("2", "12", [2, 1, 3, 4]), ("3", "13", [2, 1, 3, 4])]
conditions += [("1", "12", [1, 3, 2, 4])] * 3 + [("1", "13", [1, 3, 2, 4])] * 3
classes = [pullback_class(R, v, e, w) for v, e, w in conditions]
for (v, e, w), c in zip(conditions, classes):
    print(f"  {Permutation(w)} at ({v}, {e}): {c}")

print("number of pictures:", intersection_number(R, classes))
