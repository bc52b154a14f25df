"""
Poincare series of picture spaces
=================================

Betti numbers of X^d(G) as a polynomial in q, where the coefficient of
q^i is the rank of H_{2i}.
"""

from picspace import Multigraph, Poly, poincare, poincare_closed_form, poincare_manifold, q_analogue

# Two points joined by three parallel lines in the plane
acetylene = Multigraph.banana(3)
P = poincare(acetylene, 2)
print("acetylene, d=2:", P)
print("betti numbers:", P.coeffs())
print("palindromic:", P.is_palindromic())

# The recurrence and the Tutte-polynomial formula agree
for d in (2, 3, 4):
    assert poincare(acetylene, d) == poincare_closed_form(acetylene, d)

# Total rank grows quickly with d
k4 = Multigraph.complete(4)
for d in (2, 3, 4):
    p = poincare(k4, d)
    print(f"K4, d={d}: degree {p.degree()}, total rank {p.evaluate(q=1)}")

# Points on a manifold instead of projective space: pass the manifold's own
# compressed series.  Projective space itself is q_analogue(d + 1)
quadric = Poly.from_coeffs([1, 2, 1])
print("K3 on P^1 x P^1:", poincare_manifold(Multigraph.complete(3), 2, quadric))
assert poincare_manifold(k4, 3, q_analogue(4)) == poincare(k4, 3)
