"""Compressed Poincare series of picture spaces and what can be read off them.

Two independent routes compute the series: the four-case deletion-contraction
recurrence (:func:`poincare`) and a denominator-free corank-nullity sum
(:func:`poincare_closed_form`). Writing ``D = [d]_q - 1``, the Tutte
specialization has ``x - 1 = [d+1]_q / D`` and ``y - 1 = D`` because
``(1 + q)[d]_q - [d]_q + 1 = [d+1]_q``; the prefactor ``D^(v-c) = D^r(E)``
then clears every denominator, leaving::

    [d+1]_q^c * sum_F [d+1]_q^(r(E) - r(F)) * D^|F|

The manifold version replaces ``[d+1]_q`` by the Poincare polynomial of M.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .errors import GuardExceeded, PicspaceError
from .multigraph import Multigraph, Partition, partitions, unconstrained_count
from .polyring import Q_VARS, Poly, exact_div, q_analogue
from .tutte import MAX_SUBSET_EDGES, default_pivot

__all__ = [
    "MAX_D",
    "ParallelVerdict",
    "cellule_dimension",
    "max_cellules",
    "parallel_independent",
    "picture_space_dimension_oracle",
    "poincare",
    "poincare_closed_form",
    "poincare_manifold",
]

MAX_D = 64


def _check_d(d: int, force: bool = False):
    if not isinstance(d, int) or d < 2:
        raise PicspaceError(f"picture spaces need an integer d >= 2, got {d!r}")
    if d > MAX_D and not force:
        raise GuardExceeded(f"d={d} exceeds the cap of {MAX_D}")


def poincare(g: Multigraph, d: int, *, cache=None,
             pivot: Callable[[Multigraph], str] | None = None, force: bool = False) -> Poly:
    """Compressed Poincare series ``P^d_G(q)`` by the loop/isthmus/other recurrence."""
    _check_d(d, force)
    if cache is None:
        cache = {}
    pick = pivot or default_pivot
    qd = q_analogue(d)
    qd1 = q_analogue(d + 1)
    isthmus_factor = q_analogue(2) * qd
    other_factor = qd - 1

    def rec(h: Multigraph) -> Poly:
        if not h.n_edges:
            return qd1**h.n_vertices
        key = ("poincare", d, h.canonical_key())
        hit = cache.get(key)
        if hit is not None:
            return hit
        e = pick(h)
        if h.is_loop(e):
            val = qd * rec(h.delete(e))
        elif h.is_isthmus(e):
            val = isthmus_factor * rec(h.contract(e))
        else:
            val = rec(h.delete(e)) + other_factor * rec(h.contract(e))
        cache[key] = val
        return val

    return rec(g)


def _cleared_sum(g: Multigraph, base: Poly, d: int, force: bool) -> Poly:
    # base^c * sum_F base^(r(E)-r(F)) * ([d]_q - 1)^|F|
    if g.n_edges > MAX_SUBSET_EDGES and not force:
        raise GuardExceeded(f"{g.n_edges} edges exceeds the subset guard of {MAX_SUBSET_EDGES}")
    rE = g.rank()
    counts: dict[tuple[int, int], int] = {}
    for k in range(g.n_edges + 1):
        for F in combinations(g.edge_ids, k):
            key = (rE - g.rank(F), k)
            counts[key] = counts.get(key, 0) + 1
    D = q_analogue(d) - 1
    total = Poly.zero(Q_VARS)
    for (a, k), n in sorted(counts.items()):
        total = total + n * base**a * D**k
    return base ** g.num_components() * total


def poincare_closed_form(g: Multigraph, d: int, force: bool = False) -> Poly:
    """Tutte specialization of the Poincare series, computed without fractions."""
    _check_d(d, force)
    return _cleared_sum(g, q_analogue(d + 1), d, force)


def poincare_manifold(g: Multigraph, d: int, pm: Poly, force: bool = False) -> Poly:
    """Series for pictures on a d-dimensional manifold with Poincare polynomial ``pm``.

    ``pm`` is univariate in ``q`` (compressed, one power of q per complex
    dimension) with constant term 1.
    """
    _check_d(d, force)
    if pm.vars != Q_VARS:
        pm = pm.embed(Q_VARS)
    if pm.coefficient((0,)) != 1:
        raise PicspaceError("manifold Poincare polynomial must have constant term 1")
    return _cleared_sum(g, pm, d, force)


@dataclass(frozen=True)
class ParallelVerdict:
    independent: bool
    witness_polynomial: Poly
    expected_degree: int

    def __str__(self):
        return "INDEPENDENT" if self.independent else "DEPENDENT"


def parallel_independent(g: Multigraph, d: int, *, cache=None, force: bool = False) -> ParallelVerdict:
    """Generic d-parallel independence of ``E(G)`` via the monic-degree test.

    The witness is ``P^d_G / [d+1]_q^c``; ``E`` is independent iff it is monic
    of degree ``d (v - c)``.
    """
    P = poincare(g, d, cache=cache, force=force)
    c = g.num_components()
    witness = exact_div(P, q_analogue(d + 1) ** c)
    expected = d * (g.n_vertices - c)
    return ParallelVerdict(witness.is_monic_of_degree(expected), witness, expected)


def cellule_dimension(g: Multigraph, A: Partition, d: int) -> int:
    """Complex dimension ``d|A| + (d-1) u(A)`` of the cellule indexed by ``A``."""
    _check_d(d, force=True)
    return d * len(A) + (d - 1) * unconstrained_count(g, A)


def max_cellules(g: Multigraph, d: int, force: bool = False) -> tuple[int, list[Partition]]:
    """Maximal cellule dimension and every partition attaining it."""
    _check_d(d, force)
    best, winners = -1, []
    for A in partitions(g.vertices, force=force):
        dim = cellule_dimension(g, A, d)
        if dim > best:
            best, winners = dim, [A]
        elif dim == best:
            winners.append(A)
    return best, winners


def picture_space_dimension_oracle(g: Multigraph, d: int, force: bool = False) -> int:
    """``dim X^d(G)`` as the maximum over all cellules."""
    return max_cellules(g, d, force)[0]
