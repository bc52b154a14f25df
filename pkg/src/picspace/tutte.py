"""Tutte polynomial by memoized deletion-contraction, and a subset-sum oracle."""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from .errors import GuardExceeded
from .multigraph import Multigraph
from .polyring import Poly

__all__ = ["TUTTE_VARS", "tutte", "tutte_by_subsets", "default_pivot", "MAX_SUBSET_EDGES"]

TUTTE_VARS = ("x", "y")
MAX_SUBSET_EDGES = 24

_X = Poly.gen("x", TUTTE_VARS)
_Y = Poly.gen("y", TUTTE_VARS)


def default_pivot(g: Multigraph) -> str:
    """Loops and isthmuses first, otherwise the smallest edge id."""
    for e in g.edge_ids:
        if g.is_loop(e) or g.is_isthmus(e):
            return e
    return g.edge_ids[0]


def tutte(g: Multigraph, *, cache=None, pivot: Callable[[Multigraph], str] | None = None) -> Poly:
    """``T_G(x, y)`` in the generators ``("x", "y")``.

    ``pivot`` picks the edge to recurse on; any choice yields the same
    polynomial. ``cache`` may be a :class:`~picspace.memo.SharedCache`.
    """
    if cache is None:
        cache = {}
    pick = pivot or default_pivot

    def rec(h: Multigraph) -> Poly:
        if not h.n_edges:
            return Poly.one(TUTTE_VARS)
        key = ("tutte", h.canonical_key())
        hit = cache.get(key)
        if hit is not None:
            return hit
        e = pick(h)
        if h.is_loop(e):
            val = _Y * rec(h.delete(e))
        elif h.is_isthmus(e):
            val = _X * rec(h.contract(e))
        else:
            val = rec(h.delete(e)) + rec(h.contract(e))
        cache[key] = val
        return val

    return rec(g)


def tutte_by_subsets(g: Multigraph, force: bool = False) -> Poly:
    """Corank-nullity expansion over all ``2^e`` edge subsets."""
    if g.n_edges > MAX_SUBSET_EDGES and not force:
        raise GuardExceeded(f"{g.n_edges} edges exceeds the subset guard of {MAX_SUBSET_EDGES}")
    rE = g.rank()
    counts: dict[tuple[int, int], int] = {}
    for k in range(g.n_edges + 1):
        for F in combinations(g.edge_ids, k):
            r = g.rank(F)
            key = (rE - r, k - r)
            counts[key] = counts.get(key, 0) + 1
    xm1 = _X - 1
    ym1 = _Y - 1
    out = Poly.zero(TUTTE_VARS)
    for (a, b), n in counts.items():
        out = out + n * xm1**a * ym1**b
    return out
