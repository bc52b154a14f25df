"""Integral cohomology rings of orchard picture spaces.

The ring is ``Z[x_v, z_e] / I`` with ``I`` generated by ``x_v^(d+1)``,
``h_d(x_v, z_e - x_v)`` for ``e`` in ``E(v)``, and
``(x_v - x_w)(z_e - x_v - x_w)`` for each isthmus ``e = vw``.

Normal forms come from the iterated projective bundle structure. Each tree
is rooted at its smallest vertex and grown outward; every step adjoins one
generator ``t`` with a relation monic in ``t``:

* root ``r``:           ``x_r^(d+1) = 0``
* isthmus ``e``, parent ``w``: ``h_d(x_w, z_e - x_w)``, monic of degree d in ``z_e``
* its child ``v``:      ``(x_v - x_w)(z_e - x_v - x_w)``, monic of degree 2 in ``-x_v``
* loop ``e`` at ``v``:  ``h_d(x_v, z_e - x_v)``, monic of degree d in ``z_e``

The ring's generator tuple lists generators in adjunction order. With the
later generator larger in lex order, each relation's leading monomial is a
pure power of its own generator, so the leading monomials are pairwise
coprime and the triangular set is a Groebner basis of the ideal it spans.
Building the ring checks that every generator of ``I`` reduces to zero,
so that ideal is ``I`` itself.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import product

from .errors import NotAnOrchard, PicspaceError
from .homology import _check_d
from .multigraph import Multigraph
from .polyring import Poly, _add_into, h_poly

__all__ = ["CohomologyClass", "OrchardRing", "build_ring", "is_orchard"]


def is_orchard(g: Multigraph) -> bool:
    """True iff every edge is a loop or an isthmus."""
    return all(g.is_loop(e) or g.is_isthmus(e) for e in g.edge_ids)


def x_name(v: str) -> str:
    return f"x_{v}"


def z_name(e: str) -> str:
    return f"z_{e}"


class OrchardRing:
    """``H^*(X^d(G); Z)`` for an orchard ``G``; build with :func:`build_ring`."""

    def __init__(self, g: Multigraph, d: int):
        _check_d(d)
        bad = [e for e in g.edge_ids if not (g.is_loop(e) or g.is_isthmus(e))]
        if bad:
            raise NotAnOrchard(f"edges {bad} are neither loops nor isthmuses")
        self.graph = g
        self.d = d
        self._plan()
        self.vars = tuple(name for name, *_ in self._steps)
        self.bounds = tuple(k for _, k, _ in self._steps)
        self._index = {v: i for i, v in enumerate(self.vars)}
        # tails[i]: t_i^k_i == tails[i], a polynomial in t_0..t_i of t_i-degree < k_i
        self._tails = []
        for i, (name, k, rel) in enumerate(self._steps):
            rel = rel(self)
            lead = tuple(k if j == i else 0 for j in range(len(self.vars)))
            sign = rel.terms.get(lead)
            if sign not in (1, -1) or any(m[i] > k or any(m[i + 1:]) for m in rel.terms):
                raise PicspaceError(f"relation for {name} is not monic of degree {k}")
            tail = {m: -c * sign for m, c in rel.terms.items() if m != lead}
            self._tails.append(tail)
        self._powers: list[dict[int, dict]] = [{} for _ in self.vars]
        for r in self.relations():
            if self._normal_terms(r.terms):
                raise PicspaceError(f"relation {r} does not reduce to zero; rewriting system broken")

    # -- construction --------------------------------------------------------

    def _plan(self):
        g, d = self.graph, self.d
        steps = []  # (generator name, lead exponent, relation builder)
        pruning = []
        for comp in g.components():
            root = comp.vertices[0]
            steps.append((x_name(root), d + 1, lambda R, r=root: R.x(r) ** (d + 1)))
            pruning.append(("root", root))
            queue = [root]
            seen = {root}
            while queue:
                v = queue.pop(0)
                for e in comp.incident(v):
                    u, w = comp.edges[e]
                    if u == w:
                        steps.append((z_name(e), d, lambda R, v=v, e=e: R.loop_relation(v, e)))
                        pruning.append(("loop", e, v))
                        continue
                    child = w if u == v else u
                    if child in seen:
                        continue
                    seen.add(child)
                    steps.append((z_name(e), d, lambda R, v=v, e=e: R.loop_relation(v, e)))
                    steps.append((x_name(child), 2,
                                  lambda R, c=child, p=v, e=e: -R.mixed_relation(c, p, e)))
                    pruning.append(("leaf", child, e, v))
                    queue.append(child)
        self._steps = steps
        # pruning removes generators in the reverse of adjunction order
        self.pruning_order = tuple(reversed(pruning))

    # -- generators and relations ------------------------------------------------

    def gen(self, name: str) -> Poly:
        return Poly.gen(name, self.vars)

    def x(self, v: str) -> Poly:
        return self.gen(x_name(v))

    def z(self, e: str) -> Poly:
        return self.gen(z_name(e))

    def loop_relation(self, v: str, e: str) -> Poly:
        return h_poly(self.d, self.x(v), self.z(e) - self.x(v))

    def mixed_relation(self, v: str, w: str, e: str) -> Poly:
        return (self.x(v) - self.x(w)) * (self.z(e) - self.x(v) - self.x(w))

    def relations(self) -> list[Poly]:
        """Generators of the defining ideal, in a fixed order."""
        g, d = self.graph, self.d
        rels = [self.x(v) ** (d + 1) for v in g.vertices]
        for v in g.vertices:
            rels += [self.loop_relation(v, e) for e in g.incident(v)]
        for e in g.edge_ids:
            u, w = g.edges[e]
            if u != w:
                rels.append(self.mixed_relation(u, w, e))
        return rels

    def y(self, e: str, v: str) -> Poly:
        """The bundle generator ``y_{e,v} = z_e - x_v``."""
        if e not in self.graph.incident(v):
            raise PicspaceError(f"edge {e!r} is not incident to {v!r}")
        return self.z(e) - self.x(v)

    # -- normal forms ---------------------------------------------------------

    def _power(self, i: int, a: int) -> dict:
        # t_i^a rewritten by step i only: t_i-degree < k_i, lower generators free
        table = self._powers[i]
        k = self.bounds[i]
        if a < k:
            return {tuple(a if j == i else 0 for j in range(len(self.vars))): 1}
        if a not in table:
            if a == k:
                table[a] = dict(self._tails[i])
            else:
                out: dict = {}
                for m, c in self._power(i, a - 1).items():
                    if m[i] + 1 < k:
                        _add_into(out, m[:i] + (m[i] + 1,) + m[i + 1:], c)
                    else:
                        rest = m[:i] + (0,) + m[i + 1:]
                        for tm, tc in self._tails[i].items():
                            _add_into(out, tuple(p + s for p, s in zip(rest, tm)), c * tc)
                table[a] = out
        return table[a]

    def _normal_terms(self, terms: dict) -> dict:
        for i in reversed(range(len(self.vars))):
            k = self.bounds[i]
            if all(m[i] < k for m in terms):
                continue
            out: dict = {}
            for m, c in terms.items():
                if m[i] < k:
                    _add_into(out, m, c)
                    continue
                rest = m[:i] + (0,) + m[i + 1:]
                for pm, pc in self._power(i, m[i]).items():
                    _add_into(out, tuple(p + s for p, s in zip(rest, pm)), c * pc)
            terms = out
        return terms

    def reduce(self, p) -> "CohomologyClass":
        """Normal form of ``p`` (a Poly over any subset of the generators, or an int)."""
        if isinstance(p, CohomologyClass):
            if p.ring is not self:
                raise PicspaceError("class belongs to a different ring")
            return p
        if isinstance(p, int):
            p = Poly.const(p, self.vars)
        if p.vars != self.vars:
            foreign = p.used_vars() - set(self.vars)
            if foreign:
                raise PicspaceError(f"foreign generators {sorted(foreign)}")
            p = p.embed(self.vars)
        return CohomologyClass(self, Poly._raw(self.vars, self._normal_terms(p.terms)))

    # -- basis and grading ----------------------------------------------------

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors of the normal-form monomials, by degree then lex."""
        monos = product(*(range(k) for k in self.bounds))
        return tuple(sorted(monos, key=lambda m: (sum(m), m)))

    @property
    def top_degree(self) -> int:
        return sum(k - 1 for k in self.bounds)

    @property
    def top_monomial(self) -> tuple[int, ...]:
        return tuple(k - 1 for k in self.bounds)

    def graded_ranks(self) -> list[int]:
        ranks = [0] * (self.top_degree + 1)
        for m in self.basis:
            ranks[sum(m)] += 1
        return ranks

    def point_class(self) -> "CohomologyClass":
        """Class of a point: product of ``x_v^d`` times ``h_(d-1)(x_v, z_e - x_v)`` per loop."""
        d = self.d
        p = Poly.one(self.vars)
        for v in self.graph.vertices:
            p = p * self.x(v) ** d
            for e in self.graph.incident(v):
                if self.graph.is_loop(e):
                    p = p * h_poly(d - 1, self.x(v), self.y(e, v))
        return self.reduce(p)

    def monomial_text(self, m) -> str:
        return str(Poly._raw(self.vars, {tuple(m): 1}))

    def to_json_obj(self) -> dict:
        return {
            "d": self.d,
            "graph": {
                "vertices": list(self.graph.vertices),
                "edges": [[e, u, w] for e, (u, w) in sorted(self.graph.edges.items())],
            },
            "generators": list(self.vars),
            "relations": [str(r) for r in self.relations()],
            "pruning_order": [list(s) for s in self.pruning_order],
            "basis": [self.monomial_text(m) for m in self.basis],
            "graded_ranks": self.graded_ranks(),
            "point_class": str(self.point_class()),
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)


def build_ring(g: Multigraph, d: int) -> OrchardRing:
    return OrchardRing(g, d)


class CohomologyClass:
    """A reduced element of an :class:`OrchardRing`."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: OrchardRing, poly: Poly):
        self.ring = ring
        self.poly = poly

    def _other(self, other):
        if isinstance(other, CohomologyClass):
            if other.ring is not self.ring:
                raise PicspaceError("classes belong to different rings")
            return other.poly
        if isinstance(other, (int, Poly)):
            return self.ring.reduce(other).poly
        return None

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else CohomologyClass(self.ring, self.poly + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else CohomologyClass(self.ring, self.poly - o)

    def __neg__(self):
        return CohomologyClass(self.ring, -self.poly)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self.ring.reduce(self.poly * o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.reduce(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._other(other)
        return NotImplemented if o is None else self.poly == o

    def __hash__(self):
        return hash(self.poly)

    def __bool__(self):
        return bool(self.poly)

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"CohomologyClass({self.poly})"

    def top_coefficient(self) -> int:
        """Coefficient on the unique top-degree basis monomial."""
        return self.poly.coefficient(self.ring.top_monomial)

    def homogeneous_part(self, k: int) -> "CohomologyClass":
        return CohomologyClass(self.ring, self.poly.homogeneous_part(k))
