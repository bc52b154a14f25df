"""Permutations, divided differences, Schubert polynomials and orchard
intersection numbers.

Schubert polynomials follow the usual convention: ``S_w0`` is the staircase
monomial ``xi_1^(n-1) xi_2^(n-2) ... xi_(n-1)`` and ``S_w = del_i S_(w s_i)``
whenever ``w(i) < w(i+1)``.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import GraphParseError, PermutationError, PicspaceError
from .orchard import CohomologyClass, OrchardRing
from .polyring import Poly, exact_div

__all__ = [
    "Permutation",
    "divided_difference",
    "intersection_number",
    "is_relevant",
    "load_conditions",
    "pullback_class",
    "schubert_polynomial",
    "xi_vars",
]


def xi_vars(n: int) -> tuple[str, ...]:
    return tuple(f"xi{i}" for i in range(1, n + 1))


class Permutation:
    """A permutation of ``{1..n}`` in one-line notation (1-indexed)."""

    __slots__ = ("word",)

    def __init__(self, word: Iterable[int]):
        word = tuple(int(a) for a in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise PermutationError(f"{word} is not a permutation of 1..{len(word)}")
        self.word = word

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(range(n, 0, -1))

    @classmethod
    def transposition(cls, n: int, i: int) -> Permutation:
        """The simple transposition ``s_i`` swapping ``i`` and ``i+1``."""
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __getitem__(self, i: int) -> int:
        """``w(i)`` for 1-based ``i``."""
        return self.word[i - 1]

    def length(self) -> int:
        w = self.word
        return sum(w[i] > w[j] for i in range(len(w)) for j in range(i + 1, len(w)))

    def ascents(self) -> list[int]:
        return [i for i in range(1, self.n) if self[i] < self[i + 1]]

    def descents(self) -> list[int]:
        return [i for i in range(1, self.n) if self[i] > self[i + 1]]

    def swap_positions(self, i: int) -> Permutation:
        """``w s_i``: exchange the entries in positions ``i`` and ``i+1``."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(w)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.word == other.word

    def __hash__(self):
        return hash(self.word)

    def __repr__(self):
        return f"Permutation({list(self.word)})"

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return sep.join(map(str, self.word))


def divided_difference(i: int, f: Poly) -> Poly:
    """``(f - s_i f) / (xi_i - xi_(i+1))`` for generators ``xi1..xin`` of ``f``."""
    if not 1 <= i < len(f.vars):
        raise ValueError(f"divided difference index {i} out of range for {f.vars}")
    a, b = f.vars[i - 1], f.vars[i]
    num = f - f.swap(a, b)
    return exact_div(num, Poly.gen(a, f.vars) - Poly.gen(b, f.vars))


def _staircase(n: int) -> Poly:
    return Poly(xi_vars(n), {tuple(n - 1 - j for j in range(n)): 1})


@lru_cache(maxsize=None)
def _schubert_word(word: tuple[int, ...]) -> Poly:
    w = Permutation(word)
    asc = w.ascents()
    if not asc:
        return _staircase(w.n)
    i = asc[0]
    return divided_difference(i, _schubert_word(w.swap_positions(i).word))


def schubert_polynomial(w: Permutation | Sequence[int], rng: random.Random | None = None) -> Poly:
    """``S_w`` over generators ``xi1..xin``; ``xi_n`` never occurs.

    By default the ascent chain up to ``w0`` always takes the first ascent
    and results are cached. With ``rng`` a random ascent is chosen at every
    step and nothing is cached, which exercises word independence.
    """
    w = w if isinstance(w, Permutation) else Permutation(w)
    if rng is None:
        return _schubert_word(w.word)
    chain = []
    while w.ascents():
        i = rng.choice(w.ascents())
        chain.append(i)
        w = w.swap_positions(i)
    f = _staircase(w.n)
    for i in reversed(chain):
        f = divided_difference(i, f)
    return f


def is_relevant(w: Permutation) -> bool:
    """No descent at positions >= 3, i.e. ``w(3) < w(4) < ... < w(n)``.

    Exactly these permutations have Schubert polynomials in ``xi1, xi2``
    alone, the classes pulled back from the partial flag variety of a
    point on a line.
    """
    return all(d < 3 for d in w.descents())


def pullback_class(ring: OrchardRing, v: str, e: str, w: Permutation | Sequence[int]) -> CohomologyClass:
    """``S_w(x_v, z_e - x_v)``: the pullback of a Schubert class along ``P -> (P(v), P(e))``."""
    w = w if isinstance(w, Permutation) else Permutation(w)
    if w.n != ring.d + 1:
        raise PermutationError(f"need a permutation in S_{ring.d + 1}, got {w}")
    if not is_relevant(w):
        raise PermutationError(f"{w} has a descent past position 2")
    S = schubert_polynomial(w)
    if S.used_vars() - {"xi1", "xi2"}:
        raise PicspaceError(f"S_{w} involves generators beyond xi1, xi2")
    y = ring.y(e, v)
    bindings = {name: Poly.zero(ring.vars) for name in S.vars}
    bindings.update(xi1=ring.x(v), xi2=y)
    return ring.reduce(S.substitute(bindings))


def intersection_number(ring: OrchardRing, classes: Iterable) -> int:
    """Multiple of the point class in the top-degree part of the product.

    Assumes the represented subvarieties meet transversely; a product with
    no top-degree part gives 0.
    """
    prod = ring.reduce(1)
    for c in classes:
        if isinstance(c, CohomologyClass) and c.ring is not ring:
            raise PicspaceError("class belongs to a different ring")
        prod = prod * c
    unit = ring.point_class().top_coefficient()
    lam, r = divmod(prod.top_coefficient(), unit)
    if r:
        raise PicspaceError("top-degree part is not an integer multiple of the point class")
    return lam


def load_conditions(text: str) -> list[tuple[str, str, Permutation]]:
    """Parse a conditions file: a JSON list of ``{vertex, edge, permutation}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"conditions file is not JSON: {exc}") from exc
    if not isinstance(data, list):
        raise GraphParseError("conditions file must hold a JSON list")
    out = []
    for k, item in enumerate(data):
        try:
            v, e, word = str(item["vertex"]), str(item["edge"]), item["permutation"]
        except (TypeError, KeyError) as exc:
            raise GraphParseError(f"condition {k}: missing field {exc}") from exc
        if not isinstance(word, list) or not all(isinstance(a, int) for a in word):
            raise GraphParseError(f"condition {k}: permutation must be a list of integers")
        out.append((v, e, Permutation(word)))
    return out
