"""Sparse polynomials with arbitrary-precision integer coefficients.

A :class:`Poly` carries its ordered tuple of generator names and a dict
mapping exponent tuples to nonzero Python ints. Binary operations require
both operands to share the same generator tuple; use :meth:`Poly.embed` to
move a polynomial into a larger ring.

Monomials are compared in graded lexicographic order, the first generator
being the most significant.
"""

from __future__ import annotations

import json
import numbers
from typing import Iterable, Mapping

from .errors import InexactDivision

__all__ = [
    "Poly",
    "exact_div",
    "h_poly",
    "q_analogue",
    "Q_VARS",
]

Q_VARS = ("q",)


def _order_key(mono):
    return (sum(mono), mono)


def _add_into(terms, mono, c):
    c = terms.get(mono, 0) + c
    if c:
        terms[mono] = c
    else:
        terms.pop(mono, None)


class Poly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Iterable[str], terms: Mapping | None = None):
        self.vars = tuple(vars)
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"repeated generator in {self.vars}")
        n = len(self.vars)
        clean: dict[tuple[int, ...], int] = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(a) for a in mono)
            if len(mono) != n or any(a < 0 for a in mono):
                raise ValueError(f"bad exponent vector {mono} for {self.vars}")
            if not isinstance(c, numbers.Integral):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            _add_into(clean, mono, int(c))
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms):
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, vars=Q_VARS):
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, c: int, vars=Q_VARS):
        vars = tuple(vars)
        return cls._raw(vars, {(0,) * len(vars): int(c)} if c else {})

    @classmethod
    def one(cls, vars=Q_VARS):
        return cls.const(1, vars)

    @classmethod
    def gen(cls, name: str, vars=Q_VARS):
        vars = tuple(vars)
        mono = tuple(1 if v == name else 0 for v in vars)
        if sum(mono) != 1:
            raise ValueError(f"{name!r} is not a generator of {vars}")
        return cls._raw(vars, {mono: 1})

    @classmethod
    def gens(cls, vars):
        vars = tuple(vars)
        return [cls.gen(v, vars) for v in vars]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "q"):
        """Univariate polynomial from coefficients, constant term first."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)})

    # -- basic protocol ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, numbers.Integral):
            return self.terms == ({(0,) * len(self.vars): int(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self.vars!r}, {self})"

    def __str__(self):
        return self.to_text()

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"generator mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, numbers.Integral):
            return Poly.const(int(other), self.vars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(terms, m, c)
        return Poly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_into(terms, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return Poly._raw(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, numbers.Integral) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return exact_div(self, other)

    # -- inspection -------------------------------------------------------

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(m) for m in self.terms)
        i = self.vars.index(var)
        return max(m[i] for m in self.terms)

    def leading_term(self):
        """``(monomial, coefficient)`` maximal in graded lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=_order_key)
        return m, self.terms[m]

    def used_vars(self) -> set[str]:
        return {v for i, v in enumerate(self.vars) if any(m[i] for m in self.terms)}

    def coeffs(self) -> list[int]:
        """Dense coefficient list of a univariate polynomial, constant first."""
        if len(self.vars) != 1:
            raise ValueError("coeffs() needs a univariate polynomial")
        out = [0] * (self.degree() + 1)
        for (a,), c in self.terms.items():
            out[a] = c
        return out

    def coefficient(self, mono) -> int:
        return self.terms.get(tuple(mono), 0)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, k: int) -> Poly:
        return Poly._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) == k})

    def is_monic_of_degree(self, d: int) -> bool:
        if len(self.vars) != 1 or not self.terms:
            return False
        return self.degree() == d and self.terms[(d,)] == 1

    def is_palindromic(self) -> bool:
        cs = self.coeffs()
        return cs == cs[::-1]

    # -- evaluation and substitution ---------------------------------------

    def evaluate(self, values: Mapping[str, int] | None = None, **kw) -> int:
        """Exact integer value at an integer point."""
        values = dict(values or {}, **kw)
        missing = [v for v in self.vars if v not in values]
        if missing:
            raise KeyError(f"no value for {missing}")
        point = [int(values[v]) for v in self.vars]
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, a in zip(point, m):
                if a:
                    t *= x**a
            total += t
        return total

    def substitute(self, bindings: Mapping[str, "Poly"]) -> Poly:
        """Compose: replace every generator by a polynomial of a common ring."""
        missing = [v for v in self.vars if v not in bindings]
        if missing:
            raise KeyError(f"no binding for {missing}")
        images = [bindings[v] for v in self.vars]
        target = None
        for img in images:
            if isinstance(img, Poly):
                target = img.vars
                break
        if target is None:
            raise ValueError("at least one binding must be a Poly")
        images = [img if isinstance(img, Poly) else Poly.const(img, target) for img in images]
        for img in images:
            if img.vars != target:
                raise ValueError("bindings live in different rings")
        powers: list[dict[int, Poly]] = [{0: Poly.one(target)} for _ in images]

        def power(i, a):
            cache = powers[i]
            if a not in cache:
                cache[a] = power(i, a - 1) * images[i]
            return cache[a]

        out = Poly.zero(target)
        for m, c in self.terms.items():
            t = Poly.const(c, target)
            for i, a in enumerate(m):
                if a:
                    t = t * power(i, a)
            out = out + t
        return out

    def embed(self, vars: Iterable[str]) -> Poly:
        """Same polynomial viewed in a ring with generators ``vars``."""
        vars = tuple(vars)
        index = {v: i for i, v in enumerate(vars)}
        lost = self.used_vars() - set(index)
        if lost:
            raise ValueError(f"generators {sorted(lost)} not in target ring")
        pos = [index.get(v) for v in self.vars]
        terms = {}
        for m, c in self.terms.items():
            new = [0] * len(vars)
            for p, a in zip(pos, m):
                if a:
                    new[p] = a
            terms[tuple(new)] = c
        return Poly._raw(vars, terms)

    def swap(self, a: str, b: str) -> Poly:
        """Exchange two generators."""
        i, j = self.vars.index(a), self.vars.index(b)
        terms = {}
        for m, c in self.terms.items():
            m = list(m)
            m[i], m[j] = m[j], m[i]
            terms[tuple(m)] = c
        return Poly._raw(self.vars, terms)

    # -- rendering --------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded lex order."""
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [v if a == 1 else f"{v}^{a}" for v, a in zip(self.vars, m) if a]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[list(m), str(c)] for m, c in self.sorted_terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> Poly:
        return cls(obj["vars"], {tuple(m): int(c) for m, c in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> Poly:
        return cls.from_json_obj(json.loads(text))


def exact_div(num: Poly, den: Poly) -> Poly:
    """Quotient ``num / den``; raises :class:`InexactDivision` on a remainder.

    Leading-term elimination in graded lex order. If ``den`` divides ``num``
    the leading term of ``num`` is always the product of the leading terms,
    so the first failed step proves the division is inexact.
    """
    if num.vars != den.vars:
        raise ValueError(f"generator mismatch: {num.vars} vs {den.vars}")
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    lm, lc = den.leading_term()
    den_terms = list(den.terms.items())
    rem = dict(num.terms)
    quot: dict = {}
    while rem:
        m = max(rem, key=_order_key)
        c = rem[m]
        shift = tuple(a - b for a, b in zip(m, lm))
        qc, r = divmod(c, lc)
        if r or any(s < 0 for s in shift):
            raise InexactDivision(f"{den} does not divide {num}")
        quot[shift] = qc
        for dm, dc in den_terms:
            _add_into(rem, tuple(a + b for a, b in zip(shift, dm)), -qc * dc)
    return Poly._raw(num.vars, quot)


def q_analogue(d: int, var: str = "q") -> Poly:
    """``1 + q + ... + q^(d-1)``; zero for ``d == 0``."""
    if d < 0:
        raise ValueError(f"q-analogue needs d >= 0, got {d}")
    return Poly._raw((var,), {(i,): 1 for i in range(d)})


def h_poly(d: int, a: Poly, b: Poly) -> Poly:
    """Complete homogeneous sum ``a^d + a^(d-1) b + ... + b^d``."""
    if d < 0:
        raise ValueError(f"h_poly needs d >= 0, got {d}")
    if a.vars != b.vars:
        raise ValueError("h_poly arguments must share generators")
    a_pows = [Poly.one(a.vars)]
    b_pows = [Poly.one(a.vars)]
    for _ in range(d):
        a_pows.append(a_pows[-1] * a)
        b_pows.append(b_pows[-1] * b)
    out = Poly.zero(a.vars)
    for i in range(d + 1):
        out = out + a_pows[i] * b_pows[d - i]
    return out
