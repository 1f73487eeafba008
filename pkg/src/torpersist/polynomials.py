"""Graded multivariate polynomials over an exact field.

Monomials are exponent tuples; the only monomial order is weighted
degree-reverse-lexicographic.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product as _product

from .field import Field


class StructuralError(ValueError):
    """Polynomials from different rings were combined."""


class PolyRing:
    """``k[x_1..x_n]`` with positive integer weights."""

    def __init__(self, field: Field, names, weights=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        weights = tuple(int(w) for w in (weights if weights is not None else [1] * len(names)))
        if len(weights) != len(names):
            raise ValueError("one weight per variable")
        if any(w < 1 for w in weights):
            raise ValueError("weights must be positive integers")
        self.field = field
        self.names = names
        self.weights = weights
        self.nvars = len(names)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.field, self.names, self.weights))

    def __repr__(self):
        w = "" if all(x == 1 for x in self.weights) else f", weights={list(self.weights)}"
        return f"PolyRing({self.field}, {list(self.names)}{w})"

    # -- monomials ------------------------------------------------------------

    def degree(self, mono) -> int:
        return sum(e * w for e, w in zip(mono, self.weights))

    def order_key(self, mono):
        """Sort key: larger key = larger monomial in weighted degrevlex."""
        return (self.degree(mono), tuple(-e for e in reversed(mono)))

    def monomials(self, d: int) -> list:
        """All monomials of weighted degree ``d``, largest first."""
        if d < 0:
            return []
        out = []

        def rec(i, left, acc):
            if i == self.nvars - 1:
                if left % self.weights[i] == 0:
                    out.append(tuple(acc + [left // self.weights[i]]))
                return
            for e in range(left // self.weights[i], -1, -1):
                rec(i + 1, left - e * self.weights[i], acc + [e])

        if self.nvars == 0:
            return [()] if d == 0 else []
        rec(0, d, [])
        out.sort(key=self.order_key, reverse=True)
        return out

    def one_mono(self):
        return (0,) * self.nvars

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.names.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    @cached_property
    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {self.one_mono(): c} if c != 0 else {})

    def monomial(self, mono, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(mono): c} if c != 0 else {})

    def mono_str(self, mono) -> str:
        parts = []
        for name, e in zip(self.names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text) -> "Polynomial":
        """Parse ``'3*x^2*y - y^3'``-style text (integers and rationals as coefficients)."""
        if isinstance(text, Polynomial):
            return text
        if isinstance(text, (int,)):
            return self.constant(text)
        import sympy
        from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

        syms = {n: sympy.Symbol(n) for n in self.names}
        try:
            expr = parse_expr(
                str(text),
                local_dict=syms,
                transformations=standard_transformations + (convert_xor,),
                evaluate=True,
            )
        except Exception as exc:  # sympy raises a zoo of types
            raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from None
        extra = expr.free_symbols - set(syms.values())
        if extra:
            raise StructuralError(f"unknown variables {sorted(map(str, extra))} in {text!r}")
        if self.nvars == 0:
            return self.constant(_to_fraction(expr))
        poly = sympy.Poly(expr, *[syms[n] for n in self.names], domain="QQ")
        terms = {}
        for mono, c in poly.terms():
            v = self.field(_to_fraction(c))
            if v != 0:
                terms[tuple(int(e) for e in mono)] = v
        return Polynomial(self, terms)


def _to_fraction(c):
    from fractions import Fraction

    import sympy

    c = sympy.Rational(c)
    return Fraction(int(c.p), int(c.q))


class Polynomial:
    """Immutable polynomial: a mapping monomial -> nonzero field scalar."""

    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- structure ------------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        elif other.ring != self.ring:
            raise StructuralError("polynomials over different rings")
        return other

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead_monomial(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no lead term")
            self._lead = max(self.terms, key=self.ring.order_key)
        return self._lead

    def lead_coeff(self):
        return self.terms[self.lead_monomial()]

    def degrees(self) -> set:
        return {self.ring.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Weighted degree (maximum over terms); -1 for zero."""
        return max(self.degrees(), default=-1)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self.ring.order_key(t[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        f = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = f.add(out.get(m, f.zero), c)
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {m: f.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono, c) -> "Polynomial":
        f = self.ring.field
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): f.mul(v, c) for m, v in self.terms.items()},
        )

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        f = self.ring.field
        out = {}
        for (m1, c1), (m2, c2) in _product(self.terms.items(), other.terms.items()):
            m = tuple(a + b for a, b in zip(m1, m2))
            v = f.add(out.get(m, f.zero), f.mul(c1, c2))
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = self.ring.one()
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "Polynomial":
        return self.scale(self.ring.field.inv(self.lead_coeff()))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) or hasattr(other, "denominator"):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            if f.characteristic and c > f.characteristic // 2:
                sign, mag = "-", f.characteristic - c
            elif not f.characteristic and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            ms = self.ring.mono_str(m)
            if ms == "1":
                body = str(mag)
            elif mag == 1:
                body = ms
            else:
                body = f"{mag}*{ms}"
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    __repr__ = __str__


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def quotient_mono(b, a):
    return tuple(y - x for x, y in zip(a, b))
