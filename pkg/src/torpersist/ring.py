"""Positively graded quotients ``R = k[x_1..x_n] / I`` as computable objects."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from . import linalg
from .field import Field
from .groebner import buchberger, lead_term_ideal, normal_form
from .polynomials import Polynomial, PolyRing, divides
from .series import LaurentPoly, RationalSeries, hilbert_numerator, normalize_rational


class UnsupportedError(ValueError):
    """Operation implemented only for Artinian rings/modules."""


@dataclass
class GradedVectorSpace:
    """Per-degree bases (rows are coordinate vectors in an ambient basis)."""

    bases: dict

    @property
    def dims(self) -> dict:
        return {d: len(b) for d, b in self.bases.items() if len(b)}

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def hilbert(self) -> LaurentPoly:
        return LaurentPoly(self.dims)


class RingPresentation:
    """``R = k[vars] / (relations)`` with a weighted grading.

    Degreewise bases are the standard monomials of the reduced Groebner basis
    (largest first in degrevlex); ring arithmetic is normal form followed by
    expansion in that basis.
    """

    def __init__(self, field: Field, variables, weights=None, relations=()):
        self.field = field
        self.poly_ring = PolyRing(field, variables, weights)
        rels = [self.poly_ring.parse(r) for r in relations]
        for r in rels:
            if not r.is_homogeneous():
                raise ValueError(f"relation {r} is not homogeneous")
            if r and r.degree() < 1:
                raise ValueError(f"relation {r} has degree 0")
        self.relations = tuple(r for r in rels if r)
        self.gb = buchberger(self.relations, self.poly_ring)
        self.lead_monomials = tuple(lead_term_ideal(self.gb))
        self._basis = {}
        self._index = {}
        self._struct = {}
        self._mult = {}

    # -- identity / io ----------------------------------------------------------

    @property
    def names(self):
        return self.poly_ring.names

    @property
    def weights(self):
        return self.poly_ring.weights

    @property
    def nvars(self):
        return self.poly_ring.nvars

    def __repr__(self):
        rels = ", ".join(map(str, self.relations))
        return f"{self.field}[{','.join(self.names)}]/({rels})"

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "vars": [{"name": n, "weight": w} for n, w in zip(self.names, self.weights)],
            "relations": [str(r) for r in self.relations],
        }

    @classmethod
    def from_json(cls, data: dict, field: Field | None = None) -> "RingPresentation":
        if field is None:
            fdata = data.get("field")
            if fdata is None:
                fdata = {"kind": "prime", "p": data.get("characteristic", 101)}
            field = Field.from_json(fdata)
        names, weights = [], []
        for v in data["vars"]:
            if isinstance(v, str):
                names.append(v)
                weights.append(1)
            else:
                names.append(v["name"])
                weights.append(int(v.get("weight", 1)))
        return cls(field, names, weights, data.get("relations", []))

    def with_field(self, field: Field) -> "RingPresentation":
        """Same presentation (relation strings re-read) over another field."""
        return RingPresentation.from_json(self.to_json(), field=field)

    # -- Artinian data ----------------------------------------------------------

    @cached_property
    def is_artinian(self) -> bool:
        pure = set()
        for m in self.lead_monomials:
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                pure.add(nz[0])
        return len(pure) == self.nvars

    def require_artinian(self, what="this operation"):
        if not self.is_artinian:
            raise UnsupportedError(f"{what} requires an Artinian ring")

    @cached_property
    def top_degree(self):
        """Largest ``s`` with ``R_s != 0`` (``None`` when not Artinian)."""
        if not self.is_artinian:
            return None
        bounds = [0] * self.nvars
        for m in self.lead_monomials:
            nz = [i for i, e in enumerate(m) if e]
            if len(nz) == 1:
                bounds[nz[0]] = m[nz[0]] - 1
        s = sum(b * w for b, w in zip(bounds, self.weights))
        while s > 0 and self.dim(s) == 0:
            s -= 1
        return s

    @property
    def max_weight(self) -> int:
        return max(self.weights, default=1)

    def degrees(self):
        self.require_artinian("listing degrees")
        return range(0, self.top_degree + 1)

    @cached_property
    def length(self) -> int:
        self.require_artinian("length")
        return sum(self.dim(d) for d in self.degrees())

    def power_of_maximal_ideal_vanishes(self, k: int) -> bool:
        """Whether ``m^k = 0``: every monomial with exponent sum ``k`` lies in ``I``."""
        for mono in _exponent_vectors(self.nvars, k):
            if normal_form(self.poly_ring.monomial(mono), self.gb):
                return False
        return True

    # -- bases and arithmetic -----------------------------------------------------

    def basis(self, d: int) -> tuple:
        """Standard monomials of weighted degree ``d``, largest first."""
        b = self._basis.get(d)
        if b is None:
            b = tuple(
                m
                for m in self.poly_ring.monomials(d)
                if not any(divides(lm, m) for lm in self.lead_monomials)
            )
            self._basis[d] = b
            self._index[d] = {m: i for i, m in enumerate(b)}
        return b

    def dim(self, d: int) -> int:
        return len(self.basis(d)) if d >= 0 else 0

    def index(self, d: int) -> dict:
        self.basis(d)
        return self._index[d]

    def vector(self, f: Polynomial, d: int | None = None) -> np.ndarray:
        """Coordinates of the homogeneous polynomial ``f`` in ``basis(d)``."""
        if d is None:
            if not f:
                raise ValueError("degree required for the zero element")
            d = f.degree()
        nf = normal_form(f, self.gb)
        if nf and nf.degree() != d or (f and not f.is_homogeneous()):
            raise ValueError(f"{f} is not homogeneous of degree {d}")
        vec = self.field.zeros(self.dim(d))
        idx = self.index(d)
        for m, c in nf.terms.items():
            vec[idx[m]] = c
        return vec

    def element(self, text, d: int | None = None):
        """Parse a homogeneous element; returns ``(degree, vector)``."""
        f = self.poly_ring.parse(text)
        if f and d is None:
            d = f.degree()
        if d is None:
            raise ValueError("degree required for the zero element")
        return d, self.vector(f, d)

    def to_poly(self, d: int, vec) -> Polynomial:
        terms = {m: c for m, c in zip(self.basis(d), vec) if c != 0}
        return Polynomial(self.poly_ring, {m: self.field(c) for m, c in terms.items()})

    def structure(self, e: int, d: int) -> np.ndarray:
        """``T[a, b]`` = coordinates of ``basis(e)[a] * basis(d)[b]`` in ``basis(e + d)``."""
        key = (e, d)
        T = self._struct.get(key)
        if T is None:
            if e > d:
                T = np.ascontiguousarray(self.structure(d, e).transpose(1, 0, 2))
            else:
                be, bd = self.basis(e), self.basis(d)
                n = self.dim(e + d)
                T = self.field.zeros((len(be), len(bd), n))
                idx = self.index(e + d)
                for a, m1 in enumerate(be):
                    for b, m2 in enumerate(bd):
                        prod = tuple(x + y for x, y in zip(m1, m2))
                        if prod in idx:
                            T[a, b, idx[prod]] = self.field.one
                        else:
                            nf = normal_form(self.poly_ring.monomial(prod), self.gb)
                            for m, c in nf.terms.items():
                                T[a, b, idx[m]] = c
            self._struct[key] = T
        return T

    def mult_matrix(self, vec, e: int, d: int) -> np.ndarray:
        """Matrix of multiplication by the degree-``e`` element ``vec``: ``R_d -> R_{d+e}``."""
        key = (e, d, vec.tobytes() if vec.dtype != object else tuple(vec))
        M = self._mult.get(key)
        if M is None:
            T = self.structure(e, d)
            if T.size == 0:
                M = self.field.zeros((self.dim(e + d), self.dim(d)))
            elif self.field.characteristic:
                M = np.tensordot(vec, T, axes=(0, 0)).T % self.field.characteristic
            else:
                M = np.tensordot(vec, T, axes=(0, 0)).T
            M = np.ascontiguousarray(M)
            self._mult[key] = M
        return M

    def multiply(self, a, e: int, b, f: int) -> np.ndarray:
        T = self.structure(e, f)
        if T.size == 0:
            return self.field.zeros(self.dim(e + f))
        out = np.tensordot(np.tensordot(a, T, axes=(0, 0)), b, axes=(0, 0))
        return self.field.reduce(out)

    def variable_vector(self, i: int):
        w = self.weights[i]
        return w, self.vector(self.poly_ring.var(i), w)

    def variable_matrix(self, i: int, d: int) -> np.ndarray:
        w, v = self.variable_vector(i)
        return self.mult_matrix(v, w, d)

    # -- Hilbert data ---------------------------------------------------------------

    @cached_property
    def _hilbert(self) -> RationalSeries:
        num = hilbert_numerator(self.lead_monomials, self.weights)
        return normalize_rational(num, self.weights)

    def hilbert_series(self, cutoff: int = 10) -> RationalSeries:
        H = self._hilbert
        return RationalSeries(H.numerator, H.denominator, cutoff)

    @property
    def canonical_denominator(self) -> tuple:
        """The fixed multiset ``{a_i}`` used for every multiplicity polynomial over this ring."""
        return self._hilbert.denominator

    @cached_property
    def krull_dim(self) -> int:
        """Largest set of variables independent modulo the initial ideal."""
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in self.lead_monomials]
        for k in range(self.nvars, -1, -1):
            for U in combinations(range(self.nvars), k):
                U = frozenset(U)
                if not any(s <= U for s in supports):
                    return k
        return 0

    def hilbert_polynomial(self) -> LaurentPoly:
        """Hilbert series of an Artinian ring as a polynomial."""
        self.require_artinian("Hilbert polynomial")
        return LaurentPoly({d: self.dim(d) for d in self.degrees()})

    @cached_property
    def mu_maximal_ideal(self) -> int:
        """``dim_k m/m^2``."""
        total = 0
        top = self.top_degree if self.is_artinian else max(self.weights, default=0) * 2
        for d in range(1, (top or 0) + 1):
            n = self.dim(d)
            if n == 0:
                continue
            rows = []
            for i, w in enumerate(self.weights):
                if d - w >= 1 and self.dim(d - w):
                    rows.append(self.variable_matrix(i, d - w).T)
            r = linalg.rank(np.concatenate(rows, axis=0), self.field) if rows else 0
            total += n - r
        return total

    def embedding_codim(self) -> int:
        return self.mu_maximal_ideal - self.krull_dim

    # -- socle and canonical module -----------------------------------------------

    def socle(self) -> GradedVectorSpace:
        """``{r : m r = 0}`` degree by degree (rows are coordinates in ``basis(d)``)."""
        self.require_artinian("socle")
        bases = {}
        for d in self.degrees():
            n = self.dim(d)
            blocks = [self.variable_matrix(i, d) for i in range(self.nvars)]
            blocks = [b for b in blocks if b.shape[0]]
            if blocks:
                bases[d] = linalg.nullspace(np.concatenate(blocks, axis=0), self.field)
            else:
                bases[d] = self.field.eye(n)
        return GradedVectorSpace(bases)

    @cached_property
    def type(self) -> int:
        """``r(R) = dim_k Soc(R)``."""
        return self.socle().total_dim

    @property
    def is_gorenstein(self) -> bool:
        return self.is_artinian and self.type == 1

    def canonical_module(self):
        """``omega = Hom_k(R, k)`` placed in degrees ``0..s``: ``omega_j = (R_{s-j})^*``."""
        from .modules import StructuredModule

        self.require_artinian("canonical module")
        s = self.top_degree
        dims = {j: self.dim(s - j) for j in range(0, s + 1) if self.dim(s - j)}
        actions = {}
        for i, w in enumerate(self.weights):
            for j in dims:
                if j + w in dims:
                    # (x f)(u) = f(x u) for u in R_{s-j-w}
                    actions[(i, j)] = np.ascontiguousarray(self.variable_matrix(i, s - j - w).T)
        return StructuredModule(self, dims, actions)


def _exponent_vectors(n: int, k: int):
    if n == 0:
        if k == 0:
            yield ()
        return
    for e in range(k, -1, -1):
        for rest in _exponent_vectors(n - 1, k - e):
            yield (e,) + rest


def standard_ring(field: Field, variables, relations, weights=None) -> RingPresentation:
    return RingPresentation(field, list(variables), weights, relations)
