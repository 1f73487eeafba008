"""Graded free modules, homogeneous matrices, presented modules and minimal resolutions.

Everything here is degreewise linear algebra over ``k``: for an Artinian ring
each graded piece is finite dimensional, so kernels, images and minimal
generators are computed one internal degree at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg
from .ring import RingPresentation
from .series import LaurentPoly


class FreeModule:
    """``F = sum_u R(-a_u)``; ``twists`` lists the ``a_u``."""

    def __init__(self, ring: RingPresentation, twists):
        self.ring = ring
        self.twists = tuple(int(a) for a in twists)
        self._blocks = {}

    @property
    def rank(self) -> int:
        return len(self.twists)

    def __repr__(self):
        return f"FreeModule({list(self.twists)})"

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring is other.ring and self.twists == other.twists

    def __hash__(self):
        return hash(self.twists)

    def blocks(self, d: int):
        """``[(u, offset, size)]`` for the nonzero summands of ``F_d``."""
        b = self._blocks.get(d)
        if b is None:
            b, off = [], 0
            for u, a in enumerate(self.twists):
                n = self.ring.dim(d - a)
                if n:
                    b.append((u, off, n))
                    off += n
            self._blocks[d] = b
        return b

    def dim(self, d: int) -> int:
        b = self.blocks(d)
        return b[-1][1] + b[-1][2] if b else 0

    def offsets(self, d: int) -> dict:
        return {u: (off, n) for u, off, n in self.blocks(d)}

    def degree_range(self):
        """Internal degrees where ``F`` can be nonzero (empty range for rank 0)."""
        if not self.twists:
            return range(0)
        self.ring.require_artinian("degreewise free-module computations")
        return range(min(self.twists), max(self.twists) + self.ring.top_degree + 1)

    def hilbert(self) -> LaurentPoly:
        H = self.ring.hilbert_polynomial()
        out = LaurentPoly()
        for a in self.twists:
            out = out + H.shift(a)
        return out

    def variable_action(self, i: int, d: int) -> np.ndarray:
        """Multiplication by ``x_i``: ``F_d -> F_{d+w_i}``."""
        w = self.ring.weights[i]
        out = self.ring.field.zeros((self.dim(d + w), self.dim(d)))
        tgt = self.offsets(d + w)
        for u, off, n in self.blocks(d):
            if u in tgt:
                toff, tn = tgt[u]
                out[toff : toff + tn, off : off + n] = self.ring.variable_matrix(i, d - self.twists[u])
        return out

    def split(self, d: int, vec) -> dict:
        """Blocks of a vector of ``F_d``: ``{u: coordinates in R_{d - a_u}}``."""
        return {u: vec[off : off + n] for u, off, n in self.blocks(d)}

    def generator(self, u: int) -> np.ndarray:
        """Coordinates of the basis element ``e_u`` in ``F_{a_u}``."""
        a = self.twists[u]
        vec = self.ring.field.zeros(self.dim(a))
        vec[self.offsets(a)[u][0]] = self.ring.field.one
        return vec


class GradedMatrix:
    """Homogeneous (degree-0) map ``source -> target`` of graded free modules.

    ``entries[(u, v)]`` holds coordinates of the ring element in row ``u``,
    column ``v``; its degree is forced to be ``b_v - a_u``.  Missing keys are
    zero.
    """

    def __init__(self, source: FreeModule, target: FreeModule, entries=None):
        self.source = source
        self.target = target
        self.ring = source.ring
        self.entries = {}
        for (u, v), vec in (entries or {}).items():
            vec = np.asarray(vec, dtype=self.ring.field.dtype)
            if len(vec) != self.ring.dim(self.entry_degree(u, v)):
                raise ValueError(f"entry ({u},{v}) has wrong length for degree {self.entry_degree(u, v)}")
            if np.any(vec != 0):
                self.entries[(u, v)] = vec
        self._at = {}

    @property
    def shape(self):
        return (self.target.rank, self.source.rank)

    def entry_degree(self, u: int, v: int) -> int:
        return self.source.twists[v] - self.target.twists[u]

    def entry(self, u, v):
        return self.entries.get((u, v))

    def entry_poly(self, u, v):
        vec = self.entries.get((u, v))
        if vec is None:
            return self.ring.poly_ring.zero()
        return self.ring.to_poly(self.entry_degree(u, v), vec)

    @classmethod
    def from_strings(cls, ring: RingPresentation, targets, sources, rows) -> "GradedMatrix":
        source, target = FreeModule(ring, sources), FreeModule(ring, targets)
        rows = list(rows)
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("entry grid must be len(targets) x len(sources)")
        entries = {}
        for u, row in enumerate(rows):
            for v, text in enumerate(row):
                f = ring.poly_ring.parse(text)
                if not f:
                    continue
                deg = sources[v] - targets[u]
                if deg < 0:
                    raise ValueError(f"entry ({u},{v}) = {f} must have degree {deg}")
                entries[(u, v)] = ring.vector(f, deg)
        return cls(source, target, entries)

    @classmethod
    def from_columns(cls, target: FreeModule, columns) -> "GradedMatrix":
        """Matrix whose columns are the given ``(degree, vector in target_degree)`` elements."""
        source = FreeModule(target.ring, [d for d, _ in columns])
        entries = {}
        for v, (d, vec) in enumerate(columns):
            for u, block in target.split(d, vec).items():
                if np.any(block != 0):
                    entries[(u, v)] = block
        return cls(source, target, entries)

    def to_strings(self):
        return [[str(self.entry_poly(u, v)) for v in range(self.source.rank)] for u in range(self.target.rank)]

    def to_json(self):
        return {"targets": list(self.target.twists), "sources": list(self.source.twists), "entries": self.to_strings()}

    def __repr__(self):
        return f"GradedMatrix({list(self.target.twists)} <- {list(self.source.twists)}: {self.to_strings()})"

    def is_zero(self) -> bool:
        return not self.entries

    def is_minimal(self) -> bool:
        """All entries lie in ``m`` (no nonzero scalar entries)."""
        return all(self.entry_degree(u, v) >= 1 for (u, v) in self.entries)

    def at_degree(self, d: int) -> np.ndarray:
        """Dense matrix ``source_d -> target_d``."""
        M = self._at.get(d)
        if M is None:
            ring = self.ring
            M = ring.field.zeros((self.target.dim(d), self.source.dim(d)))
            if M.size:
                tgt = self.target.offsets(d)
                src = self.source.offsets(d)
                for (u, v), vec in self.entries.items():
                    if u in tgt and v in src:
                        to, tn = tgt[u]
                        so, sn = src[v]
                        M[to : to + tn, so : so + sn] = ring.mult_matrix(
                            vec, self.entry_degree(u, v), d - self.source.twists[v]
                        )
            self._at[d] = M
        return M

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """``self o other``."""
        if other.target.twists != self.source.twists:
            raise ValueError("incompatible graded matrices")
        ring = self.ring
        by_row = {}
        for (k, v), vec in other.entries.items():
            by_row.setdefault(k, []).append((v, vec))
        out = {}
        for (u, k), a in self.entries.items():
            ea = self.entry_degree(u, k)
            for v, b in by_row.get(k, []):
                eb = other.entry_degree(k, v)
                prod = ring.multiply(a, ea, b, eb)
                if (u, v) in out:
                    out[(u, v)] = ring.field.reduce(out[(u, v)] + prod)
                else:
                    out[(u, v)] = prod
        return GradedMatrix(other.source, self.target, out)

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        f = self.ring.field
        out = dict(self.entries)
        for k, vec in other.entries.items():
            out[k] = f.reduce(out[k] + vec) if k in out else vec
        return GradedMatrix(self.source, self.target, out)

    def scale(self, c) -> "GradedMatrix":
        f = self.ring.field
        c = f(c)
        return GradedMatrix(self.source, self.target, {k: f.reduce(v * c) for k, v in self.entries.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        if self.source.twists != other.source.twists or self.target.twists != other.target.twists:
            return False
        # only nonzero entries are stored
        if set(self.entries) != set(other.entries):
            return False
        return all(np.array_equal(v, other.entries[k]) for k, v in self.entries.items())


def identity_matrix(F: FreeModule) -> GradedMatrix:
    one = F.ring.field.array([1])
    return GradedMatrix(F, F, {(u, u): one for u in range(F.rank)})


def block_diagonal(A: GradedMatrix, B: GradedMatrix) -> GradedMatrix:
    ring = A.ring
    src = FreeModule(ring, A.source.twists + B.source.twists)
    tgt = FreeModule(ring, A.target.twists + B.target.twists)
    ent = dict(A.entries)
    for (u, v), vec in B.entries.items():
        ent[(u + A.target.rank, v + A.source.rank)] = vec
    return GradedMatrix(src, tgt, ent)


# -- kernels and minimal generators -----------------------------------------------


def _span_of_products(F: FreeModule, K: dict, d: int) -> np.ndarray | None:
    """Rows spanning ``sum_i x_i K_{d - w_i}`` inside ``F_d``."""
    ring = F.ring
    rows = []
    for i, w in enumerate(ring.weights):
        Kp = K.get(d - w)
        if Kp is not None and len(Kp):
            rows.append(linalg.matmul(F.variable_action(i, d - w), Kp.T, ring.field).T)
    return np.concatenate(rows, axis=0) if rows else None


def minimal_kernel_generators(F: FreeModule, map_at, degrees=None):
    """Minimal homogeneous generators of ``ker`` of a degreewise-given map out of ``F``.

    ``map_at(d)`` returns the matrix on ``F_d``.  In each degree new
    generators are the rows of the canonical kernel basis, scanned in order,
    that are not in ``(m K)_d``.
    """
    ring = F.ring
    if degrees is None:
        degrees = F.degree_range()
    K, gens = {}, []
    for d in degrees:
        n = F.dim(d)
        if n == 0:
            continue
        Kd = linalg.nullspace(map_at(d), ring.field)
        K[d] = Kd
        if not len(Kd):
            continue
        ech = linalg.Echelon(n, ring.field, _span_of_products(F, K, d))
        for row in Kd:
            if ech.add(row):
                gens.append((d, row))
    return gens


def syzygy(phi: GradedMatrix) -> GradedMatrix:
    """Matrix whose columns minimally generate ``ker(phi)``; its cokernel is ``Omega^1(coker phi)``."""
    gens = minimal_kernel_generators(phi.source, phi.at_degree)
    return GradedMatrix.from_columns(phi.source, gens)


# -- modules ---------------------------------------------------------------------


class PresentedModule:
    """``M = coker(presentation: F1 -> F0)`` for a homogeneous matrix."""

    def __init__(self, presentation: GradedMatrix):
        self.presentation = presentation
        self.ring = presentation.ring
        self._quot = {}

    # -- constructors --
    @classmethod
    def from_strings(cls, ring, targets, sources, entries) -> "PresentedModule":
        return cls(GradedMatrix.from_strings(ring, list(targets), list(sources), entries))

    @classmethod
    def from_json(cls, ring, data: dict) -> "PresentedModule":
        targets = data.get("targets", [])
        sources = data.get("sources", [])
        entries = data.get("entries", [[] for _ in targets])
        if not sources:
            entries = [[] for _ in targets]
        return cls.from_strings(ring, targets, sources, entries)

    @classmethod
    def free(cls, ring, twists=(0,)) -> "PresentedModule":
        F = FreeModule(ring, twists)
        return cls(GradedMatrix(FreeModule(ring, []), F))

    def to_json(self) -> dict:
        return self.presentation.to_json()

    @property
    def generators(self) -> FreeModule:
        return self.presentation.target

    def __repr__(self):
        return f"PresentedModule(coker {self.presentation!r})"

    # -- degreewise data --
    def degree_range(self):
        return self.generators.degree_range()

    def quotient(self, d: int) -> linalg.Quotient:
        q = self._quot.get(d)
        if q is None:
            A = self.presentation.at_degree(d)
            q = linalg.Quotient(self.generators.dim(d), A.T if A.size else None, self.ring.field)
            self._quot[d] = q
        return q

    def dim(self, d: int) -> int:
        return self.quotient(d).dim

    def hilbert(self) -> LaurentPoly:
        return LaurentPoly({d: self.dim(d) for d in self.degree_range()})

    @property
    def length(self) -> int:
        return sum(self.dim(d) for d in self.degree_range())

    def is_zero(self) -> bool:
        return self.length == 0

    @cached_property
    def structured(self) -> "StructuredModule":
        ring = self.ring
        dims = {d: self.dim(d) for d in self.degree_range() if self.dim(d)}
        actions = {}
        F = self.generators
        for i, w in enumerate(ring.weights):
            for d in dims:
                if d + w in dims:
                    A = F.variable_action(i, d)
                    actions[(i, d)] = linalg.matmul(
                        linalg.matmul(self.quotient(d + w).Q, A, ring.field), self.quotient(d).lift, ring.field
                    )
        return StructuredModule(ring, dims, actions)

    @cached_property
    def resolution(self) -> "Resolution":
        return Resolution(self)

    def minimal_presentation(self) -> "PresentedModule":
        return self.resolution.minimal_presentation()

    @property
    def mu(self) -> int:
        return self.resolution.rank(0)

    def is_free(self) -> bool:
        return self.resolution.rank(1) == 0

    def is_cyclic(self) -> bool:
        return self.mu <= 1

    def is_vector_space(self) -> bool:
        """``m M = 0``."""
        return all(not np.any(A != 0) for A in self.structured.actions.values())

    def certify_isomorphic_to_ring(self) -> bool:
        """``M ~ R(-a)``: cyclic with zero annihilator, i.e. one generator and no minimal relations."""
        return self.mu == 1 and self.is_free()

    # -- constructions --
    def direct_sum(self, other: "PresentedModule") -> "PresentedModule":
        return PresentedModule(block_diagonal(self.presentation, other.presentation))

    def __add__(self, other):
        return self.direct_sum(other)

    def shift(self, j: int) -> "PresentedModule":
        """``M(-j)``: every twist raised by ``j``."""
        P = self.presentation
        ring = self.ring
        return PresentedModule(
            GradedMatrix(
                FreeModule(ring, [a + j for a in P.source.twists]),
                FreeModule(ring, [a + j for a in P.target.twists]),
                P.entries,
            )
        )

    def power(self, n: int) -> "PresentedModule":
        out = self
        for _ in range(n - 1):
            out = out.direct_sum(self)
        return out


class StructuredModule:
    """Finite-dimensional graded module given by bases and variable actions.

    ``actions[(i, d)]`` is the matrix of ``x_i: M_d -> M_{d + w_i}``; absent
    keys mean the zero map.
    """

    def __init__(self, ring: RingPresentation, dims: dict, actions: dict):
        self.ring = ring
        self.dims = {int(d): int(n) for d, n in dims.items() if n}
        self.actions = actions
        self._mono = {}
        self._elem = {}

    def dim(self, d: int) -> int:
        return self.dims.get(d, 0)

    @property
    def degrees(self):
        return sorted(self.dims)

    def degree_range(self):
        if not self.dims:
            return range(0)
        return range(min(self.dims), max(self.dims) + 1)

    @property
    def length(self) -> int:
        return sum(self.dims.values())

    def hilbert(self) -> LaurentPoly:
        return LaurentPoly(self.dims)

    def action(self, i: int, d: int) -> np.ndarray:
        w = self.ring.weights[i]
        A = self.actions.get((i, d))
        if A is None:
            return self.ring.field.zeros((self.dim(d + w), self.dim(d)))
        return A

    def monomial_action(self, mono, d: int) -> np.ndarray:
        key = (mono, d)
        A = self._mono.get(key)
        if A is None:
            f = self.ring.field
            A = f.eye(self.dim(d))
            cur = d
            for i, e in enumerate(mono):
                for _ in range(e):
                    A = linalg.matmul(self.action(i, cur), A, f)
                    cur += self.ring.weights[i]
            self._mono[key] = A
        return A

    def element_action(self, vec, e: int, d: int) -> np.ndarray:
        """Action of the degree-``e`` ring element ``vec``: ``M_d -> M_{d+e}``."""
        key = (e, d, vec.tobytes() if vec.dtype != object else tuple(vec))
        A = self._elem.get(key)
        if A is None:
            f = self.ring.field
            A = f.zeros((self.dim(d + e), self.dim(d)))
            if A.size:
                for c, mono in zip(vec, self.ring.basis(e)):
                    if c != 0:
                        A = A + self.monomial_action(mono, d) * c
                A = f.reduce(A)
            self._elem[key] = A
        return A

    def check_axioms(self) -> bool:
        """Variable actions commute and every relation acts as zero."""
        ring = self.ring
        f = ring.field
        for d in self.dims:
            for i, wi in enumerate(ring.weights):
                for j, wj in enumerate(ring.weights):
                    if j <= i:
                        continue
                    a = linalg.matmul(self.action(j, d + wi), self.action(i, d), f)
                    b = linalg.matmul(self.action(i, d + wj), self.action(j, d), f)
                    if np.any(f.reduce(a - b) != 0):
                        return False
            for rel in ring.relations:
                e = rel.degree()
                A = f.zeros((self.dim(d + e), self.dim(d)))
                for mono, c in rel.terms.items():
                    A = A + self.monomial_action(mono, d) * c
                if np.any(f.reduce(A) != 0):
                    return False
        return True

    def is_vector_space(self) -> bool:
        return all(not np.any(A != 0) for A in self.actions.values())

    def present(self) -> PresentedModule:
        """A minimal presentation ``coker(F1 -> F0)`` of this module."""
        ring = self.ring
        f = ring.field
        gens = []
        for d in self.degree_range():
            n = self.dim(d)
            if not n:
                continue
            rows = []
            for i, w in enumerate(ring.weights):
                if self.dim(d - w):
                    rows.append(self.action(i, d - w).T)
            sub = np.concatenate(rows, axis=0) if rows else None
            for k in linalg.complement(f.eye(n), sub, f, n):
                gens.append((d, f.eye(n)[k]))
        F0 = FreeModule(ring, [d for d, _ in gens])

        def eps_at(d):
            out = f.zeros((self.dim(d), F0.dim(d)))
            for u, off, nb in F0.blocks(d):
                a, g = gens[u]
                for k, mono in enumerate(ring.basis(d - a)):
                    out[:, off + k] = linalg.matmul(self.monomial_action(mono, a), g[:, None], f)[:, 0]
            return out

        rels = minimal_kernel_generators(F0, eps_at)
        return PresentedModule(GradedMatrix.from_columns(F0, rels))


# -- resolutions -----------------------------------------------------------------


class Resolution:
    """Lazily extended minimal graded free resolution ``... -> F_1 -> F_0 -> M``.

    ``differential(i)`` is ``d_i: F_i -> F_{i-1}`` for ``i >= 1``; ``augmentation``
    maps ``F_0`` onto the generators of the original presentation.
    """

    def __init__(self, module: PresentedModule):
        self.module = module
        self.ring = module.ring
        self.ring.require_artinian("minimal free resolution")
        f = self.ring.field
        G = module.generators
        gens = []
        for d in G.degree_range():
            n = G.dim(d)
            if not n:
                continue
            rows = []
            A = module.presentation.at_degree(d)
            if A.size:
                rows.append(A.T)
            for i, w in enumerate(self.ring.weights):
                B = G.variable_action(i, d - w)
                if B.size:
                    rows.append(B.T)
            sub = np.concatenate(rows, axis=0) if rows else None
            eye = f.eye(n)
            for k in linalg.complement(eye, sub, f, n):
                gens.append((d, eye[k]))
        self.augmentation = GradedMatrix.from_columns(G, gens)
        self.modules = [self.augmentation.source]
        self.differentials = {}

    def _next(self):
        i = len(self.modules)
        F = self.modules[-1]
        if i == 1:
            eps = self.augmentation
            f = self.ring.field

            def map_at(d):
                return linalg.matmul(self.module.quotient(d).Q, eps.at_degree(d), f)

        else:
            map_at = self.differentials[i - 1].at_degree
        gens = minimal_kernel_generators(F, map_at)
        d_i = GradedMatrix.from_columns(F, gens)
        self.differentials[i] = d_i
        self.modules.append(d_i.source)

    def extend(self, n: int) -> "Resolution":
        """Ensure ``F_0 .. F_n`` exist."""
        while len(self.modules) <= n:
            if self.modules[-1].rank == 0:
                F = FreeModule(self.ring, [])
                i = len(self.modules)
                self.differentials[i] = GradedMatrix(F, self.modules[-1])
                self.modules.append(F)
            else:
                self._next()
        return self

    def free_module(self, i: int) -> FreeModule:
        self.extend(i)
        return self.modules[i]

    def differential(self, i: int) -> GradedMatrix:
        self.extend(i)
        return self.differentials[i]

    def rank(self, i: int) -> int:
        return self.free_module(i).rank

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def minimal_presentation(self) -> PresentedModule:
        return PresentedModule(self.differential(1))

    def complex(self, n: int):
        from .complexes import FreeComplex

        self.extend(n)
        return FreeComplex({i: self.modules[i] for i in range(n + 1)}, {i: self.differentials[i] for i in range(1, n + 1)})

    def betti(self, n: int) -> "BettiTable":
        self.extend(n)
        table = {}
        for i in range(n + 1):
            for a in self.modules[i].twists:
                table[(i, a)] = table.get((i, a), 0) + 1
        return BettiTable(table, n)

    def is_exact(self, n: int) -> bool:
        """``H_i(F) = 0`` for ``0 < i < n`` and ``H_0(F) ~ M`` in every degree (rank counts)."""
        self.extend(n)
        f = self.ring.field
        for d in self.modules[0].degree_range():
            if self.modules[0].dim(d) - linalg.rank(self.differentials[1].at_degree(d), f) != self.module.dim(d):
                return False
        for i in range(1, n):
            F = self.modules[i]
            for d in F.degree_range():
                n_i = F.dim(d)
                r_out = linalg.rank(self.differentials[i].at_degree(d), f)
                r_in = linalg.rank(self.differentials[i + 1].at_degree(d), f)
                if n_i - r_out - r_in != 0:
                    return False
        return True

    def is_minimal(self, n: int) -> bool:
        self.extend(n)
        return all(self.differentials[i].is_minimal() for i in range(1, n + 1))


def resolve(M: PresentedModule, n: int):
    """``(F, betti)``: a minimal resolution through ``F_n`` and its Betti table."""
    R = M.resolution.extend(n)
    return R.complex(n), R.betti(n)


@dataclass
class BettiTable:
    """``beta[(i, j)]`` = number of summands ``R(-j)`` in ``F_i``, for ``i <= max_i``."""

    beta: dict
    max_i: int

    def __getitem__(self, key):
        return self.beta.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.beta.items() if k == i)

    @property
    def totals(self) -> list:
        return [self.total(i) for i in range(self.max_i + 1)]

    def poincare(self):
        from .series import TwoVariableSeries

        return TwoVariableSeries(dict(self.beta))

    def to_json(self):
        return {
            "max_i": self.max_i,
            "entries": [[i, j, v] for (i, j), v in sorted(self.beta.items())],
            "totals": self.totals,
        }

    def grid(self) -> str:
        """Macaulay-style table: rows ``j - i``, columns ``i``."""
        if not self.beta:
            return "total: (zero)"
        rows = sorted({j - i for (i, j) in self.beta})
        cols = range(self.max_i + 1)
        width = max(len(str(v)) for v in list(self.beta.values()) + self.totals) + 1
        lines = ["       " + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total: " + "".join(f"{t:>{width}}" for t in self.totals))
        for r in rows:
            cells = "".join(f"{(self.beta.get((i, i + r), 0) or '.'):>{width}}" for i in cols)
            lines.append(f"{r:>5}: " + cells)
        return "\n".join(lines)


# -- invariants ----------------------------------------------------------------


@dataclass(frozen=True)
class NumericInvariants:
    length: int
    mu: int
    gamma: Fraction | None


def numeric_invariants(M: PresentedModule) -> NumericInvariants:
    """``l(M)``, ``mu(M)`` and ``gamma(M) = l(M)/mu(M) - 1`` (``None`` for ``M = 0``)."""
    l, mu = M.length, M.mu
    return NumericInvariants(l, mu, Fraction(l, mu) - 1 if mu else None)


def minimal_presentation(M: PresentedModule) -> PresentedModule:
    return M.minimal_presentation()


def is_free(M: PresentedModule) -> bool:
    return M.is_free()


def is_cyclic(M: PresentedModule) -> bool:
    return M.is_cyclic()


# -- standard modules -------------------------------------------------------------


def free_module(ring, twists=(0,)) -> PresentedModule:
    return PresentedModule.free(ring, twists)


def cyclic_module(ring, relations, twist: int = 0) -> PresentedModule:
    """``R(-twist) / (relations)``."""
    polys = [ring.poly_ring.parse(r) for r in relations]
    polys = [p for p in polys if p]
    return PresentedModule.from_strings(ring, [twist], [twist + p.degree() for p in polys], [[str(p) for p in polys]])


def residue_field(ring, twist: int = 0) -> PresentedModule:
    return cyclic_module(ring, list(ring.names), twist)


def maximal_ideal(ring) -> PresentedModule:
    """``m`` as a module: the image of ``(x_1 .. x_n): sum R(-w_i) -> R``."""
    row = GradedMatrix.from_strings(ring, [0], list(ring.weights), [list(ring.names)])
    return PresentedModule(syzygy(row))
