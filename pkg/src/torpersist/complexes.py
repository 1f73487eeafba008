"""Complexes of graded free modules, Tor, Ext and Poincare tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .modules import BettiTable, FreeModule, GradedMatrix, PresentedModule, StructuredModule
from .series import LaurentPoly, TwoVariableSeries


class NotMinimalError(ValueError):
    pass


class FreeComplex:
    """Bounded complex ``X_hi -> ... -> X_lo`` with ``d_i: X_i -> X_{i-1}``."""

    def __init__(self, modules: dict, differentials: dict, labels: dict | None = None):
        self.modules = dict(modules)
        if not self.modules:
            raise ValueError("complex needs at least one component")
        self.ring = next(iter(self.modules.values())).ring
        self.lo = min(self.modules)
        self.hi = max(self.modules)
        self.differentials = dict(differentials)
        for i in range(self.lo + 1, self.hi + 1):
            if i not in self.differentials:
                self.differentials[i] = GradedMatrix(self.free_module(i), self.free_module(i - 1))
        self.labels = labels or {}

    def free_module(self, i: int) -> FreeModule:
        M = self.modules.get(i)
        return M if M is not None else FreeModule(self.ring, [])

    def differential(self, i: int) -> GradedMatrix:
        d = self.differentials.get(i)
        if d is None:
            d = GradedMatrix(self.free_module(i), self.free_module(i - 1))
        return d

    def ranks(self) -> dict:
        return {i: self.free_module(i).rank for i in range(self.lo, self.hi + 1)}

    def __repr__(self):
        return "FreeComplex(" + ", ".join(f"{i}: {list(self.free_module(i).twists)}" for i in range(self.lo, self.hi + 1)) + ")"

    def d_squared_is_zero(self) -> bool:
        for i in range(self.lo + 2, self.hi + 1):
            if not self.differential(i - 1).compose(self.differential(i)).is_zero():
                return False
        return True

    def is_minimal(self) -> bool:
        return all(self.differential(i).is_minimal() for i in range(self.lo + 1, self.hi + 1))

    def internal_degrees(self, i: int):
        return self.free_module(i).degree_range()

    @classmethod
    def concentrated(cls, F: FreeModule, i: int = 0) -> "FreeComplex":
        return cls({i: F}, {})

    @classmethod
    def from_matrices(cls, mats, lo: int = 0) -> "FreeComplex":
        """Complex from ``[d_{lo+1}, d_{lo+2}, ...]``."""
        mods = {lo: mats[0].target}
        diffs = {}
        for k, d in enumerate(mats):
            i = lo + k + 1
            mods[i] = d.source
            diffs[i] = d
        return cls(mods, diffs)

    def truncate(self, hi: int) -> "FreeComplex":
        return FreeComplex(
            {i: m for i, m in self.modules.items() if i <= hi},
            {i: d for i, d in self.differentials.items() if i <= hi},
            {i: lab for i, lab in self.labels.items() if i <= hi},
        )

    def h0_module(self) -> PresentedModule:
        """``H_0 = coker(d_1)`` (``lo`` must be 0)."""
        return PresentedModule(self.differential(self.lo + 1))


def tensor_complexes(X: FreeComplex, Y: FreeComplex) -> FreeComplex:
    """``(X (x) Y)_n = sum_{i+j=n} X_i (x) Y_j``, ``d(x (x) y) = dx (x) y + (-1)^i x (x) dy``.

    ``labels[n]`` lists the basis as ``(i, u, j, v)`` tuples, ordered by ``i`` then ``u`` then ``v``.
    """
    ring = X.ring
    f = ring.field
    labels, mods = {}, {}
    for n in range(X.lo + Y.lo, X.hi + Y.hi + 1):
        lab = []
        for i in range(X.lo, X.hi + 1):
            j = n - i
            if Y.lo <= j <= Y.hi:
                for u in range(X.free_module(i).rank):
                    for v in range(Y.free_module(j).rank):
                        lab.append((i, u, j, v))
        labels[n] = lab
        mods[n] = FreeModule(
            ring, [X.free_module(i).twists[u] + Y.free_module(j).twists[v] for (i, u, j, v) in lab]
        )
    diffs = {}
    for n in range(X.lo + Y.lo + 1, X.hi + Y.hi + 1):
        row_of = {lab: r for r, lab in enumerate(labels[n - 1])}
        ent = {}
        for c, (i, u, j, v) in enumerate(labels[n]):
            if i > X.lo:
                dX = X.differential(i)
                for (up, uu), vec in dX.entries.items():
                    if uu == u:
                        ent[(row_of[(i - 1, up, j, v)], c)] = vec
            if j > Y.lo:
                dY = Y.differential(j)
                for (vp, vv), vec in dY.entries.items():
                    if vv == v:
                        ent[(row_of[(i, u, j - 1, vp)], c)] = vec if i % 2 == 0 else f.reduce(-vec)
        diffs[n] = GradedMatrix(mods[n], mods[n - 1], ent)
    return FreeComplex(mods, diffs, labels)


# -- homology reports ------------------------------------------------------------


@dataclass
class HomologyReport:
    """``entries[(i, j)] = dim_k H_i(...)_j`` on a stated window of ``i``."""

    op: str
    window: tuple
    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}

    def total(self, i: int) -> int:
        return sum(v for (k, _), v in self.entries.items() if k == i)

    def totals(self) -> dict:
        lo, hi = self.window
        return {i: self.total(i) for i in range(lo, hi + 1)}

    def vanishes(self, lo: int | None = None, hi: int | None = None) -> bool:
        lo = self.window[0] if lo is None else lo
        hi = self.window[1] if hi is None else hi
        return all(self.total(i) == 0 for i in range(lo, hi + 1))

    def nonvanishing(self) -> list:
        return sorted({i for (i, _) in self.entries})

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "window": list(self.window),
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items())],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def homology(X: FreeComplex) -> HomologyReport:
    f = X.ring.field
    entries = {}
    for i in range(X.lo, X.hi + 1):
        for d in X.internal_degrees(i):
            n = X.free_module(i).dim(d)
            if not n:
                continue
            r_out = linalg.rank(X.differential(i).at_degree(d), f) if i > X.lo else 0
            r_in = linalg.rank(X.differential(i + 1).at_degree(d), f) if i < X.hi else 0
            entries[(i, d)] = n - r_out - r_in
    return HomologyReport("homology", (X.lo, X.hi), entries)


def _structured(N) -> StructuredModule:
    if isinstance(N, StructuredModule):
        return N
    if isinstance(N, PresentedModule):
        return N.structured
    raise TypeError(f"expected a module, got {type(N).__name__}")


class TensorWithModule:
    """``X (x)_R N`` for a free complex or a lazily extended resolution ``X``.

    ``(X_i (x) N)_d = sum_u N_{d - a_u}``; ranks are cached per ``(i, d)``.
    """

    def __init__(self, X, N):
        self.X = X
        self.N = _structured(N)
        self.ring = self.N.ring
        self._rank = {}

    def _blocks(self, i, d):
        out, off = [], 0
        for u, a in enumerate(self.X.free_module(i).twists):
            n = self.N.dim(d - a)
            if n:
                out.append((u, off, n))
                off += n
        return out, off

    def dim(self, i, d) -> int:
        return self._blocks(i, d)[1]

    def degrees(self, i):
        F = self.X.free_module(i)
        if not F.rank or not self.N.dims:
            return range(0)
        return range(min(F.twists) + min(self.N.dims), max(F.twists) + max(self.N.dims) + 1)

    def matrix(self, i: int, d: int) -> np.ndarray:
        """``d_i (x) N`` in internal degree ``d``."""
        f = self.ring.field
        cols, nc = self._blocks(i, d)
        rows, nr = self._blocks(i - 1, d)
        out = f.zeros((nr, nc))
        if not out.size:
            return out
        dX = self.X.differential(i)
        roff = {u: (o, n) for u, o, n in rows}
        coff = {u: (o, n) for u, o, n in cols}
        for (up, u), vec in dX.entries.items():
            if up in roff and u in coff:
                ro, rn = roff[up]
                co, cn = coff[u]
                a = dX.source.twists[u]
                out[ro : ro + rn, co : co + cn] = self.N.element_action(vec, dX.entry_degree(up, u), d - a)
        return out

    def rank(self, i: int, d: int) -> int:
        key = (i, d)
        r = self._rank.get(key)
        if r is None:
            r = linalg.rank(self.matrix(i, d), self.ring.field) if i >= 1 else 0
            self._rank[key] = r
        return r

    def homology(self, i: int) -> dict:
        out = {}
        for d in self.degrees(i):
            n = self.dim(i, d)
            if n:
                h = n - self.rank(i, d) - self.rank(i + 1, d)
                if h:
                    out[d] = h
        return out


class HomIntoModule:
    """Cochain complex ``Hom_R(X, N)``: ``Hom(X_i, N)_d = sum_u N_{d + a_u}``."""

    def __init__(self, X, N):
        self.X = X
        self.N = _structured(N)
        self.ring = self.N.ring
        self._rank = {}

    def _blocks(self, i, d):
        out, off = [], 0
        for u, a in enumerate(self.X.free_module(i).twists):
            n = self.N.dim(d + a)
            if n:
                out.append((u, off, n))
                off += n
        return out, off

    def dim(self, i, d) -> int:
        return self._blocks(i, d)[1]

    def degrees(self, i):
        F = self.X.free_module(i)
        if not F.rank or not self.N.dims:
            return range(0)
        return range(min(self.N.dims) - max(F.twists), max(self.N.dims) - min(F.twists) + 1)

    def matrix(self, i: int, d: int) -> np.ndarray:
        """Coboundary ``delta^i: Hom(X_{i-1}, N)_d -> Hom(X_i, N)_d``, ``(delta f)(e_u) = f(d_i e_u)``."""
        f = self.ring.field
        rows, nr = self._blocks(i, d)
        cols, nc = self._blocks(i - 1, d)
        out = f.zeros((nr, nc))
        if not out.size:
            return out
        dX = self.X.differential(i)
        roff = {u: (o, n) for u, o, n in rows}
        coff = {u: (o, n) for u, o, n in cols}
        for (up, u), vec in dX.entries.items():
            if u in roff and up in coff:
                ro, rn = roff[u]
                co, cn = coff[up]
                a_prev = dX.target.twists[up]
                out[ro : ro + rn, co : co + cn] = self.N.element_action(vec, dX.entry_degree(up, u), d + a_prev)
        return out

    def rank(self, i: int, d: int) -> int:
        key = (i, d)
        r = self._rank.get(key)
        if r is None:
            r = linalg.rank(self.matrix(i, d), self.ring.field) if i >= 1 else 0
            self._rank[key] = r
        return r

    def cohomology(self, i: int) -> dict:
        out = {}
        for d in self.degrees(i):
            n = self.dim(i, d)
            if n:
                h = n - self.rank(i + 1, d) - self.rank(i, d)
                if h:
                    out[d] = h
        return out

    def cocycle_module(self) -> StructuredModule:
        """``H^0 = ker(delta^1) = Hom_R(H_0 X, N)`` with its module structure."""
        ring = self.ring
        f = ring.field
        bases = {}
        for d in self.degrees(0):
            n = self.dim(0, d)
            if not n:
                continue
            K = linalg.nullspace(self.matrix(1, d), f) if self.X.free_module(1).rank else f.eye(n)
            if len(K):
                bases[d] = K
        actions = {}
        for i, w in enumerate(ring.weights):
            for d, K in bases.items():
                K2 = bases.get(d + w)
                if K2 is None:
                    continue
                A = self._ambient_action(i, d)
                img = linalg.matmul(A, K.T, f).T
                actions[(i, d)] = linalg.coordinates(K2, img, f).T
        return StructuredModule(ring, {d: len(K) for d, K in bases.items()}, actions)

    def _ambient_action(self, i, d):
        f = self.ring.field
        w = self.ring.weights[i]
        rows, nr = self._blocks(0, d + w)
        cols, nc = self._blocks(0, d)
        out = f.zeros((nr, nc))
        roff = {u: (o, n) for u, o, n in rows}
        twists = self.X.free_module(0).twists
        for u, co, cn in cols:
            if u in roff:
                ro, rn = roff[u]
                out[ro : ro + rn, co : co + cn] = self.N.action(i, d + twists[u])
        return out


def hom_complex(X, N) -> HomIntoModule:
    return HomIntoModule(X, N)


def _resolution_of(M):
    if isinstance(M, StructuredModule):
        M = M.present()
    return M.resolution


def tor(M, N, window=(1, 8), stop_at_first: bool = False) -> HomologyReport:
    """``Tor_i(M, N)`` for ``i`` in ``window`` as ``H_i(F (x) N)``, ``F`` minimal for ``M``.

    With ``stop_at_first`` the computation ends at the first nonvanishing index.
    """
    lo, hi = window
    T = TensorWithModule(_resolution_of(M), N)
    entries = {}
    for i in range(lo, hi + 1):
        h = T.homology(i)
        entries.update({(i, d): v for d, v in h.items()})
        if h and stop_at_first:
            return HomologyReport("tor", (lo, i), entries)
    return HomologyReport("tor", (lo, hi), entries)


def ext(M, N, window=(1, 8), stop_at_first: bool = False) -> HomologyReport:
    """``Ext^i(M, N) = H^i(Hom(F, N))`` for ``i`` in ``window``."""
    lo, hi = window
    C = HomIntoModule(_resolution_of(M), N)
    entries = {}
    for i in range(lo, hi + 1):
        h = C.cohomology(i)
        entries.update({(i, d): v for d, v in h.items()})
        if h and stop_at_first:
            return HomologyReport("ext", (lo, i), entries)
    return HomologyReport("ext", (lo, hi), entries)


def hom_module(M, N) -> StructuredModule:
    """``Hom_R(M, N)`` as a graded module."""
    return HomIntoModule(_resolution_of(M), N).cocycle_module()


def poincare_table(F: FreeComplex) -> BettiTable:
    """Betti numbers ``b_{i,j}`` of a minimal free complex (refuses non-minimal input)."""
    if not F.is_minimal():
        raise NotMinimalError("Poincare table of a non-minimal complex is meaningless")
    beta = {}
    for i in range(F.lo, F.hi + 1):
        for a in F.free_module(i).twists:
            beta[(i, a)] = beta.get((i, a), 0) + 1
    return BettiTable(beta, F.hi)


def poincare_series(F: FreeComplex) -> TwoVariableSeries:
    return TwoVariableSeries({k: v for k, v in poincare_table(F).beta.items()})


def poincare_at_minus_one(F: FreeComplex) -> LaurentPoly:
    """``P_F(t, -1)`` over the complex's homological window."""
    return poincare_series(F).at_z(-1)
