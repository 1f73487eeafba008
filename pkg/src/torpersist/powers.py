"""Exterior and symmetric squares of modules and of free complexes."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

import numpy as np

from . import linalg
from .complexes import FreeComplex, tensor_complexes
from .modules import FreeModule, GradedMatrix, PresentedModule


def _scalar(field, c):
    return field.array([c])


class ChainMap:
    """Degree-0 map of complexes given by one graded matrix per homological degree."""

    def __init__(self, source: FreeComplex, target: FreeComplex, maps: dict):
        self.source = source
        self.target = target
        self.maps = dict(maps)

    def component(self, n: int) -> GradedMatrix:
        m = self.maps.get(n)
        if m is None:
            m = GradedMatrix(self.source.free_module(n), self.target.free_module(n))
        return m

    def degrees(self):
        return range(min(self.source.lo, self.target.lo), max(self.source.hi, self.target.hi) + 1)

    def is_chain_map(self) -> bool:
        for n in self.degrees():
            if n - 1 < min(self.source.lo, self.target.lo):
                continue
            left = self.target.differential(n).compose(self.component(n))
            right = self.component(n - 1).compose(self.source.differential(n))
            if not left == right:
                return False
        return True

    def compose(self, other: "ChainMap") -> "ChainMap":
        """``self o other``."""
        return ChainMap(other.source, self.target, {n: self.component(n).compose(other.component(n)) for n in other.degrees()})

    def scale(self, c) -> "ChainMap":
        return ChainMap(self.source, self.target, {n: m.scale(c) for n, m in self.maps.items()})

    def __add__(self, other):
        return ChainMap(self.source, self.target, {n: self.component(n) + other.component(n) for n in self.degrees()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        return all(self.component(n) == other.component(n) for n in self.degrees())


def identity_chain_map(X: FreeComplex) -> ChainMap:
    f = X.ring.field
    return ChainMap(
        X,
        X,
        {n: GradedMatrix(X.free_module(n), X.free_module(n), {(u, u): _scalar(f, 1) for u in range(X.free_module(n).rank)}) for n in range(X.lo, X.hi + 1)},
    )


def alpha_complex(X: FreeComplex):
    """``(X (x) X, alpha)`` with ``alpha(x (x) x') = x (x) x' - (-1)^{|x||x'|} x' (x) x``."""
    T = tensor_complexes(X, X)
    f = X.ring.field
    maps = {}
    for n, lab in T.labels.items():
        pos = {l: r for r, l in enumerate(lab)}
        ent = {}
        for c, (i, u, j, v) in enumerate(lab):
            sign = -1 if (i * j) % 2 else 1
            r = pos[(j, v, i, u)]
            if r == c:
                val = 1 - sign
                if val:
                    ent[(c, c)] = _scalar(f, val)
            else:
                ent[(c, c)] = _scalar(f, 1)
                ent[(r, c)] = _scalar(f, -sign)
        maps[n] = GradedMatrix(T.free_module(n), T.free_module(n), ent)
    return T, ChainMap(T, T, maps)


@dataclass
class SymmetricSquare:
    """``S^2 X = coker(alpha)`` realised as the image of ``1 - alpha/2`` on ``X (x) X``."""

    X: FreeComplex
    tensor: FreeComplex
    alpha: ChainMap
    complex: FreeComplex
    projection: ChainMap  # X (x) X -> S^2 X
    inclusion: ChainMap  # S^2 X -> X (x) X

    def idempotent(self) -> ChainMap:
        """``e = alpha / 2``."""
        return self.alpha.scale(self.X.ring.field.half())

    def certify(self) -> dict:
        """Exact checks of the splitting package; every value must be ``True``."""
        f = self.X.ring.field
        T = self.tensor
        a = self.alpha
        e = self.idempotent()
        ident = identity_chain_map(T)
        out = {
            "d_squared_zero": self.complex.d_squared_is_zero(),
            "alpha_chain_map": a.is_chain_map(),
            "alpha_squared_is_2alpha": a.compose(a) == a.scale(2),
            "idempotent": e.compose(e) == e and e.is_chain_map(),
            "projection_chain_map": self.projection.is_chain_map(),
            "inclusion_chain_map": self.inclusion.is_chain_map(),
            "projection_inclusion_identity": self.projection.compose(self.inclusion) == identity_chain_map(self.complex),
            "inclusion_projection_is_1_minus_e": self.inclusion.compose(self.projection) == ident - e,
        }
        # split exactness: rank additivity per homological and internal degree
        additive = True
        for n in range(T.lo, T.hi + 1):
            an = a.component(n)
            for d in T.internal_degrees(n):
                dimT = T.free_module(n).dim(d)
                if not dimT:
                    continue
                A = an.at_degree(d)
                r_alpha = linalg.rank(A, f)
                ker_alpha = dimT - r_alpha
                r_comp = linalg.rank(f.reduce(f.eye(dimT) - A * f.half()), f)
                if ker_alpha != r_comp or dimT - r_alpha != self.complex.free_module(n).dim(d):
                    additive = False
        out["rank_additivity"] = additive
        return out

    def ranks(self) -> dict:
        return self.complex.ranks()


def symmetric_square_complex(X: FreeComplex) -> SymmetricSquare:
    f = X.ring.field
    f.require_odd("the symmetric square of a complex")
    T, alpha = alpha_complex(X)
    half = f.half()
    reps, mods = {}, {}
    for n, lab in T.labels.items():
        r = [(i, u, j, v) for (i, u, j, v) in lab if (i, u) < (j, v) or ((i, u) == (j, v) and i % 2 == 0)]
        reps[n] = r
        mods[n] = FreeModule(X.ring, [X.free_module(i).twists[u] + X.free_module(j).twists[v] for (i, u, j, v) in r])
    proj, incl = {}, {}
    for n, lab in T.labels.items():
        tpos = {l: k for k, l in enumerate(lab)}
        spos = {l: k for k, l in enumerate(reps[n])}
        pe, ie = {}, {}
        for c, (i, u, j, v) in enumerate(lab):
            sign = -1 if (i * j) % 2 else 1
            if (i, u, j, v) in spos:
                pe[(spos[(i, u, j, v)], c)] = _scalar(f, 1)
            elif (j, v, i, u) in spos and (i, u) != (j, v):
                pe[(spos[(j, v, i, u)], c)] = _scalar(f, sign)
        for s, (i, u, j, v) in enumerate(reps[n]):
            sign = -1 if (i * j) % 2 else 1
            if (i, u) == (j, v):
                ie[(tpos[(i, u, j, v)], s)] = _scalar(f, 1)
            else:
                ie[(tpos[(i, u, j, v)], s)] = _scalar(f, half)
                ie[(tpos[(j, v, i, u)], s)] = _scalar(f, f.mul(half, f(sign)))
        proj[n] = GradedMatrix(T.free_module(n), mods[n], pe)
        incl[n] = GradedMatrix(mods[n], T.free_module(n), ie)
    diffs = {}
    for n in range(T.lo + 1, T.hi + 1):
        diffs[n] = proj[n - 1].compose(T.differential(n)).compose(incl[n])
    S = FreeComplex(mods, diffs, reps)
    return SymmetricSquare(X, T, alpha, S, ChainMap(T, S, proj), ChainMap(S, T, incl))


# -- squares of modules --------------------------------------------------------------


def induced_map_at(A: GradedMatrix, M: PresentedModule, N: PresentedModule, d: int) -> np.ndarray:
    """Matrix of ``M_d -> N_d`` induced by ``A: gens(M) -> gens(N)`` on quotient coordinates."""
    f = M.ring.field
    qN, qM = N.quotient(d), M.quotient(d)
    return linalg.matmul(linalg.matmul(qN.Q, A.at_degree(d), f), qM.lift, f)


def is_well_defined(A: GradedMatrix, M: PresentedModule, N: PresentedModule) -> bool:
    """``A`` carries the relations of ``M`` into those of ``N``."""
    f = M.ring.field
    comp = A.compose(M.presentation)
    for d in comp.source.degree_range():
        img = linalg.matmul(N.quotient(d).Q, comp.at_degree(d), f)
        if np.any(img != 0):
            return False
    return True


def _pairs(n, strict):
    return [(u, v) for u in range(n) for v in range(u + (1 if strict else 0), n)]


def exterior_square_free(F: FreeModule):
    pairs = _pairs(F.rank, True)
    return pairs, FreeModule(F.ring, [F.twists[u] + F.twists[v] for u, v in pairs])


def symmetric_square_free(F: FreeModule):
    pairs = _pairs(F.rank, False)
    return pairs, FreeModule(F.ring, [F.twists[u] + F.twists[v] for u, v in pairs])


def tensor_square_free(F: FreeModule):
    pairs = [(u, v) for u in range(F.rank) for v in range(F.rank)]
    return pairs, FreeModule(F.ring, [F.twists[u] + F.twists[v] for u, v in pairs])


def _accumulate(ent, key, vec, f):
    if key in ent:
        ent[key] = f.reduce(ent[key] + vec)
    else:
        ent[key] = vec


class ModuleSquares:
    """``wedge^2 M``, ``S^2 M``, ``M (x) M`` and ``iota_M`` built from a minimal presentation of ``M``.

    With ``phi: F1 -> F0`` presenting ``M``: ``wedge^2 M = coker(F1 (x) F0 -> wedge^2 F0)``
    via ``f (x) e -> phi(f) ^ e``, likewise for ``S^2``; ``M (x) M`` uses both
    ``phi (x) 1`` and ``1 (x) phi``.
    """

    def __init__(self, M: PresentedModule, minimize: bool = True):
        self.module = M
        self.ring = M.ring
        P = M.minimal_presentation() if minimize else M
        self.presentation = P
        phi = P.presentation
        F0, F1 = phi.target, phi.source
        f = self.ring.field
        wpairs, W = exterior_square_free(F0)
        spairs, S = symmetric_square_free(F0)
        tpairs, T = tensor_square_free(F0)
        self.wedge_pairs, self.sym_pairs, self.tensor_pairs = wpairs, spairs, tpairs
        wpos = {p: k for k, p in enumerate(wpairs)}
        spos = {p: k for k, p in enumerate(spairs)}
        tpos = {p: k for k, p in enumerate(tpairs)}
        cols = [(s, w) for s in range(F1.rank) for w in range(F0.rank)]
        ctw = [F1.twists[s] + F0.twists[w] for s, w in cols]
        went, sent = {}, {}
        for c, (s, w) in enumerate(cols):
            for (u, ss), vec in phi.entries.items():
                if ss != s:
                    continue
                if u < w:
                    _accumulate(went, (wpos[(u, w)], c), vec, f)
                elif u > w:
                    _accumulate(went, (wpos[(w, u)], c), f.reduce(-vec), f)
                _accumulate(sent, (spos[(min(u, w), max(u, w))], c), vec, f)
        src = FreeModule(self.ring, ctw)
        self.wedge2 = PresentedModule(GradedMatrix(src, W, went))
        self.sym2 = PresentedModule(GradedMatrix(src, S, sent))
        tcols = [("L", s, w) for s in range(F1.rank) for w in range(F0.rank)] + [
            ("R", w, s) for w in range(F0.rank) for s in range(F1.rank)
        ]
        ttw = [F1.twists[a] + F0.twists[b] if side == "L" else F0.twists[a] + F1.twists[b] for side, a, b in tcols]
        tent = {}
        for c, (side, a, b) in enumerate(tcols):
            s, w = (a, b) if side == "L" else (b, a)
            for (u, ss), vec in phi.entries.items():
                if ss != s:
                    continue
                key = (u, w) if side == "L" else (w, u)
                _accumulate(tent, (tpos[key], c), vec, f)
        self.tensor = PresentedModule(GradedMatrix(FreeModule(self.ring, ttw), T, tent))
        ient = {}
        for k, (u, v) in enumerate(wpairs):
            ient[(tpos[(u, v)], k)] = _scalar(f, 1)
            ient[(tpos[(v, u)], k)] = _scalar(f, -1)
        self.iota = GradedMatrix(W, T, ient)

    @cached_property
    def splitting(self) -> GradedMatrix:
        """``x (x) y -> 1/2 x ^ y`` at the free level (needs ``char != 2``)."""
        f = self.ring.field
        half = f.half()
        wpos = {p: k for k, p in enumerate(self.wedge_pairs)}
        ent = {}
        for k, (u, v) in enumerate(self.tensor_pairs):
            if u < v:
                ent[(wpos[(u, v)], k)] = _scalar(f, half)
            elif u > v:
                ent[(wpos[(v, u)], k)] = _scalar(f, f.neg(half))
        return GradedMatrix(self.tensor.generators, self.wedge2.generators, ent)

    def degrees(self):
        return self.tensor.degree_range()

    def iota_at(self, d: int) -> np.ndarray:
        return induced_map_at(self.iota, self.wedge2, self.tensor, d)

    def splitting_at(self, d: int) -> np.ndarray:
        return induced_map_at(self.splitting, self.tensor, self.wedge2, d)

    def coker_iota_dims(self) -> dict:
        f = self.ring.field
        return {d: self.tensor.dim(d) - linalg.rank(self.iota_at(d), f) for d in self.degrees()}

    def iota_injective(self) -> bool:
        f = self.ring.field
        return all(linalg.rank(self.iota_at(d), f) == self.wedge2.dim(d) for d in self.wedge2.degree_range())


def antisymmetrization_module(M: PresentedModule) -> ModuleSquares:
    return ModuleSquares(M)


def decompose_tensor_square(M: PresentedModule) -> dict:
    """Check ``M (x) M = S^2 M + wedge^2 M`` degreewise and that ``iota_M`` splits."""
    M.ring.field.require_odd("splitting M (x) M")
    sq = ModuleSquares(M)
    f = M.ring.field
    rows, dims_ok, split_ok = [], True, True
    for d in sq.degrees():
        t, s, w = sq.tensor.dim(d), sq.sym2.dim(d), sq.wedge2.dim(d)
        if t != s + w:
            dims_ok = False
        if w:
            comp = linalg.matmul(sq.splitting_at(d), sq.iota_at(d), f)
            if np.any(f.reduce(comp - f.eye(w)) != 0):
                split_ok = False
        rows.append({"degree": d, "tensor": t, "sym2": s, "wedge2": w})
    coker = sq.coker_iota_dims()
    coker_ok = all(coker[d] == sq.sym2.dim(d) for d in sq.degrees())
    return {
        "degrees": rows,
        "dims_add": dims_ok,
        "iota_split_injective": split_ok,
        "coker_iota_is_sym2": coker_ok,
        "pass": dims_ok and split_ok and coker_ok,
        "squares": sq,
    }


def s2_h0_check(X: FreeComplex) -> dict:
    """Compare Hilbert functions of ``H_0(S^2 X)`` and ``S^2(H_0 X)``."""
    X.ring.field.require_odd("S^2 of a complex")
    S = symmetric_square_complex(X).complex
    lhs = S.h0_module() if S.hi >= 1 else PresentedModule(GradedMatrix(FreeModule(X.ring, []), S.free_module(0)))
    M = X.h0_module() if X.hi >= 1 else PresentedModule(GradedMatrix(FreeModule(X.ring, []), X.free_module(0)))
    rhs = ModuleSquares(M).sym2
    hl, hr = lhs.hilbert(), rhs.hilbert()
    return {"h0_s2x": hl, "s2_h0x": hr, "pass": hl == hr, "verdict": "match" if hl == hr else "FALSIFICATION"}


# -- exterior square of a map and the socle bound --------------------------------------


def exterior_square_map(A: GradedMatrix) -> GradedMatrix:
    """``wedge^2 A: wedge^2 F -> wedge^2 G``, ``e_u ^ e_v -> A e_u ^ A e_v``."""
    ring = A.ring
    f = ring.field
    sp, W1 = exterior_square_free(A.source)
    tp, W2 = exterior_square_free(A.target)
    tpos = {p: k for k, p in enumerate(tp)}
    cols = {}
    for (p, u), vec in A.entries.items():
        cols.setdefault(u, []).append((p, vec))
    ent = {}
    for c, (u, v) in enumerate(sp):
        for p, a in cols.get(u, []):
            for q, b in cols.get(v, []):
                if p == q:
                    continue
                prod = ring.multiply(a, A.entry_degree(p, u), b, A.entry_degree(q, v))
                if p < q:
                    _accumulate(ent, (tpos[(p, q)], c), prod, f)
                else:
                    _accumulate(ent, (tpos[(q, p)], c), f.reduce(-prod), f)
    return GradedMatrix(W1, W2, ent)


def tensor_square_map(A: GradedMatrix) -> GradedMatrix:
    ring = A.ring
    f = ring.field
    sp, T1 = tensor_square_free(A.source)
    tp, T2 = tensor_square_free(A.target)
    tpos = {p: k for k, p in enumerate(tp)}
    cols = {}
    for (p, u), vec in A.entries.items():
        cols.setdefault(u, []).append((p, vec))
    ent = {}
    for c, (u, v) in enumerate(sp):
        for p, a in cols.get(u, []):
            for q, b in cols.get(v, []):
                prod = ring.multiply(a, A.entry_degree(p, u), b, A.entry_degree(q, v))
                _accumulate(ent, (tpos[(p, q)], c), prod, f)
    return GradedMatrix(T1, T2, ent)


def naturality_square(L: PresentedModule, phi: GradedMatrix) -> dict:
    """Injectivity data for ``iota_L``, ``phi (x) phi`` and ``wedge^2 phi`` where ``phi: L -> R^b``.

    ``L`` must be presented on the source of ``phi`` (``phi`` maps the
    generators of ``L`` to ``R^b``).
    """
    f = L.ring.field
    target = PresentedModule(GradedMatrix(FreeModule(L.ring, []), phi.target))
    sqL = ModuleSquares(L, minimize=False)
    sqT = ModuleSquares(target, minimize=False)
    w = exterior_square_map(phi)
    t = tensor_square_map(phi)

    def injective(A, M, N):
        return all(linalg.rank(induced_map_at(A, M, N, d), f) == M.dim(d) for d in M.degree_range())

    left = sqT.iota.compose(w)
    right = t.compose(sqL.iota)
    return {
        "iota_L_injective": sqL.iota_injective(),
        "phi_tensor_phi_injective": injective(t, sqL.tensor, sqT.tensor),
        "wedge2_phi_injective": injective(w, sqL.wedge2, sqT.wedge2),
        "square_commutes": left == right,
        "well_defined": is_well_defined(w, sqL.wedge2, sqT.wedge2) and is_well_defined(t, sqL.tensor, sqT.tensor),
    }


@dataclass(frozen=True)
class SocleBound:
    wedge_dim: int
    capacity: int
    holds: bool
    formula_used: bool


def socle_inequality(mu_L: int, b: int, r: int) -> SocleBound:
    """``C(mu_L, 2) <= r * C(b, 2)``."""
    lhs, rhs = comb(mu_L, 2), r * comb(b, 2)
    return SocleBound(lhs, rhs, lhs <= rhs, True)


def wedge_dimension_bounds(L: PresentedModule, b: int) -> SocleBound:
    """Both sides of the socle-embedding inequality for ``wedge^2 L`` inside ``wedge^2 R^b``.

    When ``m L = 0`` the left side is ``C(mu(L), 2)`` (cross-checked against
    the computed length); otherwise the computed length of ``wedge^2 L``.
    """
    r = L.ring.type
    actual = ModuleSquares(L).wedge2.length
    if L.is_vector_space():
        lhs = comb(L.mu, 2)
        if lhs != actual:
            raise AssertionError(f"dim wedge^2 L = {actual} but C(mu, 2) = {lhs}")
        used = True
    else:
        lhs, used = actual, False
    rhs = r * comb(b, 2)
    return SocleBound(lhs, rhs, lhs <= rhs, used)
