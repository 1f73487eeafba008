"""Exact linear algebra over a :class:`~torpersist.field.Field`.

Matrices act on column vectors; subspaces are stored as row bases.  Prime
fields go through the compiled kernels in :mod:`torpersist._kernels`, the
rationals through a plain Python elimination on Fractions.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from .field import Field

# float64 BLAS products are exact while every partial sum stays below 2**53.
_FLOAT_EXACT = float(1 << 53)


def matmul(A: np.ndarray, B: np.ndarray, field: Field) -> np.ndarray:
    p = field.characteristic
    if A.shape[1] == 0 or A.shape[0] == 0 or B.shape[1] == 0:
        return field.zeros((A.shape[0], B.shape[1]))
    if not p:
        return A.dot(B)
    if float(p - 1) ** 2 * A.shape[1] < _FLOAT_EXACT:
        return (A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p
    return (A @ B) % p


def _rref_rational(A: np.ndarray):
    rows = [list(r) for r in A]
    m = len(rows)
    n = A.shape[1]
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / Fraction(rows[r][c])
        pr = rows[r]
        if inv != 1:
            for j in range(c, n):
                if pr[j]:
                    pr[j] = pr[j] * inv
        nzc = [j for j in range(c, n) if pr[j] != 0]
        for i in range(m):
            if i != r:
                f = rows[i][c]
                if f:
                    ri = rows[i]
                    for j in nzc:
                        ri[j] = ri[j] - f * pr[j]
        pivots.append(c)
        r += 1
    out = np.empty((m, n), dtype=object)
    for i in range(m):
        out[i, :] = rows[i]
    return out, np.array(pivots, dtype=np.int64)


def rref(A: np.ndarray, field: Field):
    """Return ``(R, pivots)``: the reduced row echelon form of ``A`` and its pivot columns."""
    if field.characteristic:
        R = np.ascontiguousarray(A, dtype=np.int64).copy()
        if R.size == 0:
            return R, np.zeros(0, dtype=np.int64)
        piv = _kernels.rref_modp(R, field.characteristic)
        return R, np.asarray(piv, dtype=np.int64)
    if A.size == 0:
        return A.copy(), np.zeros(0, dtype=np.int64)
    return _rref_rational(A)


def rank(A: np.ndarray, field: Field) -> int:
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, field)[1])


def row_basis(A: np.ndarray, field: Field) -> np.ndarray:
    """Reduced row basis of the row space of ``A``."""
    R, piv = rref(A, field)
    return R[: len(piv)]


def nullspace(A: np.ndarray, field: Field) -> np.ndarray:
    """Row basis of ``{v : A v = 0}`` in the canonical form read off the RREF.

    Basis vector ``k`` has a 1 in the ``k``-th free column and zeros in the
    other free columns.
    """
    n = A.shape[1]
    if A.shape[0] == 0:
        return field.eye(n)
    R, piv = rref(A, field)
    piv = list(piv)
    free = [c for c in range(n) if c not in set(piv)]
    N = field.zeros((len(free), n))
    for k, c in enumerate(free):
        N[k, c] = field.one
        for r, pc in enumerate(piv):
            N[k, pc] = field.neg(R[r, c])
    return N


class Echelon:
    """Incrementally grown subspace kept in reduced row echelon form."""

    def __init__(self, n: int, field: Field, rows: np.ndarray | None = None):
        self.n = n
        self.field = field
        self.rows = field.zeros((0, n))
        self.pivots = np.zeros(0, dtype=np.int64)
        if rows is not None and len(rows):
            R, piv = rref(np.asarray(rows), field)
            self.rows = R[: len(piv)]
            self.pivots = piv

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, V: np.ndarray) -> np.ndarray:
        """Reduce each row of ``V`` against the basis (returns a new array)."""
        V = np.array(V, dtype=self.field.dtype, copy=True)
        if V.ndim == 1:
            return self.reduce(V[None, :])[0]
        if self.dim == 0 or V.shape[0] == 0:
            return V
        p = self.field.characteristic
        if p:
            return _kernels.reduce_rows(V, self.rows, self.pivots, p)
        coeffs = V[:, self.pivots]
        return V - coeffs.dot(self.rows)

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v) != 0)

    def add(self, v: np.ndarray) -> bool:
        """Add ``v`` to the span; return whether the dimension grew."""
        w = self.reduce(v)
        nz = np.flatnonzero(w != 0)
        if nz.size == 0:
            return False
        c = int(nz[0])
        f = self.field
        w = w * f.inv(w[c])
        w = f.reduce(w)
        # keep the basis fully reduced at the new pivot
        if self.dim:
            coeff = self.rows[:, c].copy()
            self.rows = f.reduce(self.rows - np.outer(coeff, w))
        pos = int(np.searchsorted(self.pivots, c))
        self.rows = np.insert(self.rows, pos, w, axis=0)
        self.pivots = np.insert(self.pivots, pos, c)
        return True


def complement(candidates: np.ndarray, subspace: np.ndarray | None, field: Field, n: int) -> list[int]:
    """Indices of rows of ``candidates`` chosen greedily, in order, to extend ``subspace``.

    The chosen rows map to a basis of ``span(candidates + subspace) / span(subspace)``.
    """
    ech = Echelon(n, field, subspace)
    chosen = []
    for k in range(len(candidates)):
        if ech.add(candidates[k]):
            chosen.append(k)
    return chosen


def coordinates(basis: np.ndarray, V: np.ndarray, field: Field) -> np.ndarray:
    """Solve ``X @ basis = V`` for ``X`` (rows of ``basis`` independent, ``V`` in their span)."""
    k, n = basis.shape
    if V.shape[0] == 0 or k == 0:
        if k == 0 and np.any(V != 0):
            raise ValueError("vector outside span")
        return field.zeros((V.shape[0], k))
    # RREF of [basis | I] exposes basis coordinates through the pivot columns.
    aug = np.concatenate([basis, field.eye(k)], axis=1)
    R, piv = rref(aug, field)
    piv = [c for c in piv if c < n]
    if len(piv) != k:
        raise ValueError("basis rows are dependent")
    T = R[:k, n:]  # T @ basis == R[:k, :n]
    coeffs = V[:, piv]
    X = matmul(coeffs, T, field)
    check = matmul(X, basis, field)
    if np.any(field.reduce(check - V) != 0):
        raise ValueError("vector outside span")
    return X


class Quotient:
    """The quotient map ``k^n -> k^n / span(U)``.

    ``Q`` (``q x n``) sends a vector to its coordinates on the non-pivot
    columns after reduction against ``U``; ``lift`` (``n x q``) is the section
    using standard basis vectors at those columns.
    """

    def __init__(self, n: int, U: np.ndarray | None, field: Field):
        self.n = n
        self.field = field
        if U is None or len(U) == 0:
            E = field.zeros((0, n))
            piv = np.zeros(0, dtype=np.int64)
        else:
            R, piv = rref(np.asarray(U), field)
            E = R[: len(piv)]
        self.sub_rows = E
        self.pivots = piv
        pset = set(int(c) for c in piv)
        self.free = [c for c in range(n) if c not in pset]
        q = len(self.free)
        self.dim = q
        Q = field.zeros((q, n))
        for k, c in enumerate(self.free):
            Q[k, c] = field.one
        if len(piv) and q:
            # v' = v - E^T v[piv]; Q v = v'[free]
            Q[:, piv] = field.reduce(Q[:, piv] - E[:, self.free].T)
        self.Q = Q
        L = field.zeros((n, q))
        for k, c in enumerate(self.free):
            L[c, k] = field.one
        self.lift = L
