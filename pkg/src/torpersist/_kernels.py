"""Row-reduction kernels over F_p.

Two implementations with identical output: a numba ``@njit`` loop kernel and
a vectorised pure-numpy one.  ``TORPERSIST_DISABLE_NUMBA=1`` (or numba being
unavailable) selects the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("TORPERSIST_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False


def _inv_mod(a, p):
    # extended Euclid; a in [1, p)
    t, new_t = 0, 1
    r, new_r = p, a
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


def _rref_modp_loops(A, p):
    m, n = A.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if A[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, n):
                tmp = A[r, j]
                A[r, j] = A[piv, j]
                A[piv, j] = tmp
        inv = _inv_mod(A[r, c], p)
        if inv != 1:
            for j in range(c, n):
                A[r, j] = A[r, j] * inv % p
        for i in range(m):
            if i == r:
                continue
            f = A[i, c]
            if f == 0:
                continue
            for j in range(c, n):
                v = A[r, j]
                if v != 0:
                    A[i, j] = (A[i, j] - f * v) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


def _reduce_rows_loops(V, E, pivots, p):
    # V[k] -= sum_j V[k, pivots[j]] * E[j]; E in RREF.
    nv, n = V.shape
    ne = E.shape[0]
    for k in range(nv):
        for j in range(ne):
            f = V[k, pivots[j]]
            if f == 0:
                continue
            for c in range(n):
                e = E[j, c]
                if e != 0:
                    V[k, c] = (V[k, c] - f * e) % p
    return V


def rref_modp_numpy(A: np.ndarray, p: int) -> np.ndarray:
    """In-place RREF of an int64 matrix with entries in ``[0, p)``; returns pivot columns."""
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r, c:] = A[r, c:] * inv % p
        f = A[:, c].copy()
        f[r] = 0
        rows = np.flatnonzero(f)
        if rows.size:
            A[np.ix_(rows, np.arange(c, n))] = (
                A[np.ix_(rows, np.arange(c, n))] - np.outer(f[rows], A[r, c:])
            ) % p
        pivots.append(c)
        r += 1
    return np.array(pivots, dtype=np.int64)


def reduce_rows_numpy(V: np.ndarray, E: np.ndarray, pivots: np.ndarray, p: int) -> np.ndarray:
    if E.shape[0] == 0 or V.shape[0] == 0:
        return V
    coeffs = V[:, pivots].copy()
    V -= (coeffs @ E) % p
    V %= p
    return V


if HAVE_NUMBA:
    _inv_mod = njit(cache=True)(_inv_mod)
    rref_modp_numba = njit(cache=True)(_rref_modp_loops)
    reduce_rows_numba = njit(cache=True)(_reduce_rows_loops)
    rref_modp = rref_modp_numba
    reduce_rows = reduce_rows_numba
    BACKEND = "numba"
else:
    rref_modp_numba = None
    reduce_rows_numba = None
    rref_modp = rref_modp_numpy
    reduce_rows = reduce_rows_numpy
    BACKEND = "numpy"
