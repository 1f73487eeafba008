"""Independent reference computations sharing no code with the package.

Everything here is plain Python on dicts and lists, modulo a prime.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

import sympy


def monomials(nvars: int, d: int):
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _poly_dict(text: str, names, p: int) -> dict:
    syms = sympy.symbols(list(names))
    P = sympy.Poly(sympy.sympify(text.replace("^", "**")), *syms)
    return {tuple(m): int(c) % p for m, c in P.terms() if int(c) % p}


def rank_mod_p(rows, p: int) -> int:
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        piv_row = rows.pop()
        col = min(piv_row)
        inv = pow(piv_row[col], p - 2, p)
        piv = {k: v * inv % p for k, v in piv_row.items()}
        rank += 1
        nxt = []
        for r in rows:
            c = r.get(col)
            if c:
                r = dict(r)
                for k, v in piv.items():
                    r[k] = (r.get(k, 0) - c * v) % p
                r = {k: v for k, v in r.items() if v}
            if r:
                nxt.append(r)
        rows = nxt
    return rank


def quotient_dim(names, relations, d: int, p: int = 101) -> int:
    """``dim_k (S/I)_d`` from the rank of the degree-``d`` Macaulay matrix (standard grading)."""
    n = len(names)
    gens = [_poly_dict(r, names, p) for r in relations]
    return len(monomials(n, d)) - rank_mod_p(_ideal_rows(gens, n, d), p)


def koszul_betti_of_residue_field(hilbert: list, n: int) -> list:
    """``beta_i(k)`` for a Koszul algebra: coefficients of ``1 / H_R(-z)``."""
    h = [c * (-1) ** i for i, c in enumerate(hilbert)]
    inv = [1]
    for i in range(1, n + 1):
        inv.append(-sum(h[j] * inv[i - j] for j in range(1, min(i, len(h) - 1) + 1)))
    return inv


def _ideal_rows(gens, n: int, d: int):
    rows = []
    for g in gens:
        if not g:
            continue
        dg = sum(next(iter(g)))
        if dg > d:
            continue
        for m in monomials(n, d - dg):
            rows.append({tuple(a + b for a, b in zip(mono, m)): c for mono, c in g.items()})
    return rows


def socle_dim(names, relations, top: int, p: int = 101) -> int:
    """Type of an Artinian standard-graded quotient.

    ``Soc_d = ker(S_d -> (S_{d+1}/I_{d+1})^n) / I_d`` where ``f -> (x_i f)_i``.
    """
    n = len(names)
    gens = [_poly_dict(r, names, p) for r in relations]
    total = 0
    for d in range(top + 1):
        I_d = _ideal_rows(gens, n, d)
        I_next = [{(i, k): v for k, v in r.items()} for i in range(n) for r in _ideal_rows(gens, n, d + 1)]
        images = [{(i, tuple(a + int(j == i) for j, a in enumerate(m))): 1 for i in range(n)} for m in monomials(n, d)]
        img_rank = rank_mod_p(I_next + images, p) - rank_mod_p(I_next, p)
        total += len(monomials(n, d)) - img_rank - rank_mod_p(I_d, p)
    return total
