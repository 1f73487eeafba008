"""Buchberger's algorithm (Gebauer-Moeller pair pruning) for homogeneous ideals."""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Polynomial, PolyRing, divides, lcm, quotient_mono


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    generators: tuple
    order: str = "degrevlex"
    complete: bool = True

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def lead_monomials(self):
        return [g.lead_monomial() for g in self.generators]


def _reduce(f: Polynomial, basis, full: bool = True) -> Polynomial:
    """Remainder of ``f`` modulo ``basis`` (lists of Polynomials)."""
    ring = f.ring
    fld = ring.field
    key = ring.order_key
    leads = [(g.lead_monomial(), g) for g in basis]
    rest = dict(f.terms)
    out = {}
    while rest:
        m = max(rest, key=key)
        c = rest[m]
        for lm_g, g in leads:
            if divides(lm_g, m):
                q = quotient_mono(m, lm_g)
                factor = fld.neg(fld.div(c, g.lead_coeff()))
                for gm, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    v = fld.add(rest.get(t, fld.zero), fld.mul(factor, gc))
                    if v == 0:
                        rest.pop(t, None)
                    else:
                        rest[t] = v
                break
        else:
            if not full:
                out.update(rest)
                break
            out[m] = c
            del rest[m]
    return Polynomial(ring, out)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    fld = f.ring.field
    L = lcm(f.lead_monomial(), g.lead_monomial())
    a = f.mul_term(quotient_mono(L, f.lead_monomial()), fld.inv(f.lead_coeff()))
    b = g.mul_term(quotient_mono(L, g.lead_monomial()), fld.inv(g.lead_coeff()))
    return a - b


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _update(polys, G, B, h):
    """Gebauer-Moeller UPDATE: insert index ``h`` into basis ``G`` and pair set ``B``."""
    lh = polys[h].lead_monomial()
    C = list(G)
    D = []
    while C:
        g1 = C.pop(0)
        l1 = lcm(lh, polys[g1].lead_monomial())
        if _coprime(lh, polys[g1].lead_monomial()) or not any(
            divides(lcm(lh, polys[g2].lead_monomial()), l1) for g2 in C + D
        ):
            D.append(g1)
    E = [g for g in D if not _coprime(lh, polys[g].lead_monomial())]
    B_new = []
    for g1, g2 in B:
        L = lcm(polys[g1].lead_monomial(), polys[g2].lead_monomial())
        if not (
            divides(lh, L)
            and lcm(polys[g1].lead_monomial(), lh) != L
            and lcm(polys[g2].lead_monomial(), lh) != L
        ):
            B_new.append((g1, g2))
    B_new.extend((g, h) for g in E)
    G_new = [g for g in G if not divides(lh, polys[g].lead_monomial())]
    G_new.append(h)
    return G_new, B_new


def buchberger(gens, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis (degrevlex) of the ideal generated by homogeneous ``gens``."""
    gens = [g for g in gens]
    if ring is None:
        if not gens:
            raise ValueError("ring required for an empty generator list")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator {g}")
    polys = []
    G, B = [], []
    # homogeneous input: processing by degree keeps the run sugar-free
    for g in sorted((g for g in gens if g), key=lambda p: ring.order_key(p.lead_monomial())):
        h = _reduce(g, [polys[i] for i in G])
        if h:
            polys.append(h.monic())
            G, B = _update(polys, G, B, len(polys) - 1)
    while B:
        B.sort(
            key=lambda pr: ring.order_key(lcm(polys[pr[0]].lead_monomial(), polys[pr[1]].lead_monomial()))
        )
        i, j = B.pop(0)
        h = _reduce(_spoly(polys[i], polys[j]), [polys[k] for k in G])
        if h:
            polys.append(h.monic())
            G, B = _update(polys, G, B, len(polys) - 1)
    basis = [polys[i] for i in G]
    # minimal then reduced
    basis.sort(key=lambda p: ring.order_key(p.lead_monomial()))
    minimal = []
    for g in basis:
        if not any(divides(h.lead_monomial(), g.lead_monomial()) for h in minimal):
            minimal.append(g)
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        reduced.append(_reduce(g, others).monic())
    reduced.sort(key=lambda p: ring.order_key(p.lead_monomial()), reverse=True)
    return GroebnerBasis(ring, tuple(reduced))


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Fully reduced remainder of ``f``: no term divisible by a lead term of ``gb``."""
    if not gb.complete:
        raise ValueError("normal form needs a complete Groebner basis")
    if f.ring != gb.ring:
        raise ValueError("polynomial and basis over different rings")
    return _reduce(f, gb.generators)


def lead_term_ideal(gb: GroebnerBasis) -> list:
    """Minimal monomial generators of the initial ideal."""
    monos = sorted({g.lead_monomial() for g in gb.generators}, key=gb.ring.order_key, reverse=True)
    return [m for m in monos if not any(o != m and divides(o, m) for o in monos)]
