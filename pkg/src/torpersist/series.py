"""Exact Laurent polynomials, rational Hilbert series and bigraded Poincare data."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction


def _clean(coeffs: dict) -> dict:
    return {e: c for e, c in coeffs.items() if c != 0}


class LaurentPoly:
    """Finite sum ``sum c_e t^e`` with integer or Fraction coefficients, ``e`` in Z."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, (list, tuple)):
            coeffs = {i: c for i, c in enumerate(coeffs)}
        self.coeffs = _clean({int(e): (Fraction(c) if not isinstance(c, int) else c) for e, c in coeffs.items()})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def one(cls):
        return cls({0: 1})

    # -- basic --
    def __getitem__(self, e):
        return self.coeffs.get(e, 0)

    def is_zero(self):
        return not self.coeffs

    @property
    def low(self):
        return min(self.coeffs) if self.coeffs else 0

    @property
    def high(self):
        return max(self.coeffs) if self.coeffs else -1

    def is_polynomial(self):
        return self.low >= 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def subs_power(self, k: int) -> "LaurentPoly":
        """``t -> t^k`` (``k = -1`` gives ``t -> 1/t``)."""
        return LaurentPoly({e * k: c for e, c in self.coeffs.items()})

    def __call__(self, x):
        return sum((c * Fraction(x) ** e for e, c in self.coeffs.items()), Fraction(0))

    def at_one(self):
        return sum(self.coeffs.values(), 0)

    def truncate(self, hi: int) -> "LaurentPoly":
        return LaurentPoly({e: c for e, c in self.coeffs.items() if e <= hi})

    def divmod_exact(self, divisor: "LaurentPoly"):
        """Exact division ``self / divisor``; returns the quotient or ``None``."""
        if divisor.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self.coeffs)
        dh, dc = divisor.high, divisor[divisor.high]
        dl = divisor.low
        q = {}
        while rem:
            h = max(rem)
            if h - dh < min(rem) - dl:
                return None
            c = Fraction(rem[h]) / dc
            if c.denominator == 1:
                c = int(c)
            q[h - dh] = c
            for e, v in divisor.coeffs.items():
                t = e + h - dh
                rem[t] = rem.get(t, 0) - c * v
                if rem[t] == 0:
                    del rem[t]
        return LaurentPoly(q)

    def to_list(self):
        """``(low, [c_low, ..., c_high])``."""
        if not self.coeffs:
            return 0, []
        return self.low, [self[e] for e in range(self.low, self.high + 1)]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}" if mono else f"{c}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__

    def to_json(self):
        return [[e, _jsonnum(self.coeffs[e])] for e in sorted(self.coeffs)]


def _jsonnum(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return c


def one_minus_t_power(a: int) -> LaurentPoly:
    return LaurentPoly({0: 1, a: -1})


# -- truncated power series ------------------------------------------------


def series_inverse(p: LaurentPoly, hi: int) -> LaurentPoly:
    """Power-series inverse of ``p`` (lowest term a nonzero constant times ``t^low``) through ``t^hi``."""
    low = p.low
    c0 = Fraction(p[low])
    q = {}
    # p = t^low * u, 1/p = t^-low * (1/u)
    u = p.shift(-low)
    n = hi + low
    for k in range(0, max(n, -1) + 1):
        s = Fraction(1 if k == 0 else 0)
        for j in range(1, k + 1):
            s -= u[j] * q.get(k - j, 0)
        q[k] = s / c0
    return LaurentPoly(q).shift(-low).truncate(hi)


def series_mul(a: LaurentPoly, b: LaurentPoly, hi: int) -> LaurentPoly:
    return (a.truncate(hi - b.low) * b.truncate(hi - a.low)).truncate(hi)


def series_div(a: LaurentPoly, b: LaurentPoly, hi: int) -> LaurentPoly:
    """``a / b`` as a truncated Laurent series through ``t^hi``."""
    return series_mul(a, series_inverse(b, hi - a.low + b.low), hi)


# -- Hilbert series of monomial quotients ---------------------------------


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def hilbert_numerator(gens, weights) -> LaurentPoly:
    """Numerator ``K(t)`` with ``H_{S/I} = K(t) / prod(1 - t^w_i)`` for a monomial ideal.

    Pivot recursion ``K(I) = K(I + (x)) + t^{deg x} K(I : x)`` on a variable
    ``x`` occurring in the most non-pure generators; the base case is a set
    of pairwise coprime generators, where ``K = prod(1 - t^{deg m})``.
    """
    weights = tuple(weights)
    gens = _minimalize([tuple(g) for g in gens])

    def deg(m):
        return sum(e * w for e, w in zip(m, weights))

    def rec(G):
        supports = [frozenset(i for i, e in enumerate(m) if e) for m in G]
        coprime = all(not (supports[i] & supports[j]) for i in range(len(G)) for j in range(i + 1, len(G)))
        if coprime:
            out = LaurentPoly.one()
            for m in G:
                out = out * one_minus_t_power(deg(m))
            return out
        counts = [0] * len(weights)
        for m, s in zip(G, supports):
            if len(s) > 1:
                for i in s:
                    counts[i] += 1
        v = max(range(len(weights)), key=lambda i: counts[i])
        x = tuple(1 if i == v else 0 for i in range(len(weights)))
        plus = _minimalize(G + [x])
        colon = _minimalize([tuple(max(e - xe, 0) for e, xe in zip(m, x)) for m in G])
        return rec(plus) + rec(colon).shift(weights[v])

    if any(sum(m) == 0 for m in gens):
        return LaurentPoly()
    return rec(gens)


# -- rational series --------------------------------------------------------


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class RationalSeries:
    """``numerator / prod_{a in denominator}(1 - t^a)``, plus an expansion up to ``cutoff``."""

    numerator: LaurentPoly
    denominator: tuple = ()
    cutoff: int = 0

    @property
    def dimension(self) -> int:
        return len(self.denominator)

    @property
    def pole_order(self) -> int:
        # order of vanishing at t=1 of the denominator minus that of the numerator
        k = 0
        num = self.numerator
        while not num.is_zero() and num.at_one() == 0:
            num = num.divmod_exact(one_minus_t_power(1))
            k += 1
        return len(self.denominator) - k

    def coefficient(self, d: int):
        return self.expand(d)[d]

    def expand(self, hi: int) -> LaurentPoly:
        """Exact expansion through ``t^hi``."""
        den = LaurentPoly.one()
        for a in self.denominator:
            den = den * one_minus_t_power(a)
        if self.numerator.is_zero():
            return LaurentPoly()
        return series_div(self.numerator, den, hi)

    @property
    def expansion(self) -> list:
        ex = self.expand(self.cutoff)
        return [ex[d] for d in range(min(0, self.numerator.low), self.cutoff + 1)]

    def canonical(self) -> str:
        low, cs = self.numerator.to_list()
        return f"numerator(low={low}): {cs}; denominator: {sorted(self.denominator)}"

    def __str__(self):
        den = "".join(f"(1-t^{a})" if a != 1 else "(1-t)" for a in sorted(self.denominator))
        return f"({self.numerator})" + (f" / {den}" if den else "")

    def to_json(self):
        low, cs = self.numerator.to_list()
        return {
            "numerator": {"low": low, "coefficients": [_jsonnum(c) for c in cs]},
            "denominator": sorted(self.denominator),
            "expansion": [_jsonnum(c) for c in self.expansion],
        }


def normalize_rational(numerator: LaurentPoly, denominator, cutoff: int = 0) -> RationalSeries:
    """Cancel ``(1 - t^a)`` factors from the denominator while the division stays exact."""
    den = sorted(denominator, reverse=True)
    num = numerator
    changed = True
    while changed and not num.is_zero():
        changed = False
        for a in list(den):
            q = num.divmod_exact(one_minus_t_power(a))
            if q is not None:
                num = q
                den.remove(a)
                changed = True
                break
    if num.is_zero():
        den = []
    return RationalSeries(num, tuple(sorted(den)), cutoff)


def multiplicity_polynomial(H: RationalSeries, dim: int, denominator=None) -> LaurentPoly:
    """``eps(t)`` with ``H = eps / prod(1 - t^a_i)`` over ``dim`` factors.

    ``denominator`` (the ring's canonical multiset) is used when given; the
    series is re-expressed over it, which must be exact.
    """
    if H.numerator.is_zero():
        raise DimensionError("zero series has no multiplicity polynomial")
    if H.pole_order != dim:
        raise DimensionError(f"pole order {H.pole_order} at t=1 differs from dim {dim}")
    if denominator is None:
        denominator = H.denominator
    denominator = tuple(denominator)
    if len(denominator) != dim:
        raise DimensionError("denominator multiset must have dim factors")
    num = H.numerator
    for a in denominator:
        num = num * one_minus_t_power(a)
    den = LaurentPoly.one()
    for a in H.denominator:
        den = den * one_minus_t_power(a)
    eps = num.divmod_exact(den)
    if eps is None:
        raise DimensionError("series not expressible over the given denominator")
    return eps


def multiplicity(H: RationalSeries) -> Fraction:
    """``e = eps(1)`` for ``H`` over its own denominator."""
    if H.numerator.is_zero():
        raise DimensionError("multiplicity of the zero object is undefined")
    eps = multiplicity_polynomial(H, H.pole_order, _reduced_denominator(H))
    return Fraction(eps.at_one())


def _reduced_denominator(H):
    if H.pole_order == len(H.denominator):
        return H.denominator
    return normalize_rational(H.numerator, H.denominator).denominator


# -- bigraded series ---------------------------------------------------------


@dataclass
class TwoVariableSeries:
    """Window of ``sum b_{i,j} t^j z^i``; keys are ``(i, j)``."""

    coeffs: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items() if v != 0}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TwoVariableSeries(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TwoVariableSeries({k: v * other for k, v in self.coeffs.items()})
        out = {}
        for (i1, j1), v1 in self.coeffs.items():
            for (i2, j2), v2 in other.coeffs.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return TwoVariableSeries(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, TwoVariableSeries) and self.coeffs == other.coeffs

    def square_substitution(self) -> "TwoVariableSeries":
        """``P(t^2, -z^2)``."""
        return TwoVariableSeries({(2 * i, 2 * j): v * (-1) ** i for (i, j), v in self.coeffs.items()})

    def window(self, max_i: int) -> "TwoVariableSeries":
        return TwoVariableSeries({k: v for k, v in self.coeffs.items() if k[0] <= max_i})

    def at_z(self, z: int) -> LaurentPoly:
        out = {}
        for (i, j), v in self.coeffs.items():
            out[j] = out.get(j, 0) + v * z**i
        return LaurentPoly(out)

    def __str__(self):
        terms = []
        for (i, j), v in sorted(self.coeffs.items()):
            terms.append(f"{v}*t^{j}*z^{i}")
        return " + ".join(terms) or "0"
