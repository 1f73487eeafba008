"""Series-level identities as checkable predicates with serialisable verdicts."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .complexes import FreeComplex, poincare_series, tor
from .modules import PresentedModule
from .powers import ModuleSquares, symmetric_square_complex
from .series import LaurentPoly, series_div, series_mul, _jsonnum


def inputs_hash(*objs) -> str:
    blob = json.dumps([_jsonable(o) for o in objs], sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _jsonable(o):
    if hasattr(o, "to_json"):
        return o.to_json()
    if isinstance(o, PresentedModule):
        return {"ring": o.ring.to_json(), "module": o.to_json()}
    return o


@dataclass
class Verdict:
    identity: str
    inputs_hash: str
    window: list
    passed: bool | None  # None = inapplicable
    witness_degree: int | None = None
    tags: list = dc_field(default_factory=list)
    detail: dict = dc_field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "inputs-hash": self.inputs_hash,
            "window": self.window,
            "pass": self.passed,
            "witness-degree-on-fail": self.witness_degree,
            "tags": sorted(self.tags),
            "detail": self.detail,
        }


def _first_mismatch(a: LaurentPoly, b: LaurentPoly, lo: int, hi: int):
    for d in range(lo, hi + 1):
        if a[d] != b[d]:
            return d
    return None


def _series_json(p: LaurentPoly, lo: int, hi: int):
    return [_jsonnum(p[d]) for d in range(lo, hi + 1)]


def check_hilbert_poincare(M: PresentedModule, N: int = 8) -> Verdict:
    """``H_M(t) = H_R(t) P_M(t, -1)`` coefficientwise through ``t^{a0 + N}``.

    Truncating the resolution at ``F_N`` is harmless up to that degree since
    the twists of a minimal ``F_i`` are at least ``a0 + i``.
    """
    R = M.ring
    res = M.resolution.extend(N)
    P = poincare_series(res.complex(N)).at_z(-1)
    HR = R.hilbert_polynomial()
    HM = M.hilbert()
    a0 = min(res.free_module(0).twists, default=0)
    lo, hi = a0, a0 + N
    rhs = (HR * P).truncate(hi)
    bad = _first_mismatch(HM, rhs, lo, hi)
    return Verdict(
        "hilbert-poincare",
        inputs_hash(M),
        [lo, hi],
        bad is None,
        bad,
        detail={"betti_totals": res.betti(N).totals, "H_M": _series_json(HM, lo, hi), "H_R*P(t,-1)": _series_json(rhs, lo, hi)},
    )


def check_poincare_s2(X: FreeComplex) -> Verdict:
    """``P_{S^2 X}(t, z) = 1/2 [P_X(t, z)^2 + P_X(t^2, -z^2)]`` exactly."""
    X.ring.field.require_odd("the S^2 Poincare formula")
    S = symmetric_square_complex(X).complex
    PX = poincare_series(X)
    PS = poincare_series(S)
    formula = (PX * PX + PX.square_substitution()) * Fraction(1, 2)
    formula.coeffs = {k: (int(v) if Fraction(v).denominator == 1 else v) for k, v in formula.coeffs.items()}
    ok = formula == PS
    bad = None
    if not ok:
        keys = sorted(set(formula.coeffs) | set(PS.coeffs))
        bad = next(j for (i, j) in keys if formula.coeffs.get((i, j), 0) != PS.coeffs.get((i, j), 0))
    return Verdict(
        "poincare-s2",
        inputs_hash({i: list(X.free_module(i).twists) for i in range(X.lo, X.hi + 1)}),
        [X.lo, 2 * X.hi],
        ok,
        bad,
        detail={
            "constructed": [[i, j, v] for (i, j), v in sorted(PS.coeffs.items())],
            "formula": [[i, j, _jsonnum(v)] for (i, j), v in sorted(formula.coeffs.items())],
        },
    )


def square_hilbert_formulas(HR: LaurentPoly, HM: LaurentPoly, hi: int):
    """Right-hand sides for ``H_{S^2 M}`` and ``H_{wedge^2 M}`` as series through ``t^hi``."""
    a = series_div(HM * HM, HR * 2, hi)
    b = series_div(series_mul(HM.subs_power(2), HR, hi + 2 * max(0, -HM.low)), HR.subs_power(2) * 2, hi)
    return (a + b).truncate(hi), (a - b).truncate(hi)


def check_lemma_hilbert_formulas(M: PresentedModule, N: int = 8) -> Verdict:
    """Both Hilbert-series formulas for ``S^2 M`` and ``wedge^2 M`` when ``Tor_i(M, M) = 0`` on ``[1, N]``."""
    R = M.ring
    R.field.require_odd("the S^2 / wedge^2 Hilbert formulas")
    h = inputs_hash(M)
    free = M.is_free()
    if not free:
        rep = tor(M, M, (1, N), stop_at_first=True)
        if not rep.vanishes():
            return Verdict(
                "square-hilbert-formulas",
                h,
                [1, N],
                None,
                tags=["inapplicable"],
                detail={"tor_nonvanishing": rep.nonvanishing()},
            )
    sq = ModuleSquares(M)
    HR, HM = R.hilbert_polynomial(), M.hilbert()
    HS, HW = sq.sym2.hilbert(), sq.wedge2.hilbert()
    lo = 2 * HM.low if not HM.is_zero() else 0
    hi = max(HS.high, HW.high, 2 * HM.high, lo) + R.top_degree + 2
    fs, fw = square_hilbert_formulas(HR, HM, hi)
    bad_s = _first_mismatch(HS, fs, lo, hi)
    bad_w = _first_mismatch(HW, fw, lo, hi)
    ok = bad_s is None and bad_w is None
    bad = bad_s if bad_s is not None else bad_w
    return Verdict(
        "square-hilbert-formulas",
        h,
        [1, N],
        ok,
        bad,
        tags=["window-conditional"] + (["free"] if free else []),
        detail={
            "degrees": [lo, hi],
            "H_S2": _series_json(HS, lo, hi),
            "formula_S2": _series_json(fs, lo, hi),
            "H_W2": _series_json(HW, lo, hi),
            "formula_W2": _series_json(fw, lo, hi),
        },
    )


@dataclass
class EpsilonCheck:
    rhs: LaurentPoly
    rhs_at_one: Fraction
    eps_wedge: LaurentPoly | None

    @property
    def vanishes_at_one(self) -> bool:
        return self.rhs_at_one == 0

    def to_json(self):
        return {
            "rhs": self.rhs.to_json(),
            "rhs_at_1": _jsonnum(self.rhs_at_one),
            "eps_wedge2": None if self.eps_wedge is None else self.eps_wedge.to_json(),
        }


def check_epsilon_identity(eps_R: LaurentPoly, eps_M: LaurentPoly) -> EpsilonCheck:
    """Solve ``eps_R(t) eps_R(t^2) eps_W(t) = eps_M(t)^2 eps_R(t^2) - eps_M(t^2) eps_R(t)^2`` for ``eps_W``."""
    rhs = eps_M * eps_M * eps_R.subs_power(2) - eps_M.subs_power(2) * eps_R * eps_R
    lhs_factor = eps_R * eps_R.subs_power(2)
    q = rhs.divmod_exact(lhs_factor)
    return EpsilonCheck(rhs, rhs.at_one(), q)


@dataclass
class SemidualizingSeriesCheck:
    lhs: LaurentPoly
    rhs: LaurentPoly
    passed: bool
    e_R: Fraction
    e_C: Fraction
    multiplicities_equal: bool

    def to_json(self):
        return {
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "pass": self.passed,
            "e_R": _jsonnum(self.e_R),
            "e_C": _jsonnum(self.e_C),
            "e_C_equals_e_R": self.multiplicities_equal,
        }


def check_ab97(H_R: LaurentPoly, H_C: LaurentPoly) -> SemidualizingSeriesCheck:
    """``H_R(1/t) H_R(t) = H_C(1/t) H_C(t)``; on success ``e(C)^2 = e(R)^2`` forces ``e(C) = e(R)``."""
    lhs = H_R.subs_power(-1) * H_R
    rhs = H_C.subs_power(-1) * H_C
    eR, eC = Fraction(H_R.at_one()), Fraction(H_C.at_one())
    ok = lhs == rhs
    # both multiplicities are positive, so equal squares give equal values
    return SemidualizingSeriesCheck(lhs, rhs, ok, eR, eC, ok and eR * eR == eC * eC and eR == eC)
