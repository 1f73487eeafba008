"""Seeded verification campaigns over small Artinian graded algebras.

Every campaign is a pure function of its config: each trial draws from its own
``random.Random`` seeded by ``(seed, trial)``, so a report is byte-identical
across reruns and independent of how trials are scheduled.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .complexes import ext, hom_module, tor
from .field import Field
from .identities import check_ab97, inputs_hash
from .modules import (
    PresentedModule,
    cyclic_module,
    free_module,
    maximal_ideal,
    residue_field,
)
from .ring import RingPresentation
from .series import _jsonnum

EXIT_OK, EXIT_ANOMALY, EXIT_FALSIFIED = 0, 2, 3


# -- rings -----------------------------------------------------------------------


def _ring(field: Field, names: str, relations) -> RingPresentation:
    return RingPresentation(field, list(names), relations=list(relations))


def _all_monomials(names, d):
    return ["*".join(c) for c in _multisets(names, d)]


def _multisets(names, d):
    return combinations_with_replacement(names, d)


def m3zero_rings(field: Field) -> dict:
    return {
        "k[x,y]/(x^2,y^2)": _ring(field, "xy", ["x^2", "y^2"]),
        "k[x,y]/(x^2,xy,y^2)": _ring(field, "xy", ["x^2", "x*y", "y^2"]),
        "k[x,y,z]/(quadrics)": _ring(field, "xyz", _all_monomials("xyz", 2)),
        "k[x,y]/(x^2,xy^2,y^3)": _ring(field, "xy", ["x^2", "x*y^2", "y^3"]),
        "k[x,y,z]/(x^2,y^2,z^2,xyz)": _ring(field, "xyz", ["x^2", "y^2", "z^2", "x*y*z"]),
    }


def gorenstein_rings(field: Field) -> dict:
    return {
        "k": _ring(field, "x", ["x"]),
        "k[x]/(x^3)": _ring(field, "x", ["x^3"]),
        "k[x,y]/(x^2,y^2)": _ring(field, "xy", ["x^2", "y^2"]),
        "k[x,y]/(x^2,y^3)": _ring(field, "xy", ["x^2", "y^3"]),
        "k[x,y]/(x^2+y^2,xy)": _ring(field, "xy", ["x^2+y^2", "x*y"]),
        "k[x,y,z]/(x^2,y^2,z^2)": _ring(field, "xyz", ["x^2", "y^2", "z^2"]),
    }


def non_gorenstein_rings(field: Field) -> dict:
    return {
        "k[x,y]/(x^2,xy,y^2)": _ring(field, "xy", ["x^2", "x*y", "y^2"]),
        "k[x,y]/(x^2,xy,y^3)": _ring(field, "xy", ["x^2", "x*y", "y^3"]),
        "k[x,y,z]/(quadrics)": _ring(field, "xyz", _all_monomials("xyz", 2)),
        "k[x,y,z]/(x^2,y^2,z^2,xyz)": _ring(field, "xyz", ["x^2", "y^2", "z^2", "x*y*z"]),
    }


def is_m3zero(R: RingPresentation) -> bool:
    return all(w == 1 for w in R.weights) and R.is_artinian and not R.basis(3)


def _coeff(rng: random.Random) -> int:
    return rng.choice((-3, -2, -1, 1, 1, 2, 3))


def random_polynomial(rng: random.Random, monomials, density: float = 0.6) -> str:
    terms = [f"{_coeff(rng)}*{m}" for m in monomials if rng.random() < density]
    if not terms and monomials:
        terms = [f"{_coeff(rng)}*{rng.choice(monomials)}"]
    return " + ".join(terms) or "0"


def random_ring(rng: random.Random, field: Field, m3zero: bool = False, max_vars: int = 3, attempts: int = 50):
    """Random Artinian ``k[x_1..x_n]/I`` with relations of degree 2 and 3 (``None`` if every attempt fails)."""
    letters = "xyzw"
    for _ in range(attempts):
        n = rng.randint(2, min(max_vars, 4))
        names = letters[:n]
        quad = ["*".join(c) for c in _multisets(names, 2)]
        cub = _all_monomials(names, 3)
        if m3zero:
            rels = [random_polynomial(rng, quad) for _ in range(rng.randint(1, len(quad)))] + cub
        else:
            rels = [random_polynomial(rng, quad) for _ in range(rng.randint(1, len(quad)))]
            rels += [random_polynomial(rng, cub, 0.3) for _ in range(rng.randint(0, n))]
        R = _ring(field, names, rels)
        if not R.is_artinian or (m3zero and not is_m3zero(R)):
            continue
        if R.length > 12:
            continue
        return R
    return None


def random_element(rng: random.Random, R: RingPresentation, d: int, density: float = 0.5) -> str:
    mons = [R.poly_ring.mono_str(m) for m in R.basis(d)]
    if not mons:
        return "0"
    return random_polynomial(rng, mons, density)


def random_module(rng: random.Random, R: RingPresentation, max_gens: int = 3, max_rels: int = 5) -> PresentedModule:
    """Minimalized random graded module; mixes free, vector-space and general presentations."""
    s = R.top_degree or 0
    kind = rng.random()
    if kind < 0.15:
        return free_module(R, sorted(rng.randint(0, 1) for _ in range(rng.randint(1, 2))))
    if kind < 0.2:
        return residue_field(R).power(rng.randint(1, 2))
    n = rng.randint(1, max_gens)
    targets = sorted(rng.choice((0, 0, 0, 1)) for _ in range(n))
    m = rng.randint(1, max_rels)
    sources = sorted(rng.choice(targets) + rng.randint(1, max(1, min(2, s))) for _ in range(m))
    rows = []
    for a in targets:
        row = []
        for b in sources:
            e = b - a
            row.append(random_element(rng, R, e) if e >= 1 and rng.random() < 0.7 else "0")
        rows.append(row)
    M = PresentedModule.from_strings(R, targets, sources, rows)
    if kind > 0.9:
        M = M.direct_sum(free_module(R, [0]))
    return M.minimal_presentation()


def random_instances(seed: int, params: dict | None = None):
    """Deterministic stream of ``(ring, module)``; rings filtered to Artinian (and m^3 = 0 on request)."""
    params = dict(params or {})
    field = Field(params.get("characteristic", 101))
    m3 = params.get("m3zero", False)
    i = 0
    while True:
        rng = random.Random(f"{seed}:{i}")
        i += 1
        R = random_ring(rng, field, m3zero=m3, max_vars=params.get("max_vars", 3))
        if R is None:
            continue
        yield R, random_module(rng, R, params.get("max_gens", 3), params.get("max_rels", 5))


# -- configs and reports -------------------------------------------------------------


@dataclass
class ExperimentConfig:
    name: str
    seed: int = 0
    trials: int = 100
    window: int = 8
    characteristic: int = 101
    rings: str = "curated"  # curated | random | mixed
    jobs: int = 1
    char_check: bool = False
    check_trials: int = 50
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        if self.name == "m3zero" and self.window < 5:
            raise ValueError("the m^3 = 0 campaign needs a Tor window reaching 5")

    def to_json(self):
        out = asdict(self)
        out.pop("jobs")  # scheduling must not change the report
        return out


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1, default=_jsonnum) + "\n"


def report_status(report: dict) -> int:
    s = report["summary"]
    if s.get("witnesses"):
        return EXIT_FALSIFIED
    if s.get("anomalies") or s.get("inconsistencies"):
        return EXIT_ANOMALY
    return EXIT_OK


def csv_summary(report: dict) -> str:
    rows = report.get("trials", [])
    keys = sorted({k for r in rows for k, v in r.items() if not isinstance(v, (dict, list))})
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=keys, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: r.get(k) for k in keys})
    return buf.getvalue()


def _map(fn, args, jobs):
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(fn, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        out = [fn(a) for a in args]
    return sorted(out, key=lambda r: r["trial"])


# -- proof ledger --------------------------------------------------------------------


@dataclass
class LedgerRecord:
    b: int
    length_N1: int
    gamma_N1: Fraction
    mu_L: int
    mu_m: int
    type_R: int
    identity_1: bool
    identity_2: bool
    identity_3: bool
    wedge_lhs: int
    wedge_rhs: int
    inequality_holds: bool
    tor: dict

    def to_json(self):
        out = asdict(self)
        out["gamma_N1"] = _jsonnum(self.gamma_N1)
        out["tor"] = {str(k): v for k, v in sorted(self.tor.items())}
        return out


def proof_ledger(R: RingPresentation, M: PresentedModule, window=(2, 5), tor_report=None) -> LedgerRecord:
    """Numbers entering the m^3 = 0 freeness argument, computed for a non-free ``M``."""
    if M.is_free():
        raise ValueError("the ledger is defined for non-free modules only")
    res = M.resolution.extend(3)
    N1 = PresentedModule(res.differential(2))
    b = res.rank(1)
    lN = N1.length
    gamma = Fraction(lN, b) - 1
    mu_L = res.rank(2)
    mu_m, r = R.mu_maximal_ideal, R.type
    if tor_report is None:
        tor_report = tor(M, M, window)
    lhs, rhs = comb(mu_L, 2), r * comb(b, 2)
    return LedgerRecord(
        b=b,
        length_N1=lN,
        gamma_N1=gamma,
        mu_L=mu_L,
        mu_m=mu_m,
        type_R=r,
        identity_1=mu_L == gamma * b,
        identity_2=mu_m == 2 * gamma,
        identity_3=r == gamma * gamma,
        wedge_lhs=lhs,
        wedge_rhs=rhs,
        inequality_holds=lhs <= rhs,
        tor=tor_report.totals(),
    )


def _witness(R, M, window, what):
    return {"claim": what, "ring": R.to_json(), "module": M.to_json(), "window": list(window)}


# -- m^3 = 0 campaign ----------------------------------------------------------------------


def _m3zero_trial(arg):
    cfg, t = arg
    field = Field(cfg["characteristic"])
    rng = random.Random(f"{cfg['seed']}:{t}")
    curated = m3zero_rings(field)
    names = sorted(curated)
    mode = cfg["rings"]
    use_random = mode == "random" or (mode == "mixed" and rng.random() < 0.25)
    R, rname = None, None
    if use_random:
        R = random_ring(rng, field, m3zero=True)
        rname = "random"
    if R is None:
        rname = names[t % len(names)]
        R = curated[rname]
    rec = {"trial": t, "ring": rname}
    if not is_m3zero(R):
        rec["status"] = "rejected-ring"
        return rec
    M = random_module(rng, R)
    return _m3zero_check(R, M, rec, cfg.get("ledger", True))


def _m3zero_check(R, M, rec, ledger=True):
    free = M.is_free()
    rec.update({"ring_hash": inputs_hash(R), "module": M.to_json(), "length": M.length, "mu": M.mu, "free": free})
    rep = tor(M, M, (2, 5), stop_at_first=not free)
    rec["tor"] = rep.to_json()
    vanish = rep.vanishes(2, 5) and rep.window[1] == 5
    rec["tor_vanishes"] = vanish
    rec["first_nonvanishing"] = rep.nonvanishing()[0] if rep.entries else None
    if free:
        rec["status"] = "free-pass" if vanish else "inconsistent"
    elif vanish:
        rec["status"] = "witness"
        rec["witness"] = _witness(R, M, (2, 5), "Tor_{2..5}(M,M)=0 for non-free M over m^3=0 ring")
    else:
        rec["status"] = "nonfree-consistent"
        if ledger:
            rec["ledger"] = proof_ledger(R, M, tor_report=rep).to_json()
    return rec


def _summarize(trials, statuses):
    counts = {}
    for r in trials:
        counts[r["status"]] = counts.get(r["status"], 0) + 1
    return {
        "counts": dict(sorted(counts.items())),
        "witnesses": sum(counts.get(s, 0) for s in statuses.get("witness", ())),
        "anomalies": sum(counts.get(s, 0) for s in statuses.get("anomaly", ())),
        "inconsistencies": sum(counts.get(s, 0) for s in statuses.get("inconsistent", ())),
    }


M3_STATUSES = {"witness": ("witness",), "inconsistent": ("inconsistent",)}


def experiment_m3zero(cfg: ExperimentConfig) -> dict:
    c = cfg.to_json()
    trials = _map(_m3zero_trial, [(c, t) for t in range(cfg.trials)], cfg.jobs)
    summary = _summarize(trials, M3_STATUSES)
    summary["nonfree_fraction"] = _jsonnum(
        Fraction(sum(1 for r in trials if r.get("free") is False), max(1, sum(1 for r in trials if "free" in r)))
    )
    report = {"experiment": "m3zero", "config": c, "summary": summary, "trials": trials}
    if cfg.char_check:
        report["char_check"] = {}
        for p in (7, 0):
            c2 = dict(c, characteristic=p, ledger=False)
            sub = _map(_m3zero_trial, [(c2, t) for t in range(min(cfg.check_trials, cfg.trials))], cfg.jobs)
            s2 = _summarize(sub, M3_STATUSES)
            report["char_check"][str(p)] = {
                "summary": s2,
                "witness_trials": [r["trial"] for r in sub if r["status"] == "witness"],
            }
            summary["witnesses"] += s2["witnesses"]
            summary["inconsistencies"] += s2["inconsistencies"]
    return report


# -- length criterion ------------------------------------------------------------------


def length_samples(R: RingPresentation) -> dict:
    """Hand-picked modules of length ``l(R)`` over ``k[x,y]/(x^2,y^2)``."""
    k, m = residue_field(R), maximal_ideal(R)
    Ex = cyclic_module(R, ["x"])
    return {
        "R": free_module(R),
        "R(-1)": free_module(R, [1]),
        "k^4": k.power(4),
        "m+k": m + k,
        "R/(x)+R/(x)": Ex + Ex,
        "R/(x)+R/(y)": Ex + cyclic_module(R, ["y"]),
        "R/(x)+k+k": Ex + k + k,
        "R/(xy)+k": cyclic_module(R, ["x*y"]) + k,
        "R/(x+y)+R/(x-y)": cyclic_module(R, ["x+y"]) + cyclic_module(R, ["x-y"]),
        "m(-1)+k": maximal_ideal(R).shift(1) + k,
    }


def _length_trial(arg):
    cfg, t = arg
    field = Field(cfg["characteristic"])
    R = _ring(field, "xy", ["x^2", "y^2"])
    target = R.length
    rng = random.Random(f"{cfg['seed']}:{t}")
    M = None
    for attempt in range(400):
        cand = random_module(rng, R, max_gens=3, max_rels=5)
        if cand.length == target:
            M = cand
            break
    if M is None:
        return {"trial": t, "status": "no-sample", "attempts": attempt + 1}
    return _length_check(R, M, {"trial": t, "sample": "random"}, cfg["window"])


def _length_check(R, M, rec, N):
    rep = tor(M, M, (1, N), stop_at_first=True)
    vanish = rep.vanishes(1, N) and rep.window[1] == N
    cyclic = M.is_cyclic()
    rec.update(
        {
            "module": M.to_json(),
            "length": M.length,
            "mu": M.mu,
            "cyclic": cyclic,
            "tor": rep.to_json(),
            "tor_vanishes": vanish,
            "first_nonvanishing": rep.nonvanishing()[0] if rep.entries else None,
        }
    )
    if vanish:
        iso = M.certify_isomorphic_to_ring()
        rec["iso_R"] = iso
        if iso:
            rec["status"] = "vanishing-iso-R"
        else:
            rec["status"] = "anomaly-extend-window"
            rec["witness"] = _witness(R, M, (1, N), "Tor_{1..N}(M,M)=0 with l(M)=l(R) but M not certified ~ R")
    else:
        rec["status"] = "nonvanishing" + ("-noncyclic" if not cyclic else "-cyclic")
    return rec


LENGTH_STATUSES = {"anomaly": ("anomaly-extend-window",)}


def experiment_length_criterion(cfg: ExperimentConfig) -> dict:
    c = cfg.to_json()
    R = _ring(Field(cfg.characteristic), "xy", ["x^2", "y^2"])
    curated = []
    for name, M in sorted(length_samples(R).items()):
        M = M.minimal_presentation()
        if M.length != R.length:
            continue
        curated.append(_length_check(R, M, {"trial": -1, "sample": name}, cfg.window))
    trials = _map(_length_trial, [(c, t) for t in range(cfg.trials)], cfg.jobs)
    summary = _summarize(curated + trials, LENGTH_STATUSES)
    summary["noncyclic_without_nonvanishing"] = sum(
        1 for r in curated + trials if r.get("cyclic") is False and r.get("tor_vanishes")
    )
    return {"experiment": "length", "config": c, "summary": summary, "curated": curated, "trials": trials}


# -- Tachikawa -----------------------------------------------------------------------------


def tachikawa_check(R: RingPresentation, N: int = 8, name: str = "") -> dict:
    omega = R.canonical_module().present()
    Rm = free_module(R).structured
    rep = ext(omega, Rm, (1, N), stop_at_first=True)
    vanish = rep.vanishes(1, N) and rep.window[1] == N
    H = R.hilbert_polynomial()
    s = R.top_degree
    palindromic = all(H[d] == H[s - d] for d in range(s + 1))
    r = R.type
    rec = {
        "ring": name or repr(R),
        "ring_json": R.to_json(),
        "type": r,
        "gorenstein": r == 1,
        "hilbert": H.to_list(),
        "palindromic": palindromic,
        "ext": rep.to_json(),
        "ext_vanishes": vanish,
        "first_nonvanishing": rep.nonvanishing()[0] if rep.entries else None,
    }
    if vanish:
        rec["status"] = "vanishing-gorenstein" if r == 1 else "anomaly-extend-window"
    else:
        rec["status"] = "nonvanishing-non-gorenstein" if r > 1 else "inconsistent"
    if r == 1 and not palindromic:
        rec["status"] = "inconsistent"
    return rec


def _tachikawa_trial(arg):
    cfg, t = arg
    field = Field(cfg["characteristic"])
    rng = random.Random(f"{cfg['seed']}:{t}")
    R = random_ring(rng, field)
    if R is None:
        return {"trial": t, "status": "rejected-ring"}
    return dict(tachikawa_check(R, cfg["window"], "random"), trial=t)


TACHIKAWA_STATUSES = {"anomaly": ("anomaly-extend-window",), "inconsistent": ("inconsistent",)}


def experiment_tachikawa(cfg: ExperimentConfig) -> dict:
    c = cfg.to_json()
    field = Field(cfg.characteristic)
    field.require_odd("the Tachikawa campaign")
    curated = []
    for name, R in sorted({**gorenstein_rings(field), **non_gorenstein_rings(field)}.items()):
        curated.append(dict(tachikawa_check(R, cfg.window, name), trial=-1))
    trials = _map(_tachikawa_trial, [(c, t) for t in range(cfg.trials)], cfg.jobs) if cfg.rings != "curated" else []
    summary = _summarize(curated + trials, TACHIKAWA_STATUSES)
    return {"experiment": "tachikawa", "config": c, "summary": summary, "curated": curated, "trials": trials}


# -- semidualizing ----------------------------------------------------------------------------


def semidualizing_check(R: RingPresentation, C: PresentedModule, N: int = 8) -> dict:
    """Semidualizing axioms on a window, the Hilbert-series identity, and the isomorphisms to R or omega they force."""
    End = hom_module(C, C.structured)
    end_ok = End.length == R.length and End.present().is_cyclic()
    rep = ext(C, C.structured, (1, N), stop_at_first=True)
    ext_ok = rep.vanishes(1, N) and rep.window[1] == N
    semi = end_ok and ext_ok
    ab = check_ab97(R.hilbert_polynomial(), C.hilbert())
    rec = {
        "module": C.to_json(),
        "end_length": End.length,
        "end_cyclic": End.present().is_cyclic() if End.length else False,
        "ext_self": rep.to_json(),
        "semidualizing": semi,
        "ab97": ab.to_json(),
    }
    if semi:
        omega = R.canonical_module()
        dual = hom_module(C, omega).present()
        h1 = ext(C, dual.structured, (1, N), stop_at_first=True)
        h2 = ext(dual, C.structured, (1, N), stop_at_first=True)
        rec["ext_C_Cdual_vanishes"] = h1.vanishes(1, N) and h1.window[1] == N
        rec["ext_Cdual_C_vanishes"] = h2.vanishes(1, N) and h2.window[1] == N
        rec["C_iso_R"] = C.certify_isomorphic_to_ring()
        rec["C_iso_omega"] = dual.certify_isomorphic_to_ring()  # Hom(C, omega) ~ R iff C ~ omega
        ok = ab.passed and ab.multiplicities_equal
        if rec["ext_C_Cdual_vanishes"] and not rec["C_iso_R"]:
            ok = False
        if rec["ext_Cdual_C_vanishes"] and not rec["C_iso_omega"]:
            ok = False
        rec["status"] = "semidualizing-consistent" if ok else "inconsistent"
    else:
        rec["status"] = "not-semidualizing"
    return rec


SEMI_STATUSES = {"inconsistent": ("inconsistent",)}


def experiment_semidualizing(cfg: ExperimentConfig) -> dict:
    c = cfg.to_json()
    field = Field(cfg.characteristic)
    field.require_odd("the semidualizing campaign")
    # omega over three-variable non-Gorenstein rings never stops early and its
    # Betti numbers grow like 3^i, so those rings stay out of the full window
    rings = {**gorenstein_rings(field), **{k: R for k, R in non_gorenstein_rings(field).items() if R.nvars <= 2}}
    curated = []
    for name, R in sorted(rings.items()):
        for cname, C in (
            ("R", free_module(R)),
            ("omega", R.canonical_module().present()),
            ("k", residue_field(R)),
        ):
            rec = semidualizing_check(R, C, cfg.window)
            rec.update({"ring": name, "candidate": cname, "trial": -1, "gorenstein": R.is_gorenstein})
            curated.append(rec)
    summary = _summarize(curated, SEMI_STATUSES)
    return {"experiment": "semidualizing", "config": c, "summary": summary, "curated": curated}


EXPERIMENTS = {
    "m3zero": experiment_m3zero,
    "length": experiment_length_criterion,
    "tachikawa": experiment_tachikawa,
    "semidualizing": experiment_semidualizing,
}


def run_experiment(cfg: ExperimentConfig) -> dict:
    try:
        fn = EXPERIMENTS[cfg.name]
    except KeyError:
        raise ValueError(f"unknown experiment {cfg.name!r}; choose from {sorted(EXPERIMENTS)}") from None
    report = fn(cfg)
    report["summary"]["exit_code"] = report_status(report)
    return report
