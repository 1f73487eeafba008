"""Command-line entry point: ``torpersist <command> ...``.

Exit codes: 0 when every check passes, 2 on an anomaly, 3 when a
falsification witness was emitted.
"""

from __future__ import annotations

import argparse
import sys

from .complexes import ext, tor
from .harness import EXIT_ANOMALY, EXIT_FALSIFIED, EXIT_OK, ExperimentConfig, csv_summary, is_m3zero, run_experiment
from .identities import (
    check_ab97,
    check_epsilon_identity,
    check_hilbert_poincare,
    check_lemma_hilbert_formulas,
    check_poincare_s2,
)
from .io import canonical_json, load_module, load_ring, write_text
from .modules import free_module
from .powers import decompose_tensor_square
from .series import LaurentPoly, multiplicity


def _emit(obj, out=None):
    text = canonical_json(obj)
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _parse_poly(text: str) -> LaurentPoly:
    """``"1,2,1"`` -> ``1 + 2t + t^2``."""
    return LaurentPoly({i: int(c) for i, c in enumerate(text.split(","))})


def cmd_ring_info(args) -> int:
    R = load_ring(args.ring, args.char)
    H = R.hilbert_series(args.cutoff)
    info = {
        "ring": R.to_json(),
        "groebner_basis": [str(g) for g in R.gb],
        "hilbert_series": H.to_json(),
        "krull_dim": R.krull_dim,
        "mu_m": R.mu_maximal_ideal,
        "embedding_codim": R.embedding_codim(),
        "multiplicity": multiplicity(H),
        "artinian": R.is_artinian,
    }
    if R.is_artinian:
        info.update(
            {
                "top_degree": R.top_degree,
                "length": R.length,
                "type": R.type,
                "gorenstein": R.is_gorenstein,
                "m3zero": is_m3zero(R),
            }
        )
    _emit(info, args.out)
    return EXIT_OK


def cmd_module_resolve(args) -> int:
    R = load_ring(args.ring, args.char)
    M = load_module(R, args.module)
    res = M.resolution.extend(args.steps)
    table = res.betti(args.steps)
    if not args.json:
        print(table.grid())
    _emit(
        {
            "betti": table.to_json(),
            "exact": res.is_exact(args.steps),
            "minimal": res.is_minimal(args.steps),
            "differentials": {str(i): res.differential(i).to_json() for i in range(1, args.steps + 1)},
        },
        args.out,
    )
    return EXIT_OK


def _homology_cmd(op):
    def run(args) -> int:
        R = load_ring(args.ring, args.char)
        M = load_module(R, args.module)
        if args.other is None:
            N = M if op == "tor" else free_module(R)
        else:
            N = load_module(R, args.other)
        fn = tor if op == "tor" else ext
        rep = fn(M, N.structured, (args.lo, args.window))
        _emit(rep.to_json(), args.out)
        return EXIT_OK

    return run


def cmd_powers(args) -> int:
    R = load_ring(args.ring, args.char)
    M = load_module(R, args.module)
    d = decompose_tensor_square(M)
    sq = d.pop("squares")
    target = sq.sym2 if args.which == "s2" else sq.wedge2
    _emit(
        {
            "which": args.which,
            "hilbert": target.hilbert().to_json(),
            "presentation": target.minimal_presentation().to_json(),
            "decomposition": d,
        },
        args.out,
    )
    return EXIT_OK if d["pass"] else EXIT_ANOMALY


def cmd_series_check(args) -> int:
    name = args.identity
    if name == "epsilon":
        c = check_epsilon_identity(_parse_poly(args.eps_r), _parse_poly(args.eps_m))
        _emit(c.to_json(), args.out)
        return EXIT_OK
    R = load_ring(args.ring, args.char)
    if name == "ab97":
        C = load_module(R, args.module or "omega")
        c = check_ab97(R.hilbert_polynomial(), C.hilbert())
        _emit(c.to_json(), args.out)
        return EXIT_OK if c.passed else EXIT_FALSIFIED
    M = load_module(R, args.module or "k")
    if name == "hilbert-poincare":
        v = check_hilbert_poincare(M, args.window)
    elif name == "poincare-s2":
        v = check_poincare_s2(M.resolution.complex(args.window))
    elif name == "lemma":
        v = check_lemma_hilbert_formulas(M, args.window)
    else:
        raise SystemExit(f"unknown identity {name!r}")
    _emit(v.to_json(), args.out)
    return EXIT_FALSIFIED if v.passed is False else EXIT_OK


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        args.name,
        seed=args.seed,
        trials=args.trials,
        window=args.window,
        characteristic=101 if args.char is None else args.char,
        rings=args.rings,
        jobs=args.jobs,
        char_check=args.char_check,
        check_trials=args.check_trials,
    )
    report = run_experiment(cfg)
    _emit(report, args.out)
    if args.csv:
        write_text(args.csv, csv_summary(report))
    code = report["summary"]["exit_code"]
    print(f"{args.name}: exit {code} {report['summary']['counts']}", file=sys.stderr)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="torpersist", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(q, module=True):
        q.add_argument("ring", help="ring JSON file or inline JSON")
        if module:
            q.add_argument("module", help="module JSON file, inline JSON, or one of R k m omega")
        q.add_argument("--char", type=int, default=None, help="override the field characteristic (0 = Q)")
        q.add_argument("--out", default=None, help="write JSON here instead of stdout")

    ring = sub.add_parser("ring").add_subparsers(dest="sub", required=True)
    q = ring.add_parser("info")
    common(q, module=False)
    q.add_argument("--cutoff", type=int, default=10)
    q.set_defaults(fn=cmd_ring_info)

    module = sub.add_parser("module").add_subparsers(dest="sub", required=True)
    q = module.add_parser("resolve")
    common(q)
    q.add_argument("--steps", type=int, default=5)
    q.add_argument("--json", action="store_true", help="skip the Betti grid")
    q.set_defaults(fn=cmd_module_resolve)

    for op in ("tor", "ext"):
        q = sub.add_parser(op)
        common(q)
        q.add_argument("other", nargs="?", default=None, help="second argument (tor: defaults to M, ext: to R)")
        q.add_argument("--window", type=int, default=8)
        q.add_argument("--lo", type=int, default=0)
        q.set_defaults(fn=_homology_cmd(op))

    q = sub.add_parser("powers")
    q.add_argument("which", choices=("s2", "wedge2"))
    common(q)
    q.set_defaults(fn=cmd_powers)

    series = sub.add_parser("series").add_subparsers(dest="sub", required=True)
    q = series.add_parser("check")
    q.add_argument("identity", choices=("hilbert-poincare", "poincare-s2", "lemma", "epsilon", "ab97"))
    q.add_argument("ring", nargs="?", default=None)
    q.add_argument("module", nargs="?", default=None)
    q.add_argument("--window", type=int, default=8)
    q.add_argument("--eps-r", default="1,1", help="coefficients of eps_R, constant first")
    q.add_argument("--eps-m", default="1,1", help="coefficients of eps_M, constant first")
    q.add_argument("--char", type=int, default=None)
    q.add_argument("--out", default=None)
    q.set_defaults(fn=cmd_series_check)

    q = sub.add_parser("experiment")
    q.add_argument("name", choices=("m3zero", "length", "tachikawa", "semidualizing"))
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--window", type=int, default=8)
    q.add_argument("--rings", choices=("curated", "random", "mixed"), default="curated")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--char", type=int, default=None)
    q.add_argument("--char-check", action="store_true", help="rerun a sample in F_7 and over Q")
    q.add_argument("--check-trials", type=int, default=50)
    q.add_argument("--out", default=None)
    q.add_argument("--csv", default=None)
    q.set_defaults(fn=cmd_experiment)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
