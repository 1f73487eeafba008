"""Compare the numba and numpy row-reduction backends.

Kernel timings run in-process on random dense matrices over F_p.  The
end-to-end timing resolves k over k[x,y,z]/(all quadrics) in a subprocess
per backend, since the backend is fixed at import time.

    python benchmarks/bench_rref.py [--sizes 50 100 200 400] [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from torpersist import _kernels

P = 101

END_TO_END = """
import time
from torpersist.field import Field
from torpersist.ring import RingPresentation
from torpersist.modules import residue_field
R = RingPresentation.from_json({"field": {"kind": "prime", "p": 101},
    "vars": [{"name": v, "weight": 1} for v in "xyz"],
    "relations": ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]})
t = time.perf_counter()
residue_field(R).resolution.extend(%d)
print(time.perf_counter() - t)
"""


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def bench_kernels(sizes, repeat: int) -> None:
    rng = np.random.default_rng(0)
    print(f"{'n':>6} {'numpy (s)':>12} {'numba (s)':>12} {'speedup':>8}")
    for n in sizes:
        # rank-deficient so elimination has real work after the pivots run out
        A = rng.integers(0, P, (n, n // 2)) @ rng.integers(0, P, (n // 2, n)) % P
        A = A.astype(np.int64)
        t_np = best_of(lambda: _kernels.rref_modp_numpy(A.copy(), P), repeat)
        if _kernels.rref_modp_numba is None:
            print(f"{n:>6} {t_np:>12.4f} {'n/a':>12}")
            continue
        _kernels.rref_modp_numba(A[:4, :4].copy(), P)  # compile
        t_nb = best_of(lambda: _kernels.rref_modp_numba(A.copy(), P), repeat)
        piv_np = _kernels.rref_modp_numpy(B1 := A.copy(), P)
        piv_nb = _kernels.rref_modp_numba(B2 := A.copy(), P)
        assert np.array_equal(piv_np, piv_nb) and np.array_equal(B1, B2)
        print(f"{n:>6} {t_np:>12.4f} {t_nb:>12.4f} {t_np / t_nb:>8.1f}")


def bench_end_to_end(steps: int) -> None:
    for label, flag in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, TORPERSIST_DISABLE_NUMBA=flag)
        # first run warms the numba cache
        subprocess.run([sys.executable, "-c", END_TO_END % 2], env=env, check=True, capture_output=True)
        out = subprocess.run([sys.executable, "-c", END_TO_END % steps], env=env, check=True, capture_output=True, text=True)
        print(f"resolve k over 3-variable quadrics to step {steps}, {label}: {float(out.stdout):.3f} s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--steps", type=int, default=5)
    args = ap.parse_args()
    bench_kernels(args.sizes, args.repeat)
    bench_end_to_end(args.steps)


if __name__ == "__main__":
    main()
