"""RK4 throughput: numba kernels against the numpy fallback.

    python3 benchmarks/bench_rk4.py [--steps N] [--repeat R]

Both backends run in the same process (the numpy path is selected per
call), so WEYLCREMONA_NUMBA only matters for the default.
"""

import argparse
import time

import numpy as np

from weylcremona import _kernels
from weylcremona.flows import FlowSpec, rk4_integrate

CASES = [
    ("SP4", FlowSpec.sp4((0.3, 0.4, 0.5)), [0.6, 0.8, 1.0]),
    ("A_even(3)", FlowSpec.a_even(3, [0.1] * 7), [0.5 + 0.05 * j for j in range(7)]),
    ("P_V", FlowSpec.pv((0.2, 0.3, 0.25, 0.15)), [0.4, 0.6, 0.5, 0.7]),
    ("A_odd(3)", FlowSpec.a_odd(3, [0.1] * 8), [0.5 + 0.05 * j for j in range(8)]),
    ("P2", FlowSpec.p2(0.6), [0.1, 0.0]),
]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=20000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    h = 1.0 / args.steps
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable or disabled; timing numpy only")
    print(f"{'system':<10} {'dim':>3} {'numpy [s]':>10} {'numba [s]':>10} {'speedup':>8} {'max |diff|':>11}")
    for name, spec, y0 in CASES:
        run_np = lambda: rk4_integrate(spec, y0, (0.0, 1.0), h, backend="numpy")
        t_np = best_of(run_np, args.repeat)
        if _kernels.HAVE_NUMBA:
            run_nb = lambda: rk4_integrate(spec, y0, (0.0, 1.0), h, backend="numba")
            run_nb()  # compile (or load from cache) outside the timing
            t_nb = best_of(run_nb, args.repeat)
            diff = float(np.max(np.abs(run_np().y - run_nb().y)))
            print(f"{name:<10} {spec.size:>3} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f} {diff:>11.2e}")
        else:
            print(f"{name:<10} {spec.size:>3} {t_np:>10.4f} {'-':>10} {'-':>8} {'-':>11}")


if __name__ == "__main__":
    main()
