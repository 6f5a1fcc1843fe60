#!/usr/bin/env python3
"""Benchmark the numba and pure-numpy variants of the hot kernels.

Workload mirrors the zero-extraction inner loop: a degree-500 series
evaluated over a bracketing grid, the forward recurrence over the same
grid, and safeguarded refinement of every sign-change bracket.

Run with SOBOLEV_MH_PURE_NUMPY=1 to check the selection flag; this script
itself times both implementations side by side when numba is available.
"""

import time

import numpy as np

from sobolev_mh import kernels
from sobolev_mh.jacobi import derivative_series
from sobolev_mh.presets import SETUPS
from sobolev_mh.sobolev import sobolev_polynomial


def _timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    print(f"selected backend: {kernels.backend_name()} "
          f"(numba available: {kernels.NUMBA_ENABLED})")
    setup = SETUPS["critical-small-mass"]
    series = sobolev_polynomial(setup, 500)
    c = series.coeffs
    a, b = series.params.a, series.params.b
    A, B, C = kernels.jacobi_recurrence(len(c) + 1, a, b)
    d = derivative_series(series)
    Ad, Bd, Cd = kernels.jacobi_recurrence(len(d.coeffs) + 1, d.params.a, d.params.b)
    grid = np.unique(np.concatenate([
        np.cos(np.linspace(0.0, np.pi, 5010)),
        1.0 - np.arange(0.2, 300.0, 0.2) ** 2 / (2.0 * 500.0 ** 2),
    ]))

    variants = [("numpy", kernels._clenshaw_numpy, kernels._forward_numpy,
                 kernels._refine_numpy)]
    if kernels.NUMBA_ENABLED:
        variants.append(("numba", kernels._clenshaw_numba, kernels._forward_numba,
                         kernels._refine_numba))

    rows = []
    for name, clenshaw, forward, refine in variants:
        vals = clenshaw(c, A, B, C, grid)  # warmup / jit compile
        t_clen, vals = _timeit(lambda: clenshaw(c, A, B, C, grid))
        t_fwd, _ = _timeit(lambda: forward(500, A, B, C, grid))
        sgn = np.sign(vals)
        idx = np.flatnonzero(sgn[:-1] * sgn[1:] < 0.0)
        lo, hi, flo = grid[idx], grid[idx + 1], vals[idx]
        refine(c, A, B, C, d.coeffs, Ad, Bd, Cd, lo, hi, flo)  # warmup
        t_ref, roots = _timeit(
            lambda: refine(c, A, B, C, d.coeffs, Ad, Bd, Cd, lo, hi, flo))
        rows.append((name, t_clen, t_fwd, t_ref, len(roots)))

    print(f"{'backend':8s} {'clenshaw(5k pts)':>18s} {'forward(5k pts)':>17s} "
          f"{'refine':>12s} {'roots':>6s}")
    for name, t1, t2, t3, nr in rows:
        print(f"{name:8s} {t1 * 1e3:15.2f} ms {t2 * 1e3:14.2f} ms "
              f"{t3 * 1e3:9.2f} ms {nr:6d}")
    if len(rows) == 2:
        print(f"speedup (numpy/numba): clenshaw {rows[0][1] / rows[1][1]:.1f}x, "
              f"forward {rows[0][2] / rows[1][2]:.1f}x, "
              f"refine {rows[0][3] / rows[1][3]:.1f}x")


if __name__ == "__main__":
    main()
