#!/usr/bin/env python3
"""Throughput comparison of the numba and numpy interpolation backends.

Times the 2-D interpolation kernel (the solver's hot spot), the 1-D
periodic kernel, and a full solver step driven through each backend.

    python3 benchmarks/bench_backends.py [--n 128] [--repeats 5]
"""
import argparse
import time

import numpy as np

from slvp import _weno_numpy
from slvp.backend import interp1d_points, interp2d_points, pad_v
from slvp.core import RunConfig
from slvp import solver

try:
    from slvp import _weno_numba
except ImportError:
    _weno_numba = None


def timeit(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(n, repeats):
    rng = np.random.default_rng(0)
    cfg = RunConfig(problem="weak_landau", n_x=n, n_v=n)
    grid = solver.build_grid(cfg)
    f = rng.random((n, n))
    fpad = pad_v(f)
    xs = rng.uniform(grid.x_lo, grid.x_hi, n * n)
    vs = rng.uniform(-grid.v_max, grid.v_max, n * n)
    e = rng.random(n)
    et = rng.uniform(0.0, grid.length, n * n)

    impls = [("numpy", _weno_numpy)]
    if _weno_numba is not None:
        impls.insert(0, ("numba", _weno_numba))

    results = {}
    for name, impl in impls:
        interp2d_points(fpad, grid, xs, vs, 6, 1e-6, impl=impl)  # warm up
        t2d = timeit(lambda: interp2d_points(fpad, grid, xs, vs, 6, 1e-6,
                                             impl=impl), repeats)
        t1d = timeit(lambda: interp1d_points(e, grid.x_lo, grid.dx, et, 6,
                                             1e-6, impl=impl), repeats)
        results[name] = (t2d, t1d)
        print(f"{name:>6}: interp2d {n * n / t2d / 1e6:7.2f} Mpts/s "
              f"({t2d * 1e3:7.2f} ms)   interp1d {n * n / t1d / 1e6:7.2f} "
              f"Mpts/s ({t1d * 1e3:7.2f} ms)")
    if len(results) == 2:
        s2 = results["numpy"][0] / results["numba"][0]
        s1 = results["numpy"][1] / results["numba"][1]
        print(f"speedup numba/numpy: interp2d {s2:.1f}x, interp1d {s1:.1f}x")

    # agreement spot check
    if _weno_numba is not None:
        a = interp2d_points(fpad, grid, xs[:5000], vs[:5000], 6, 1e-6,
                            impl=_weno_numba)
        b = interp2d_points(fpad, grid, xs[:5000], vs[:5000], 6, 1e-6,
                            impl=_weno_numpy)
        print(f"max backend disagreement: {np.max(np.abs(a - b)):.2e}")


def bench_step(n, repeats):
    cfg = RunConfig(problem="weak_landau", n_x=n, n_v=n, order=3)
    state, grid = solver.initial_state(cfg)
    dt = solver.compute_dt(grid, state.fields.E, 5.0)
    solver.step(state, dt, cfg, grid)  # warm up
    t = timeit(lambda: solver.step(state, dt, cfg, grid), repeats)
    print(f"full third-order step at {n}x{n} under the active backend: "
          f"{t * 1e3:.1f} ms")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=128)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    if _weno_numba is None:
        print("numba unavailable; timing the numpy backend only")
    bench_kernels(args.n, args.repeats)
    bench_step(args.n, args.repeats)


if __name__ == "__main__":
    main()
