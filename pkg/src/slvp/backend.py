"""Kernel backend selection.

The environment variable ``SLVP_BACKEND`` picks the implementation of
the hot interpolation kernels:

    auto   (default) use numba if importable, else pure numpy
    numba  require the jit kernels, raise if numba is missing
    numpy  force the vectorized fallback

Both implementations share the formulas in ``_weno_core`` and agree to
round-off; the benchmark script under benchmarks/ compares their speed.
"""
import os

import numpy as np

_requested = os.environ.get("SLVP_BACKEND", "auto").lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(f"SLVP_BACKEND must be auto, numba or numpy, got {_requested!r}")

if _requested == "numpy":
    from . import _weno_numpy as _impl
    BACKEND = "numpy"
else:
    try:
        from . import _weno_numba as _impl
        BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        from . import _weno_numpy as _impl
        BACKEND = "numpy"

NV_GHOST = 3


def backend_name():
    return BACKEND


def pad_v(values):
    """Zero ghost layers along v, shared by all interpolation orders."""
    n_x, n_v = values.shape
    fpad = np.zeros((n_x, n_v + 2 * NV_GHOST))
    fpad[:, NV_GHOST:n_v + NV_GHOST] = values
    return fpad


def interp2d_points(fpad, grid, xs, vs, order, eps, impl=None):
    """Interpolate a v-padded field at flat point arrays xs, vs."""
    mod = impl if impl is not None else _impl
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    vs = np.ascontiguousarray(vs, dtype=np.float64)
    with np.errstate(invalid="ignore"):      # nan targets wrap to nan
        xw = grid.x_lo + np.mod(xs - grid.x_lo, grid.length)
    out = np.empty(xs.shape[0])
    mod.interp2d_grid(fpad, grid.n_x, grid.x_lo, grid.dx,
                      grid.v_max, grid.dv, xw, vs, order, eps, out)
    return out


def interp1d_points(vals, lo, spacing, xs, order, eps, impl=None):
    """Interpolate a periodic nodal array at flat points xs."""
    mod = impl if impl is not None else _impl
    vals = np.ascontiguousarray(vals, dtype=np.float64)
    n = vals.shape[0]
    length = n * spacing
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    with np.errstate(invalid="ignore"):
        xw = lo + np.mod(xs - lo, length)
    out = np.empty(xs.shape[0])
    mod.interp1d_periodic(vals, n, lo, spacing, xw, order, eps, out)
    return out
