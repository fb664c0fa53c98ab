"""Pure-numpy fallback for the interpolation kernels.

Vectorizes the same ``_weno_core`` formulas over blocks of target
points.  Slower than the numba path but dependency-free; selected with
``SLVP_BACKEND=numpy``.
"""
import numpy as np

from . import _weno_core as _c

# cap the (stencil, stencil, points) gather buffers at ~48 MB
_BLOCK = 1 << 17


def _locate(coord, lo, spacing):
    s = (coord - lo) / spacing - 0.5
    idx = np.ceil(s).astype(np.int64)
    return idx, s - idx


def _interp_rows6(vals, xi, eps):
    return _c.weno6(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], xi, eps)


def _interp_rows4(vals, xi, eps):
    return _c.weno4(vals[0], vals[1], vals[2], vals[3], xi, eps)


def interp2d_grid(fpad, n_x, x_lo, dx, v_max, dv, xs, vs, order, eps, out):
    for start in range(0, xs.shape[0], _BLOCK):
        sl = slice(start, min(start + _BLOCK, xs.shape[0]))
        out[sl] = _interp2d_block(fpad, n_x, x_lo, dx, v_max, dv,
                                  xs[sl], vs[sl], order, eps)
    return out


def _interp2d_block(fpad, n_x, x_lo, dx, v_max, dv, xs, vs, order, eps):
    finite = np.isfinite(xs) & np.isfinite(vs)
    inside = finite & (vs >= -v_max) & (vs <= v_max)
    i, xi = _locate(np.where(finite, xs, x_lo), x_lo, dx)
    j, xiv = _locate(np.where(inside, vs, 0.0), -v_max, dv)
    half = order // 2
    cols = (i[None, :] + np.arange(-half, half)[:, None]) % n_x
    # pad offset is 3 regardless of order; row 0 of the gather is f_{j-half}
    rows = j[None, :] + (np.arange(order) + 3 - half)[:, None]
    vals = fpad[cols[:, None, :], rows[None, :, :]]   # (order, order, N)
    if order == 6:
        g = _interp_rows6(np.moveaxis(vals, 1, 0), xiv[None, :], eps)
        res = _interp_rows6(g, xi, eps)
    elif order == 4:
        g = _interp_rows4(np.moveaxis(vals, 1, 0), xiv[None, :], eps)
        res = _interp_rows4(g, xi, eps)
    else:
        g = _c.interp2(vals[:, 0, :], vals[:, 1, :], xiv[None, :])
        res = _c.interp2(g[0], g[1], xi)
    return np.where(finite, np.where(inside, res, 0.0), np.nan)


def interp1d_periodic(vals, n, x_lo, dx, xs, order, eps, out):
    finite = np.isfinite(xs)
    i, xi = _locate(np.where(finite, xs, x_lo), x_lo, dx)
    half = order // 2
    idx = (i[None, :] + np.arange(-half, half)[:, None]) % n
    f = vals[idx]
    if order == 6:
        out[:] = _interp_rows6(f, xi, eps)
    elif order == 4:
        out[:] = _interp_rows4(f, xi, eps)
    else:
        out[:] = _c.interp2(f[0], f[1], xi)
    out[~finite] = np.nan
    return out
