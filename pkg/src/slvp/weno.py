"""Public WENO interpolation interface.

Scalar building blocks (candidates, weights, indicators) are exposed
for testing and reuse; ``interp1d``/``interp2d`` evaluate fields at
arbitrary points through the selected backend.  The convention for a
six-point stencil (f0..f5) = f_{i-3}..f_{i+2} with local coordinate
xi = (x - x_i)/dx in [-1, 0] is shared with ``_weno_core``.
"""
import numpy as np

from . import _weno_core as _c
from . import _weno_numpy
from . import backend

DEFAULT_EPS = 1e-6


def candidate_polys(stencil, xi):
    """Cubic Lagrange candidates of the three 4-point substencils at xi."""
    f0, f1, f2, f3, f4, f5 = stencil
    return _c.cands6(f0, f1, f2, f3, f4, f5, xi)


def linear_weights(xi):
    return _c.gammas6(xi)


def smoothness_indicators(stencil):
    f0, f1, f2, f3, f4, f5 = stencil
    return _c.betas6(f0, f1, f2, f3, f4, f5)


def nonlinear_weights(gammas, betas, eps=DEFAULT_EPS):
    g1, g2, g3 = gammas
    b1, b2, b3 = betas
    return _c.weights3(g1, g2, g3, b1, b2, b3, eps)


def weno6_value(stencil, xi, eps=DEFAULT_EPS):
    f0, f1, f2, f3, f4, f5 = stencil
    return _c.weno6(f0, f1, f2, f3, f4, f5, xi, eps)


def interp1d(values, targets, order=6, *, boundary="periodic", lo=0.0,
             spacing=1.0, eps=DEFAULT_EPS, nonlinear=True):
    """Interpolate a 1-D nodal array at arbitrary target coordinates.

    Nodes sit at lo + (m + 1/2)*spacing.  With boundary="periodic" the
    targets wrap; with boundary="zero" values outside the node range are
    taken from zero ghosts and targets beyond the domain return 0.
    """
    targets = np.asarray(targets, dtype=np.float64)
    scalar = targets.ndim == 0
    xs = np.atleast_1d(targets).ravel().astype(np.float64)
    values = np.asarray(values, dtype=np.float64)
    n = values.shape[0]

    if boundary == "periodic":
        if nonlinear:
            out = backend.interp1d_points(values, lo, spacing, xs, order, eps)
        else:
            out = _linear_interp1d_periodic(values, lo, spacing, xs, order)
    elif boundary == "zero":
        out = _interp1d_zero(values, lo, spacing, xs, order, eps, nonlinear)
    else:
        raise ValueError(f"unknown boundary {boundary!r}")

    out = out.reshape(np.atleast_1d(targets).shape)
    return float(out[0]) if scalar else out


def interp2d(values, grid, x, v, order=6, eps=DEFAULT_EPS, nonlinear=True):
    """Tensor-product interpolation of a phase-space field at (x, v).

    Sweeps v first, then x.  Points with |v| > v_max evaluate to 0; x is
    wrapped periodically.
    """
    x = np.asarray(x, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    scalar = x.ndim == 0 and v.ndim == 0
    xs, vs = np.broadcast_arrays(np.atleast_1d(x), np.atleast_1d(v))
    shape = xs.shape
    fpad = backend.pad_v(np.asarray(values, dtype=np.float64))
    if nonlinear:
        out = backend.interp2d_points(fpad, grid, xs.ravel(), vs.ravel(),
                                      order, eps)
    else:
        out = _linear_interp2d(fpad, grid, xs.ravel(), vs.ravel(), order)
    out = out.reshape(shape)
    return float(out[0]) if scalar else out


# -- linear-weight (smooth-regime) evaluation, used by exactness tests --

def _linear_kernels(order):
    if order == 6:
        return lambda f, xi: _c.linear6(f[0], f[1], f[2], f[3], f[4], f[5], xi)
    if order == 4:
        return lambda f, xi: _c.linear4(f[0], f[1], f[2], f[3], xi)
    return lambda f, xi: _c.interp2(f[0], f[1], xi)


def _linear_interp1d_periodic(values, lo, spacing, xs, order):
    n = values.shape[0]
    xw = lo + np.mod(xs - lo, n * spacing)
    i, xi = _weno_numpy._locate(xw, lo, spacing)
    half = order // 2
    idx = (i[None, :] + np.arange(-half, half)[:, None]) % n
    return _linear_kernels(order)(values[idx], xi)


def _interp1d_zero(values, lo, spacing, xs, order, eps, nonlinear):
    n = values.shape[0]
    hi = lo + n * spacing
    inside = (xs >= lo) & (xs <= hi)
    vpad = np.zeros(n + 6)
    vpad[3:n + 3] = values
    i, xi = _weno_numpy._locate(np.where(inside, xs, lo), lo, spacing)
    half = order // 2
    idx = i[None, :] + np.arange(-half, half)[:, None] + 3
    f = vpad[idx]
    if nonlinear:
        if order == 6:
            out = _c.weno6(f[0], f[1], f[2], f[3], f[4], f[5], xi, eps)
        elif order == 4:
            out = _c.weno4(f[0], f[1], f[2], f[3], xi, eps)
        else:
            out = _c.interp2(f[0], f[1], xi)
    else:
        out = _linear_kernels(order)(f, xi)
    return np.where(inside, out, 0.0)


def _linear_interp2d(fpad, grid, xs, vs, order):
    inside = (vs >= -grid.v_max) & (vs <= grid.v_max)
    xw = grid.wrap_x(xs)
    i, xi = _weno_numpy._locate(xw, grid.x_lo, grid.dx)
    j, xiv = _weno_numpy._locate(np.where(inside, vs, 0.0), -grid.v_max, grid.dv)
    half = order // 2
    cols = (i[None, :] + np.arange(-half, half)[:, None]) % grid.n_x
    rows = j[None, :] + (np.arange(order) + 3 - half)[:, None]
    vals = fpad[cols[:, None, :], rows[None, :, :]]
    kern = _linear_kernels(order)
    g = kern(np.moveaxis(vals, 1, 0), xiv[None, :])
    out = kern(g, xi)
    return np.where(inside, out, 0.0)
