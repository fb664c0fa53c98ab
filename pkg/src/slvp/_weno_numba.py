"""Numba-compiled interpolation kernels (the hot path).

The per-point formulas are jitted straight from ``_weno_core`` so both
backends share one source of truth; only the gather loops live here.
All kernels are pure maps over the target points, so results do not
depend on the thread count.
"""
import numpy as np
from numba import njit, prange

from . import _weno_core as _c

_F = njit(cache=True, inline="always")

gammas6 = _F(_c.gammas6)
betas6 = _F(_c.betas6)
cands6 = _F(_c.cands6)
weights3 = _F(_c.weights3)
gammas4 = _F(_c.gammas4)
betas4 = _F(_c.betas4)
cands4 = _F(_c.cands4)


@njit(cache=True, inline="always")
def _weno6(f0, f1, f2, f3, f4, f5, xi, eps):
    g1, g2, g3 = gammas6(xi)
    b1, b2, b3 = betas6(f0, f1, f2, f3, f4, f5)
    w1, w2, w3 = weights3(g1, g2, g3, b1, b2, b3, eps)
    p1, p2, p3 = cands6(f0, f1, f2, f3, f4, f5, xi)
    return w1 * p1 + w2 * p2 + w3 * p3


@njit(cache=True, inline="always")
def _weno4(f0, f1, f2, f3, xi, eps):
    g1, g2 = gammas4(xi)
    b1, b2 = betas4(f0, f1, f2, f3)
    w1 = g1 / ((eps + b1) * (eps + b1))
    w2 = g2 / ((eps + b2) * (eps + b2))
    s = 1.0 / (w1 + w2)
    p1, p2 = cands4(f0, f1, f2, f3, xi)
    return (w1 * p1 + w2 * p2) * s


@njit(cache=True, inline="always")
def _vcol6(fpad, c, j, xi, eps):
    return _weno6(fpad[c, j], fpad[c, j + 1], fpad[c, j + 2],
                  fpad[c, j + 3], fpad[c, j + 4], fpad[c, j + 5], xi, eps)


@njit(cache=True, inline="always")
def _vcol4(fpad, c, j, xi, eps):
    return _weno4(fpad[c, j + 1], fpad[c, j + 2], fpad[c, j + 3],
                  fpad[c, j + 4], xi, eps)


@njit(cache=True, parallel=True)
def interp2d_grid(fpad, n_x, x_lo, dx, v_max, dv, xs, vs, order, eps, out):
    """2-D tensor-product interpolation of the padded field at (xs, vs).

    fpad is the field with three zero ghost layers on each v side.
    Points with |v| > v_max map to zero.
    """
    npts = xs.shape[0]
    for p in prange(npts):
        v = vs[p]
        if not (np.isfinite(xs[p]) and np.isfinite(v)):
            # poisoned targets stay poisoned; int(ceil(nan)) must never
            # reach the gather below
            out[p] = np.nan
            continue
        if v < -v_max or v > v_max:
            out[p] = 0.0
            continue
        s = (xs[p] - x_lo) / dx - 0.5
        i = int(np.ceil(s))
        xi = s - i
        t = (v + v_max) / dv - 0.5
        j = int(np.ceil(t))
        xiv = t - j
        if order == 6:
            g0 = _vcol6(fpad, (i - 3) % n_x, j, xiv, eps)
            g1 = _vcol6(fpad, (i - 2) % n_x, j, xiv, eps)
            g2 = _vcol6(fpad, (i - 1) % n_x, j, xiv, eps)
            g3 = _vcol6(fpad, i % n_x, j, xiv, eps)
            g4 = _vcol6(fpad, (i + 1) % n_x, j, xiv, eps)
            g5 = _vcol6(fpad, (i + 2) % n_x, j, xiv, eps)
            out[p] = _weno6(g0, g1, g2, g3, g4, g5, xi, eps)
        elif order == 4:
            g0 = _vcol4(fpad, (i - 2) % n_x, j, xiv, eps)
            g1 = _vcol4(fpad, (i - 1) % n_x, j, xiv, eps)
            g2 = _vcol4(fpad, i % n_x, j, xiv, eps)
            g3 = _vcol4(fpad, (i + 1) % n_x, j, xiv, eps)
            out[p] = _weno4(g0, g1, g2, g3, xi, eps)
        else:
            c0 = (i - 1) % n_x
            c1 = i % n_x
            g0 = _c_interp2(fpad[c0, j + 2], fpad[c0, j + 3], xiv)
            g1 = _c_interp2(fpad[c1, j + 2], fpad[c1, j + 3], xiv)
            out[p] = _c_interp2(g0, g1, xi)


_c_interp2 = _F(_c.interp2)


@njit(cache=True, parallel=True)
def interp1d_periodic(vals, n, x_lo, dx, xs, order, eps, out):
    """1-D interpolation of a periodic nodal array at arbitrary points."""
    npts = xs.shape[0]
    for p in prange(npts):
        if not np.isfinite(xs[p]):
            out[p] = np.nan
            continue
        s = (xs[p] - x_lo) / dx - 0.5
        i = int(np.ceil(s))
        xi = s - i
        if order == 6:
            out[p] = _weno6(vals[(i - 3) % n], vals[(i - 2) % n],
                            vals[(i - 1) % n], vals[i % n],
                            vals[(i + 1) % n], vals[(i + 2) % n], xi, eps)
        elif order == 4:
            out[p] = _weno4(vals[(i - 2) % n], vals[(i - 1) % n],
                            vals[i % n], vals[(i + 1) % n], xi, eps)
        else:
            out[p] = _c_interp2(vals[(i - 1) % n], vals[i % n], xi)
