"""Pointwise WENO interpolation formulas.

Every function here is plain arithmetic on its arguments, so the same
source works on float scalars (wrapped in numba kernels) and on numpy
arrays (vectorized fallback).  The local coordinate convention is

    xi = (x - x_i) / dx  in  [-1, 0],

i.e. the target sits between nodes i-1 and i.  Six-point stencils are
labelled f0..f5 for f_{i-3}..f_{i+2}, four-point stencils f0..f3 for
f_{i-2}..f_{i+1}.
"""


def gammas6(xi):
    """Position-dependent linear weights of the three cubic candidates."""
    g1 = 0.05 * (xi - 1.0) * (xi - 2.0)
    g2 = -0.1 * (xi + 3.0) * (xi - 2.0)
    g3 = 0.05 * (xi + 3.0) * (xi + 2.0)
    return g1, g2, g3


def betas6(f0, f1, f2, f3, f4, f5):
    """Smoothness indicators of the three cubic candidates.

    Each is a positive-definite quadratic form in the second differences
    of its own substencil, written as an explicit sum of squares so the
    result is exactly zero for affine data and never negative in floating
    point.
    """
    a1 = f0 - 2.0 * f1 + f2
    a2 = f1 - 2.0 * f2 + f3
    a3 = f2 - 2.0 * f3 + f4
    a4 = f3 - 2.0 * f4 + f5
    third4 = 4.0 / 3.0
    b1 = third4 * (a1 - 1.375 * a2) ** 2 + 0.8125 * a2 * a2
    b2 = third4 * (a2 - 0.625 * a3) ** 2 + 0.8125 * a3 * a3
    b3 = third4 * (a4 - 1.375 * a3) ** 2 + 0.8125 * a3 * a3
    return b1, b2, b3


def cands6(f0, f1, f2, f3, f4, f5, xi):
    """The three cubic Lagrange candidates evaluated at xi (Horner form).

    Constant terms are exactly f_i, so interpolation at a node returns
    the nodal value up to the weight normalization.
    """
    sixth = 1.0 / 6.0
    c11 = -f0 / 3.0 + 1.5 * f1 - 3.0 * f2 + f3 * (11.0 * sixth)
    c12 = -0.5 * f0 + 2.0 * f1 - 2.5 * f2 + f3
    c13 = (-f0 + 3.0 * f1 - 3.0 * f2 + f3) * sixth
    p1 = f3 + xi * (c11 + xi * (c12 + xi * c13))

    c21 = f1 * sixth - f2 + 0.5 * f3 + f4 / 3.0
    c22 = 0.5 * f2 - f3 + 0.5 * f4
    c23 = (-f1 + 3.0 * f2 - 3.0 * f3 + f4) * sixth
    p2 = f3 + xi * (c21 + xi * (c22 + xi * c23))

    c31 = -f2 / 3.0 - 0.5 * f3 + f4 - f5 * sixth
    c32 = 0.5 * f2 - f3 + 0.5 * f4
    c33 = (-f2 + 3.0 * f3 - 3.0 * f4 + f5) * sixth
    p3 = f3 + xi * (c31 + xi * (c32 + xi * c33))
    return p1, p2, p3


def weights3(g1, g2, g3, b1, b2, b3, eps):
    """Normalized nonlinear weights from linear weights and indicators."""
    w1 = g1 / ((eps + b1) * (eps + b1))
    w2 = g2 / ((eps + b2) * (eps + b2))
    w3 = g3 / ((eps + b3) * (eps + b3))
    s = 1.0 / (w1 + w2 + w3)
    return w1 * s, w2 * s, w3 * s


def weno6(f0, f1, f2, f3, f4, f5, xi, eps):
    g1, g2, g3 = gammas6(xi)
    b1, b2, b3 = betas6(f0, f1, f2, f3, f4, f5)
    w1, w2, w3 = weights3(g1, g2, g3, b1, b2, b3, eps)
    p1, p2, p3 = cands6(f0, f1, f2, f3, f4, f5, xi)
    return w1 * p1 + w2 * p2 + w3 * p3


def linear6(f0, f1, f2, f3, f4, f5, xi):
    """Smooth-regime combination, the unique quintic interpolant."""
    g1, g2, g3 = gammas6(xi)
    p1, p2, p3 = cands6(f0, f1, f2, f3, f4, f5, xi)
    return g1 * p1 + g2 * p2 + g3 * p3


def gammas4(xi):
    g1 = (1.0 - xi) / 3.0
    g2 = (xi + 2.0) / 3.0
    return g1, g2


def betas4(f0, f1, f2, f3):
    a1 = f0 - 2.0 * f1 + f2
    a2 = f1 - 2.0 * f2 + f3
    return a1 * a1, a2 * a2


def cands4(f0, f1, f2, f3, xi):
    p1 = f2 + xi * (0.5 * (3.0 * f2 - 4.0 * f1 + f0) + xi * 0.5 * (f2 - 2.0 * f1 + f0))
    p2 = f2 + xi * (0.5 * (f3 - f1) + xi * 0.5 * (f3 - 2.0 * f2 + f1))
    return p1, p2


def weno4(f0, f1, f2, f3, xi, eps):
    g1, g2 = gammas4(xi)
    b1, b2 = betas4(f0, f1, f2, f3)
    w1 = g1 / ((eps + b1) * (eps + b1))
    w2 = g2 / ((eps + b2) * (eps + b2))
    s = 1.0 / (w1 + w2)
    p1, p2 = cands4(f0, f1, f2, f3, xi)
    return (w1 * p1 + w2 * p2) * s


def linear4(f0, f1, f2, f3, xi):
    g1, g2 = gammas4(xi)
    p1, p2 = cands4(f0, f1, f2, f3, xi)
    return g1 * p1 + g2 * p2


def interp2(f0, f1, xi):
    """Linear interpolation between the two bracketing nodes."""
    return f1 + xi * (f1 - f0)
