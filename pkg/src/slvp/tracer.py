"""Backward characteristic tracing at temporal orders 1 to 3.

Each node (x_i, v_j) at the new time level is traced back along the
characteristic ODE dx/dt = v, dv/dt = E(x, t).  The electric field at
the new level is not known, so each order builds on a predicted field
obtained by interpolating f along the previous order's feet:

    order 1   uses only E^n
    order 2   uses the order-1 predicted E^{n+1}
    order 3   uses the order-2 predicted moments and the identity
              dE/dt = j0_bar - J + v (rho - rho_bar)

Off-grid values of E, rho and J at traced x positions come from 1-D
WENO interpolation of the nodal arrays.
"""
from dataclasses import dataclass

import numpy as np

from . import field as field_mod
from .backend import interp1d_points, interp2d_points, pad_v
from .core import DistributionField

DEFAULT_EPS = 1e-6


@dataclass
class TraceResult:
    """Feet of the characteristics for every node, shape (n_x, n_v)."""
    x_star: np.ndarray
    v_star: np.ndarray
    order: int


@dataclass
class PredictedLevel:
    """Distribution and fields at t^{n+1} predicted at some order."""
    f_pred: DistributionField
    fields_pred: field_mod.FieldState


def trace_order1(grid, E_n, dt):
    x = grid.x_centers[:, None] - grid.v_centers[None, :] * dt
    v = grid.v_centers[None, :] - E_n[:, None] * dt
    return TraceResult(grid.wrap_x(x), np.ascontiguousarray(np.broadcast_to(
        v, (grid.n_x, grid.n_v))), 1)


def trace_order2(grid, E_n, E_np1_1, trace1, dt, interp_order=6,
                 eps=DEFAULT_EPS):
    """Trapezoid-style corrector built on the order-1 feet and field."""
    E_at_feet = interp1d_points(E_n, grid.x_lo, grid.dx,
                                trace1.x_star.ravel(), interp_order,
                                eps).reshape(grid.n_x, grid.n_v)
    x = grid.x_centers[:, None] \
        - 0.5 * (grid.v_centers[None, :] + trace1.v_star) * dt
    v = grid.v_centers[None, :] \
        - 0.5 * (E_at_feet + E_np1_1[:, None]) * dt
    return TraceResult(grid.wrap_x(x), v, 2)


def trace_order3(grid, fields_n, fields_np1_2, trace2, dt, interp_order=6,
                 eps=DEFAULT_EPS):
    """Two-stage multi-derivative corrector built on order-2 predictions.

    The dE/dt terms are evaluated through the moment identity; at the
    old level the moments are interpolated to the order-2 x feet and
    paired with the order-2 v feet, at the new level the predicted
    nodal moments are paired with the node velocity v_j.
    """
    feet = trace2.x_star.ravel()
    shape = (grid.n_x, grid.n_v)
    E_old = interp1d_points(fields_n.E, grid.x_lo, grid.dx, feet,
                            interp_order, eps).reshape(shape)
    J_old = interp1d_points(fields_n.J, grid.x_lo, grid.dx, feet,
                            interp_order, eps).reshape(shape)
    rho_old = interp1d_points(fields_n.rho, grid.x_lo, grid.dx, feet,
                              interp_order, eps).reshape(shape)

    j0 = fields_n.j0_bar
    rb = fields_n.rho_bar
    v_j = grid.v_centers[None, :]
    dEdt_new = field_mod.dE_dt(fields_np1_2.rho[:, None],
                               fields_np1_2.J[:, None], j0, v_j, rb)
    dEdt_old = field_mod.dE_dt(rho_old, J_old, j0, trace2.v_star, rb)

    E_new = fields_np1_2.E[:, None]
    half_dt2 = 0.5 * dt * dt
    third = 1.0 / 3.0
    x = grid.x_centers[:, None] - v_j * dt \
        + half_dt2 * (2.0 * third * E_new + third * E_old)
    v = v_j - E_new * dt \
        + half_dt2 * (2.0 * third * dEdt_new + third * dEdt_old)
    return TraceResult(grid.wrap_x(x), v, 3)


def predict_level(f_n, grid, trace, interp_order, fields_n, dt,
                  eps=DEFAULT_EPS, fpad=None):
    """Distribution and fields at t^{n+1} from interpolation at the feet.

    fpad, the v-padded copy of f_n.values, may be passed in to share
    one padding across the stages of a step.
    """
    if fpad is None:
        fpad = pad_v(f_n.values)
    vals = interp2d_points(fpad, grid, trace.x_star.ravel(),
                           trace.v_star.ravel(), interp_order,
                           eps).reshape(grid.n_x, grid.n_v)
    t_new = f_n.time + dt
    f_pred = DistributionField(vals, t_new)
    fields_pred = field_mod.compute_fields(vals, grid,
                                           j0_bar=fields_n.j0_bar,
                                           rho_bar=fields_n.rho_bar,
                                           time=t_new)
    return PredictedLevel(f_pred, fields_pred)
