"""Time stepping for the Vlasov-Poisson system and the conservative
1-D advection model.

A step of temporal order l runs the tracer cascade (l-1 prediction
stages, each one 2-D interpolation sweep plus a moment/Poisson solve),
interpolates f^n at the final feet, and recomputes the fields from the
accepted solution.  Time steps follow

    dt = CFL * min(dx / v_max, dv / max|E|)

so CFL > 1 runs are the normal mode of operation.
"""
from dataclasses import dataclass

import numpy as np

from . import diagnostics as diag_mod
from . import field as field_mod
from . import problems, tracer
from .backend import interp1d_points, interp2d_points, pad_v
from .core import DistributionField, RunConfig, build_grid

E_FLOOR = 1e-12


class StepFailure(RuntimeError):
    """Raised when a step produces non-finite distribution values."""

    def __init__(self, step_index, time):
        super().__init__(f"non-finite distribution values after step "
                         f"{step_index} at t={time:.6g}")
        self.step_index = step_index
        self.time = time


@dataclass
class SimState:
    f: DistributionField
    fields: field_mod.FieldState
    step_count: int = 0

    @property
    def t(self):
        return self.f.time


def compute_dt(grid, E, cfl):
    """Advection-limited step; the E bound is inactive for tiny fields.

    A non-finite field still yields a finite step so that the post-step
    finiteness check reports the failure with its step index.
    """
    emax = float(np.max(np.abs(E)))
    dt_x = grid.dx / grid.v_max
    if emax < E_FLOOR or not np.isfinite(emax):
        return cfl * dt_x
    return cfl * min(dt_x, grid.dv / emax)


def _stage_orders(config):
    """2-D interpolation order per stage (pred1, pred2, final)."""
    final = config.interp_order
    if config.reduced_prediction:
        return 2, 4, final
    return final, final, final


def step(state, dt, config, grid):
    """Advance one accepted time step of the configured temporal order."""
    f_n = state.f
    fields_n = state.fields
    o1, o2, o_final = _stage_orders(config)
    eps = config.weno_eps
    fpad = pad_v(f_n.values)

    tr1 = tracer.trace_order1(grid, fields_n.E, dt)
    if config.order == 1:
        tr_final = tr1
    else:
        pred1 = tracer.predict_level(f_n, grid, tr1, o1, fields_n, dt,
                                     eps=eps, fpad=fpad)
        if config.order == 2:
            tr_final = tracer.trace_order2(grid, fields_n.E,
                                           pred1.fields_pred.E, tr1, dt,
                                           interp_order=o_final, eps=eps)
        else:
            tr2 = tracer.trace_order2(grid, fields_n.E,
                                      pred1.fields_pred.E, tr1, dt,
                                      interp_order=o2, eps=eps)
            pred2 = tracer.predict_level(f_n, grid, tr2, o2, fields_n, dt,
                                         eps=eps, fpad=fpad)
            tr_final = tracer.trace_order3(grid, fields_n,
                                           pred2.fields_pred, tr2, dt,
                                           interp_order=o_final, eps=eps)

    new_vals = interp2d_points(fpad, grid, tr_final.x_star.ravel(),
                               tr_final.v_star.ravel(), o_final,
                               eps).reshape(grid.n_x, grid.n_v)
    if not np.all(np.isfinite(new_vals)):
        raise StepFailure(state.step_count + 1, f_n.time + dt)

    t_new = f_n.time + dt
    f_new = DistributionField(new_vals, t_new)
    fields_new = field_mod.compute_fields(new_vals, grid,
                                          j0_bar=fields_n.j0_bar,
                                          rho_bar=fields_n.rho_bar,
                                          time=t_new)
    return SimState(f=f_new, fields=fields_new,
                    step_count=state.step_count + 1)


@dataclass
class RunResult:
    records: list
    snapshots: list       # (time, DistributionField) pairs
    state: SimState
    grid: object


def initial_state(config, grid=None):
    if grid is None:
        grid = build_grid(config)
    f0 = problems.initialize(config.problem, grid)
    fields0 = field_mod.compute_fields(f0.values, grid, time=0.0)
    return SimState(f=f0, fields=fields0), grid


def run(config: RunConfig) -> RunResult:
    """Initialize the configured problem and advance it to t_final.

    Diagnostics are recorded at t = 0, whenever a step crosses the
    cadence, and at t_final.  Steps are clipped only to land exactly on
    snapshot times and on t_final.
    """
    state, grid = initial_state(config)
    base = diag_mod.baseline(state.f, state.fields.E, grid,
                             config.entropy_floor)
    records = [diag_mod.record(state.f, state.fields.E, grid, base,
                               config.entropy_floor)]
    snapshots = []
    events = sorted(t for t in set(config.snapshot_times)
                    if 0.0 <= t <= config.t_final)
    if 0.0 in events:
        snapshots.append((0.0, state.f.copy()))
        events.remove(0.0)

    next_diag = config.diag_interval
    tiny = 1e-12
    while state.t < config.t_final - tiny:
        dt = compute_dt(grid, state.fields.E, config.cfl)
        dt = min(dt, config.t_final - state.t)
        if events:
            dt = min(dt, events[0] - state.t)
        state = step(state, dt, config, grid)
        if events and state.t >= events[0] - tiny:
            snapshots.append((events[0], state.f.copy()))
            events.pop(0)
        if state.t >= next_diag - tiny or state.t >= config.t_final - tiny:
            records.append(diag_mod.record(state.f, state.fields.E, grid,
                                           base, config.entropy_floor))
            while next_diag <= state.t + tiny:
                next_diag += config.diag_interval
    return RunResult(records=records, snapshots=snapshots, state=state,
                     grid=grid)


# ---------------------------------------------------------------------------
# conservative correction for the 1-D linear advection model problem
# ---------------------------------------------------------------------------

GL2_NODES = (0.5 - 0.5 / np.sqrt(3.0), 0.5 + 0.5 / np.sqrt(3.0))
GL2_WEIGHTS = (0.5, 0.5)


@dataclass
class AdvectState1D:
    """Point values of u on a periodic grid x_i = (i + 1/2) dx."""
    u: np.ndarray
    t: float
    speed: float


def weno5_reconstruct(cell_avgs, wind=1.0, eps=1e-6):
    """Fifth-order WENO edge values from cell averages, upwind biased.

    Returns the reconstructed value at every right cell edge i+1/2
    (periodic).  For wind >= 0 the stencil leans left, otherwise it is
    mirrored.
    """
    q = np.asarray(cell_avgs, dtype=np.float64)
    if wind >= 0.0:
        return _weno5_edge(q, eps)
    # mirror the domain: the left-biased edge i-1/2 of the reversed array
    # is the right-biased edge i+1/2 of the original one
    return np.roll(_weno5_edge(q[::-1], eps)[::-1], -1)


def _weno5_edge(q, eps):
    qmm = np.roll(q, 2)
    qm = np.roll(q, 1)
    qp = np.roll(q, -1)
    qpp = np.roll(q, -2)
    p0 = (2.0 * qmm - 7.0 * qm + 11.0 * q) / 6.0
    p1 = (-qm + 5.0 * q + 2.0 * qp) / 6.0
    p2 = (2.0 * q + 5.0 * qp - qpp) / 6.0
    b0 = 13.0 / 12.0 * (qmm - 2.0 * qm + q) ** 2 + 0.25 * (qmm - 4.0 * qm + 3.0 * q) ** 2
    b1 = 13.0 / 12.0 * (qm - 2.0 * q + qp) ** 2 + 0.25 * (qm - qp) ** 2
    b2 = 13.0 / 12.0 * (q - 2.0 * qp + qpp) ** 2 + 0.25 * (3.0 * q - 4.0 * qp + qpp) ** 2
    a0 = 0.1 / (eps + b0) ** 2
    a1 = 0.6 / (eps + b1) ** 2
    a2 = 0.3 / (eps + b2) ** 2
    s = a0 + a1 + a2
    return (a0 * p0 + a1 * p1 + a2 * p2) / s


def conservative_step_1d(state, dt, dx, quadrature=None, interp_order=6,
                         eps=1e-6, x_lo=0.0):
    """One mass-conservative update of u_t + a u_x = 0.

    The time-integrated flux at each node is a Gauss-Legendre sum of
    semi-Lagrangian point evaluations; edge fluxes are reconstructed
    from those node values as if they were cell averages, so the update
    telescopes and total mass is preserved exactly.  Requires
    |a| dt <= dx, the Eulerian-style constraint the correction brings
    back.
    """
    a = state.speed
    if abs(a) * dt > dx * (1.0 + 1e-12):
        raise ValueError(f"conservative step needs |speed|*dt <= dx, got "
                         f"{abs(a) * dt:.6g} > {dx:.6g}")
    nodes, weights = quadrature if quadrature is not None else (GL2_NODES,
                                                                GL2_WEIGHTS)
    n = state.u.shape[0]
    x = x_lo + (np.arange(n) + 0.5) * dx
    flux = np.zeros(n)
    for c, b in zip(nodes, weights):
        u_at = interp1d_points(state.u, x_lo, dx, x - a * c * dt,
                               interp_order, eps)
        flux += b * u_at
    flux *= a * dt
    fhat = weno5_reconstruct(flux, wind=a, eps=eps)
    u_new = state.u - (fhat - np.roll(fhat, 1)) / dx
    return AdvectState1D(u=u_new, t=state.t + dt, speed=a)
