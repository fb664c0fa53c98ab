"""Velocity moments, spectral Poisson solve and the field time derivative.

The periodic Poisson problem is solvable only for a neutral source, so
the zero mode of the charge density is always projected out; with the
fixed neutralizing background this makes every numerically drifted
density admissible.  The background density rho_bar and the initial
mean current j0_bar are frozen at t = 0 (both are conserved by the
exact dynamics) and carried on the FieldState.
"""
import logging
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

NEUTRALITY_WARN = 1e-8
_drift_seen = False


@dataclass
class FieldState:
    """Per-x moment and field arrays at one time level."""
    rho: np.ndarray
    J: np.ndarray
    E: np.ndarray
    j0_bar: float
    rho_bar: float = 1.0
    time: float = 0.0


def charge_density(values, grid):
    """Zeroth v-moment by the midpoint rule, rho_i = dv * sum_j f_ij."""
    return grid.dv * values.sum(axis=1)


def current_density(values, grid):
    """First v-moment, J_i = dv * sum_j v_j f_ij."""
    return grid.dv * (values @ grid.v_centers)


def mean_current(J):
    """Spatial average of J; conserved, so it is stored once at t = 0."""
    return float(np.mean(J))


def solve_poisson(rho, grid, expected_mean=None):
    """Electric field with E_x = rho - mean(rho), mean(E) = 0.

    Solved spectrally; the zero mode of the source is discarded
    (projection onto the neutral subspace) and the zero mode of E is
    set to 0.  When expected_mean is given, a drift of the density mean
    beyond NEUTRALITY_WARN is logged.
    """
    global _drift_seen
    rho = np.asarray(rho, dtype=np.float64)
    n = rho.shape[0]
    mean = float(rho.mean())
    if expected_mean is not None and np.isfinite(mean) \
            and abs(mean - expected_mean) > NEUTRALITY_WARN:
        # interpolation does not conserve mass, so some drift is normal;
        # shout once, then keep the record at debug level
        level = logging.DEBUG if _drift_seen else logging.WARNING
        _drift_seen = True
        log.log(level, "density mean drifted by %.3e from background %.6g",
                abs(mean - expected_mean), expected_mean)
    rhat = np.fft.rfft(rho - mean)
    kappa = 2.0 * np.pi * np.fft.rfftfreq(n, d=grid.dx)
    ehat = np.zeros_like(rhat)
    ehat[1:] = -1j * rhat[1:] / kappa[1:]
    if n % 2 == 0:
        ehat[-1] = 0.0
    return np.fft.irfft(ehat, n)


def dE_dt(rho, J, j0_bar, v, rho_bar=1.0):
    """Lagrangian derivative of E along a characteristic with velocity v.

    From the continuity moment of the kinetic equation, E_t + J is
    spatially uniform and equals the conserved mean current, hence
    dE/dt = j0_bar - J + v*(rho - rho_bar).
    """
    return j0_bar - J + v * (rho - rho_bar)


def compute_fields(values, grid, j0_bar=None, rho_bar=None, time=0.0):
    """Moments and field of a distribution; freezes the conserved scalars
    from this state when they are not supplied (t = 0 usage)."""
    rho = charge_density(values, grid)
    J = current_density(values, grid)
    if rho_bar is None:
        rho_bar = float(rho.mean())
    if j0_bar is None:
        j0_bar = mean_current(J)
    E = solve_poisson(rho, grid, expected_mean=rho_bar)
    return FieldState(rho=rho, J=J, E=E, j0_bar=j0_bar, rho_bar=rho_bar,
                      time=time)
