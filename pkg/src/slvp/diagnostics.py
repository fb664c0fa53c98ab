"""Conserved-quantity tracking and damping/growth-rate estimation."""
from dataclasses import dataclass

import numpy as np


@dataclass
class DiagnosticsRecord:
    t: float
    l1: float
    l2: float
    energy: float
    entropy: float
    e_l2: float
    rel_dev_l1: float
    rel_dev_l2: float
    rel_dev_energy: float
    rel_dev_entropy: float

    CSV_COLUMNS = ("t", "l1", "l2", "energy", "entropy", "e_l2",
                   "rel_dev_l1", "rel_dev_l2", "rel_dev_energy",
                   "rel_dev_entropy")

    def as_row(self):
        return tuple(getattr(self, c) for c in self.CSV_COLUMNS)


def lp_norm(f, grid, p=1.0):
    """(dx dv sum |f|^p)^(1/p) over the truncated phase-space domain."""
    if p < 1.0:
        raise ValueError("p must be >= 1")
    cell = grid.dx * grid.dv
    return float((cell * np.sum(np.abs(f.values) ** p)) ** (1.0 / p))


def energy(f, E, grid):
    """Second v-moment of f plus the field energy integral."""
    kinetic = grid.dx * grid.dv * float((f.values @ (grid.v_centers ** 2)).sum())
    return kinetic + grid.dx * float(np.sum(E ** 2))


def entropy(f, grid, floor=1e-14):
    """Integral of g log g with g = max(f, floor).

    The scheme is not positivity preserving, so undershoots are clipped
    to the floor before taking the log.
    """
    if floor <= 0.0:
        raise ValueError("entropy floor must be positive")
    g = np.maximum(f.values, floor)
    return grid.dx * grid.dv * float(np.sum(g * np.log(g)))


def e_l2(E, grid):
    return float(np.sqrt(grid.dx * np.sum(E ** 2)))


@dataclass
class Baseline:
    l1: float
    l2: float
    energy: float
    entropy: float


def baseline(f, E, grid, entropy_floor=1e-14):
    return Baseline(l1=lp_norm(f, grid, 1.0), l2=lp_norm(f, grid, 2.0),
                    energy=energy(f, E, grid),
                    entropy=entropy(f, grid, entropy_floor))


def _rel(value, ref):
    if value == ref:
        return 0.0
    return (value - ref) / abs(ref)


def record(f, E, grid, base, entropy_floor=1e-14):
    l1 = lp_norm(f, grid, 1.0)
    l2 = lp_norm(f, grid, 2.0)
    en = energy(f, E, grid)
    s = entropy(f, grid, entropy_floor)
    return DiagnosticsRecord(
        t=f.time, l1=l1, l2=l2, energy=en, entropy=s, e_l2=e_l2(E, grid),
        rel_dev_l1=_rel(l1, base.l1), rel_dev_l2=_rel(l2, base.l2),
        rel_dev_energy=_rel(en, base.energy),
        rel_dev_entropy=_rel(s, base.entropy))


def fit_rate(times, values, window):
    """Least-squares slope of log(values) over the window.

    Damped or growing fields oscillate through near-zeros, so when the
    windowed series has enough interior local maxima the fit uses that
    peak envelope; a monotone series is fitted on all its samples.
    """
    times = np.asarray(times, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    ta, tb = window
    sel = (times >= ta) & (times <= tb)
    if int(sel.sum()) < 10:
        raise ValueError(f"window [{ta}, {tb}] holds {int(sel.sum())} samples, "
                         "need at least 10")
    t = times[sel]
    y = values[sel]
    pk = _peaks(y)
    if pk.size >= 5:
        t, y = t[pk], y[pk]
    if np.any(y <= 0.0):
        raise ValueError("series must be positive where it is fitted")
    slope, _ = np.polyfit(t, np.log(y), 1)
    return float(slope)


def _peaks(y):
    inner = (y[1:-1] > y[:-2]) & (y[1:-1] >= y[2:])
    return np.nonzero(inner)[0] + 1


def growth_window(times, values, lower_factor=10.0, upper_fraction=0.5,
                  min_samples=10):
    """Window of clean exponential growth for an unstable run.

    Starts once the signal exceeds lower_factor times its initial value
    (past the transient) and ends where it last crosses upper_fraction
    of its maximum (before saturation).
    """
    times = np.asarray(times, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    peak = values.max()
    start_lvl = values[0] * lower_factor
    above = np.nonzero(values >= start_lvl)[0]
    if above.size == 0:
        raise ValueError("series never leaves its initial level")
    i0 = above[0]
    i_peak = int(np.argmax(values))
    cut = np.nonzero(values[:i_peak + 1] <= upper_fraction * peak)[0]
    i1 = cut[-1] if cut.size else i_peak
    if i1 - i0 + 1 < min_samples:
        raise ValueError("growth phase too short to fit")
    return float(times[i0]), float(times[i1])
