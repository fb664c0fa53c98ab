import numpy as np
import pytest

from slvp.core import PhaseGrid


@pytest.fixture
def rng():
    return np.random.default_rng(20260808)


def make_grid(n_x=32, n_v=32, length=4.0 * np.pi, v_max=6.0, x_lo=0.0):
    return PhaseGrid.create(n_x, n_v, length, v_max, x_lo)


@pytest.fixture
def grid():
    return make_grid()


def fit_slope(hs, errs):
    """Least-squares order of convergence from mesh sizes and errors."""
    hs = np.asarray(hs, dtype=float)
    errs = np.asarray(errs, dtype=float)
    return float(np.polyfit(np.log(hs), np.log(errs), 1)[0])
