"""Initial distributions for the benchmark problems.

All four benchmarks perturb an x-independent velocity profile by small
cosine modes; the neutralizing ion background equals the spatial mean
of the initial charge density (exactly 1 for every profile except the
two-stream one, whose velocity profile integrates to 12/7).
"""
from dataclasses import dataclass, field

import numpy as np

from .core import DistributionField

SQRT2PI = np.sqrt(2.0 * np.pi)


@dataclass(frozen=True)
class ProblemSpec:
    name: str
    alpha: float
    k: float
    extra: dict = field(default_factory=dict)

    @property
    def length(self):
        return 2.0 * np.pi / self.k


PROBLEMS = {
    "two_stream": ProblemSpec("two_stream", alpha=0.01, k=0.5),
    "weak_landau": ProblemSpec("weak_landau", alpha=0.01, k=0.5),
    "strong_landau": ProblemSpec("strong_landau", alpha=0.5, k=0.5),
    "symmetric_two_stream": ProblemSpec(
        "symmetric_two_stream", alpha=0.0005, k=0.2,
        extra={"u": 5.0 * np.sqrt(3.0) / 4.0, "v_th": 0.5}),
}


def get_problem(name):
    try:
        return PROBLEMS[name]
    except KeyError:
        raise ValueError(f"unknown problem {name!r}; choose from "
                         f"{sorted(PROBLEMS)}") from None


def init_two_stream(grid, alpha=0.01, k=0.5):
    """Bump-on-tail pair of streams seeded with three cosine modes."""
    x = grid.x_centers[:, None]
    v = grid.v_centers[None, :]
    profile = (2.0 / (7.0 * SQRT2PI)) * (1.0 + 5.0 * v * v) * np.exp(-0.5 * v * v)
    modes = 1.0 + alpha * ((np.cos(2.0 * k * x) + np.cos(3.0 * k * x)) / 1.2
                           + np.cos(k * x))
    return DistributionField(profile * modes, 0.0)


def init_landau(grid, alpha, k=0.5):
    """Maxwellian with a single-mode density perturbation."""
    x = grid.x_centers[:, None]
    v = grid.v_centers[None, :]
    maxwell = np.exp(-0.5 * v * v) / SQRT2PI
    return DistributionField(maxwell * (1.0 + alpha * np.cos(k * x)), 0.0)


def init_symmetric_two_stream(grid, alpha=0.0005, k=0.2,
                              u=5.0 * np.sqrt(3.0) / 4.0, v_th=0.5):
    """Two counter-streaming Maxwellian beams of equal weight."""
    x = grid.x_centers[:, None]
    v = grid.v_centers[None, :]
    beams = (np.exp(-0.5 * ((v - u) / v_th) ** 2)
             + np.exp(-0.5 * ((v + u) / v_th) ** 2)) / (np.sqrt(8.0 * np.pi) * v_th)
    return DistributionField(beams * (1.0 + alpha * np.cos(k * x)), 0.0)


def initialize(name, grid):
    spec = get_problem(name)
    expected_length = spec.length
    if abs(grid.length - expected_length) > 1e-9 * expected_length:
        raise ValueError(f"{name} needs x length {expected_length:.6g}, "
                         f"grid has {grid.length:.6g}")
    if name == "two_stream":
        return init_two_stream(grid, spec.alpha, spec.k)
    if name in ("weak_landau", "strong_landau"):
        return init_landau(grid, spec.alpha, spec.k)
    return init_symmetric_two_stream(grid, spec.alpha, spec.k,
                                     spec.extra["u"], spec.extra["v_th"])
