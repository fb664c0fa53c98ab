"""Non-split semi-Lagrangian WENO solver for the 1D-1V Vlasov-Poisson
system, with a spectral field solve and characteristic tracing of
temporal orders 1 to 3."""
from .backend import backend_name
from .core import DistributionField, PhaseGrid, RunConfig, build_grid
from .field import FieldState, compute_fields
from .solver import AdvectState1D, RunResult, SimState, run, step
from .tracer import TraceResult

__all__ = [
    "AdvectState1D", "DistributionField", "FieldState", "PhaseGrid",
    "RunConfig", "RunResult", "SimState", "TraceResult", "backend_name",
    "build_grid", "compute_fields", "run", "step",
]

__version__ = "0.1.0"
