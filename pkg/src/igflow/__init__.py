"""Conservative finite-difference solver for compressible flow.

Cell-centered point-value discretization on Cartesian grids with
quadratic interface reconstruction driven by compact-difference
gradients, jump-triggered blending against a monotone fallback for
shocks, HLLC upwinding, and three-stage Runge-Kutta time stepping.
"""

__version__ = "0.1.0"

from .boundary import BCKind, BoundaryCondition, BoundarySet, ConfigError
from .cases import CaseSpec, list_cases, make_case, reference_solution
from .gradients import GradientScheme
from .grid import Grid
from .reconstruction import PositivityError, ReconScheme, parse_scheme
from .solver import (
    RunResult,
    RunSetup,
    SchemeConfig,
    SolverError,
    compute_dt,
    compute_residual,
    run_case,
)
from .state import GasModel

__all__ = [
    "BCKind",
    "BoundaryCondition",
    "BoundarySet",
    "CaseSpec",
    "ConfigError",
    "GasModel",
    "GradientScheme",
    "Grid",
    "PositivityError",
    "ReconScheme",
    "RunResult",
    "RunSetup",
    "SchemeConfig",
    "SolverError",
    "__version__",
    "compute_dt",
    "compute_residual",
    "list_cases",
    "make_case",
    "parse_scheme",
    "reference_solution",
    "run_case",
]
