"""Semi-discrete residual, time integration and the run driver.

The residual is assembled dimension by dimension: per active axis the
primitive field is gathered into contiguous lines, reconstructed into
face states, fed to the approximate Riemann flux (minus the viscous
face flux when enabled), and the one-dimensional flux difference is
scattered back.  Ghost cells are refilled and every reconstruction
redone inside each integrator stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .boundary import BoundarySet, fill_ghosts
from .gradients import GradientScheme
from .grid import Grid, faces_to_field, lines_along_axis
from .reconstruction import (
    ReconOptions,
    ReconScheme,
    ReconStats,
    gradient_for,
    reconstruct_axis,
)
from .riemann import FluxError, hllc_flux_lines
from .state import GasModel, primitive_from_conservative
from .viscous import cell_gradient_fields, face_flux_lines, temperature_field


class SolverError(RuntimeError):
    pass


SourceTerm = Callable[[np.ndarray, Grid, float], np.ndarray]


@dataclass
class SchemeConfig:
    """Numerical choices of a run."""

    scheme: ReconScheme = ReconScheme.IG6MP
    gradient: Optional[GradientScheme] = None
    characteristic: bool = False
    cfl: float = 0.2
    alpha_damp: float = 1.0
    viscous_gradient: GradientScheme = GradientScheme.CD6

    def __post_init__(self) -> None:
        if self.gradient is None:
            self.gradient = gradient_for(self.scheme)


def compute_dt(
    w: np.ndarray,
    grid: Grid,
    gas: GasModel,
    cfl: float = 0.2,
    dt_policy: str = "cfl",
) -> float:
    """Stable step size from the interior primitive field.

    The acoustic bound uses the cellwise sum over active axes of
    (|u_d| + c)/dx_d; the diffusive bound adds the factor-4 safety on
    the cellwise sum of nu/dx_d^2 with nu = mu/(rho Re).  The
    ``cfl_dx2`` policy returns cfl * dx^2 outright (smooth-advection
    refinement studies, where the time error must shrink faster than
    the space error).
    """
    if dt_policy == "cfl_dx2":
        dx = min(grid.spacing[ax] for ax in grid.active_axes)
        return cfl * dx * dx
    if dt_policy != "cfl":
        raise ValueError(f"unknown dt policy {dt_policy!r}")
    c = np.sqrt(gas.gamma * w[4] / w[0])
    speed = np.zeros_like(c)
    for ax in grid.active_axes:
        speed += (np.abs(w[1 + ax]) + c) / grid.spacing[ax]
    dt = 1.0 / float(speed.max())
    if gas.viscous:
        nu = gas.mu / (w[0] * gas.Re)
        rate = np.zeros_like(c)
        for ax in grid.active_axes:
            rate += nu / grid.spacing[ax] ** 2
        dt = min(dt, 1.0 / (4.0 * float(rate.max())))
    return cfl * dt


def compute_residual(
    q: np.ndarray,
    grid: Grid,
    gas: GasModel,
    scheme: SchemeConfig,
    bcs: BoundarySet,
    t: float = 0.0,
    source: Optional[SourceTerm] = None,
    track_range: bool = False,
) -> tuple[np.ndarray, ReconStats]:
    """Semi-discrete right-hand side on the interior, with sweep stats."""
    w = np.empty((5,) + grid.shape_padded)
    sx, sy, sz = grid.interior_slices()
    w[:, sx, sy, sz] = primitive_from_conservative(q, gas)
    fill_ghosts(w, grid, bcs, t)

    if gas.viscous:
        T = temperature_field(w, gas)
        G = cell_gradient_fields(w, grid, gas, scheme.viscous_gradient)

    res = np.zeros((5,) + grid.shape_interior)
    stats = ReconStats()
    for axis in grid.active_axes:
        lines = lines_along_axis(w, grid, axis)
        opts = ReconOptions(
            scheme=scheme.scheme,
            gradient=scheme.gradient,
            characteristic=scheme.characteristic,
            gamma=gas.gamma,
            normal=1 + axis,
            ghost=grid.pad(axis),
        )
        wl, wr, st = reconstruct_axis(
            lines, opts, bool(grid.periodic[axis]), track_range
        )
        stats.merge(st)
        flux = np.empty_like(wl)
        hllc_flux_lines(wl, wr, gas, axis, flux)
        if not np.all(np.isfinite(flux)):
            bad = np.argwhere(~np.isfinite(flux).all(axis=0))[0]
            raise FluxError(
                f"non-finite flux on axis {axis} at line {bad[0]}, face {bad[1]}"
            )
        if gas.viscous:
            flux -= face_flux_lines(
                lines, grid, gas, axis, G, T, scheme.alpha_damp
            )
        ff = faces_to_field(flux, grid, axis)
        res -= np.diff(ff, axis=1 + axis) / grid.spacing[axis]
    if source is not None:
        res += source(w[:, sx, sy, sz], grid, t)
    return res, stats


RHSFunc = Callable[[np.ndarray, float], tuple[np.ndarray, ReconStats]]


def _check_stage(q: np.ndarray, stage: int) -> None:
    if not np.all(np.isfinite(q)):
        raise SolverError(f"non-finite state after stage {stage}")


def rk3_step(
    q: np.ndarray, t: float, dt: float, rhs: RHSFunc
) -> tuple[np.ndarray, ReconStats]:
    """One three-stage strong-stability-preserving step.

    ``rhs(q, t)`` returns the residual and sweep stats; stats merge
    across the three stages.  A non-finite state after any stage
    raises with that stage's index.
    """
    r0, s0 = rhs(q, t)
    q1 = q + dt * r0
    _check_stage(q1, 1)
    r1, s1 = rhs(q1, t + dt)
    q2 = 0.75 * q + 0.25 * (q1 + dt * r1)
    _check_stage(q2, 2)
    r2, s2 = rhs(q2, t + 0.5 * dt)
    qn = (q + 2.0 * (q2 + dt * r2)) / 3.0
    _check_stage(qn, 3)
    s0.merge(s1)
    s0.merge(s2)
    return qn, s0


@dataclass
class RunSetup:
    """Everything needed to advance one case to its final time."""

    grid: Grid
    gas: GasModel
    scheme: SchemeConfig
    bcs: BoundarySet
    q0: np.ndarray
    t_final: float
    dt_policy: str = "cfl"
    source: Optional[SourceTerm] = None
    diagnostics: tuple[str, ...] = ()
    diag_every: int = 1
    track_range: bool = False


@dataclass
class RunResult:
    grid: Grid
    gas: GasModel
    q: np.ndarray
    w: np.ndarray
    t: float
    steps: int
    diag: list
    totals: dict


DIAG_BASE = ("step", "t", "dt", "min_rho", "min_p", "blend_frac", "fallback")


def run_case(
    setup: RunSetup,
    on_step: Optional[Callable[[int, float, np.ndarray], None]] = None,
) -> RunResult:
    """March a setup to its final time with exact-endpoint steps."""
    setup.bcs.validate(setup.grid)
    grid, gas, cfg = setup.grid, setup.gas, setup.scheme
    q = np.array(setup.q0, dtype=float, copy=True)
    if q.shape != (5,) + grid.shape_interior:
        raise ValueError(
            f"initial state shape {q.shape} does not match grid {grid.shape_interior}"
        )

    def rhs(qq: np.ndarray, tt: float):
        return compute_residual(
            qq,
            grid,
            gas,
            cfg,
            setup.bcs,
            tt,
            source=setup.source,
            track_range=setup.track_range,
        )

    totals = {
        "side_evals": 0,
        "to_five_point": 0,
        "to_first_order": 0,
        "blend_faces": 0,
        "blend_possible": 0,
        "steps": 0,
    }
    if setup.track_range:
        totals["state_min"] = np.full(5, np.inf)
        totals["state_max"] = np.full(5, -np.inf)
    diag_rows: list[dict] = []
    t = 0.0
    steps = 0
    want = set(setup.diagnostics)

    def record(w_int: np.ndarray, dt: float, stats: Optional[ReconStats]) -> None:
        row = {
            "step": steps,
            "t": t,
            "dt": dt,
            "min_rho": float(w_int[0].min()),
            "min_p": float(w_int[4].min()),
            "blend_frac": (
                stats.blend_faces / stats.blend_possible
                if stats is not None and stats.blend_possible
                else 0.0
            ),
            "fallback": (stats.to_five_point if stats is not None else 0),
        }
        if "mass" in want:
            row["mass"] = float(w_int[0].sum()) * grid.cell_volume
        if "ke" in want:
            from .analysis import kinetic_energy

            row["ke"] = kinetic_energy(w_int, grid)
        if "enstrophy" in want:
            from .analysis import enstrophy

            row["enstrophy"] = enstrophy(w_int, grid)
        diag_rows.append(row)

    w_int = primitive_from_conservative(q, gas)
    record(w_int, 0.0, None)
    if setup.t_final > 0.0:
        while t < setup.t_final:
            dt = compute_dt(w_int, grid, gas, cfg.cfl, setup.dt_policy)
            last = dt >= setup.t_final - t
            if last:
                dt = setup.t_final - t
            q, stats = rk3_step(q, t, dt, rhs)
            steps += 1
            t = setup.t_final if last else t + dt
            totals["side_evals"] += stats.side_evals
            totals["to_five_point"] += stats.to_five_point
            totals["to_first_order"] += stats.to_first_order
            totals["blend_faces"] += stats.blend_faces
            totals["blend_possible"] += stats.blend_possible
            totals["steps"] = steps
            if setup.track_range:
                np.minimum(totals["state_min"], stats.state_min, out=totals["state_min"])
                np.maximum(totals["state_max"], stats.state_max, out=totals["state_max"])
            w_int = primitive_from_conservative(q, gas)
            if steps % max(setup.diag_every, 1) == 0 or last:
                record(w_int, dt, stats)
            if on_step is not None:
                on_step(steps, t, w_int)
    return RunResult(grid, gas, q, w_int, t, steps, diag_rows, totals)
