"""Benchmark case registry.

Each case bundles everything a run needs: domain, default grid sizes,
gas model, pointwise initializer, boundary set, source term, and final
time.  Initializers are pure functions of position so they can be
evaluated on broadcast center meshes or on single points.

Reference data comes from :func:`reference_solution`: exact Riemann
curves where the problem admits one, self-generated fine-grid runs
elsewhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

import numpy as np

from .boundary import (
    BCKind,
    BoundaryCondition,
    BoundarySet,
    periodic_pair,
    zero_gradient_pair,
)
from .grid import Grid
from .state import ENER, IV, RHO, YMOM, GasModel, conservative_from_primitive

Initializer = Callable[..., np.ndarray]
SourceFn = Callable[[np.ndarray, Grid, float], np.ndarray]


def _stack(rho, u, v, w, p, shape=()) -> np.ndarray:
    """Assemble a (5, ...) primitive array from broadcastable parts."""
    for part in (rho, u, v, w, p):
        shape = np.broadcast_shapes(shape, np.shape(part))
    out = np.empty((5,) + shape)
    out[0], out[1], out[2], out[3], out[4] = rho, u, v, w, p
    return out


@dataclass(frozen=True)
class CaseSpec:
    """Complete description of one benchmark problem."""

    name: str
    bounds: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]
    periodic: tuple[bool, bool, bool]
    gas: GasModel
    initializer: Initializer
    bcs: BoundarySet
    t_final: float
    presets: Mapping[str, tuple[int, int, int]]
    dt_policy: str = "cfl"
    source: Optional[SourceFn] = None
    diagnostics: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.t_final > 0.0:
            raise ValueError(f"t_final must be positive, got {self.t_final}")
        if "default" not in self.presets:
            raise ValueError(f"case {self.name!r} has no default grid")

    def grid(
        self,
        n: Optional[tuple[int, int, int]] = None,
        preset: str = "default",
        ghost: int = 3,
    ) -> Grid:
        if n is None:
            if preset not in self.presets:
                raise ValueError(
                    f"case {self.name!r} has no preset {preset!r}"
                )
            n = self.presets[preset]
        return Grid(tuple(n), self.bounds, ghost=ghost, periodic=self.periodic)

    def initial_primitive(self, grid: Grid) -> np.ndarray:
        """Evaluate the initializer on the interior center mesh."""
        x, y, z = grid.centers_mesh()
        w = self.initializer(x, y, z)
        out = np.empty((5,) + grid.shape_interior)
        out[:] = w
        return out

    def initial_conserved(self, grid: Grid) -> np.ndarray:
        return conservative_from_primitive(self.initial_primitive(grid), self.gas)


# -- boundary helpers ---------------------------------------------------

_INERT = BoundaryCondition(BCKind.ZERO_GRADIENT)


def _dirichlet(state: np.ndarray) -> BoundaryCondition:
    return BoundaryCondition(BCKind.DIRICHLET, state=np.asarray(state, float))


def _wall(kind: BCKind) -> BoundaryCondition:
    return BoundaryCondition(kind)


def _bcs_1d(left: BoundaryCondition, right: BoundaryCondition) -> BoundarySet:
    return BoundarySet(x=(left, right), y=(_INERT, _INERT), z=(_INERT, _INERT))


# -- smooth advection cases ---------------------------------------------


def _linear_ooa_init(x, y=0.0, z=0.0):
    rho = 1.0 + 0.5 * np.sin(np.pi * (x + y))
    return _stack(rho, 1.0, 1.0, 0.0, 1.0)


_VORTEX_BETA = 5.0
_VORTEX_CENTER = (5.0, 5.0)


def _vortex_init(x, y=0.0, z=0.0):
    gamma = 1.4
    xb = x - _VORTEX_CENTER[0]
    yb = y - _VORTEX_CENTER[1]
    r2 = xb * xb + yb * yb
    gain = _VORTEX_BETA / (2.0 * np.pi) * np.exp(0.5 * (1.0 - r2))
    temp = 1.0 - (gamma - 1.0) * _VORTEX_BETA**2 / (
        8.0 * gamma * np.pi**2
    ) * np.exp(1.0 - r2)
    rho = temp ** (1.0 / (gamma - 1.0))
    return _stack(rho, 1.0 - gain * yb, 1.0 + gain * xb, 0.0, rho**gamma)


# -- one-dimensional shock tubes ----------------------------------------

_SOD_L = (0.125, 0.0, 0.1)
_SOD_R = (1.0, 0.0, 1.0)
_LAX_L = (0.445, 0.698, 3.528)
_LAX_R = (0.5, 0.0, 0.571)


def _two_state_init(xsplit, left, right):
    rho_l, u_l, p_l = left
    rho_r, u_r, p_r = right

    def init(x, y=0.0, z=0.0):
        mask = np.asarray(x) < xsplit
        rho = np.where(mask, rho_l, rho_r)
        u = np.where(mask, u_l, u_r)
        p = np.where(mask, p_l, p_r)
        return _stack(rho, u, 0.0, 0.0, p, shape=np.shape(y))

    return init


def _shu_osher_init(x, y=0.0, z=0.0):
    mask = np.asarray(x) < -4.0
    rho = np.where(mask, 3.857143, 1.0 + 0.2 * np.sin(5.0 * np.asarray(x)))
    u = np.where(mask, 2.629369, 0.0)
    p = np.where(mask, 10.3333, 1.0)
    return _stack(rho, u, 0.0, 0.0, p, shape=np.shape(y))


def _titarev_toro_init(x, y=0.0, z=0.0):
    mask = np.asarray(x) < -4.5
    rho = np.where(
        mask, 1.515695, 1.0 + 0.1 * np.sin(20.0 * np.pi * np.asarray(x))
    )
    u = np.where(mask, 0.523326, 0.0)
    p = np.where(mask, 1.805, 1.0)
    return _stack(rho, u, 0.0, 0.0, p, shape=np.shape(y))


# -- two-dimensional Euler cases ----------------------------------------

_SE2D_ANGLE = np.pi / 6.0


def _shock_entropy_2d_init(x, y=0.0, z=0.0):
    mask = np.asarray(x) <= -4.0
    wave = 1.0 + 0.2 * np.sin(
        10.0 * (np.cos(_SE2D_ANGLE) * np.asarray(x) + np.sin(_SE2D_ANGLE) * y)
    )
    rho = np.where(mask, 3.857143, wave)
    u = np.where(mask, 2.629369, 0.0)
    p = np.where(mask, 10.3333, 1.0)
    return _stack(rho, u, 0.0, 0.0, p)


_C3_Q1 = (1.5, 0.0, 0.0, 1.5)
_C3_Q2 = (33.0 / 62.0, 4.0 / math.sqrt(11.0), 0.0, 0.3)
_C3_Q3 = (77.0 / 558.0, 4.0 / math.sqrt(11.0), 4.0 / math.sqrt(11.0), 9.0 / 310.0)
_C3_Q4 = (33.0 / 62.0, 0.0, 4.0 / math.sqrt(11.0), 0.3)


def _riemann_config3_init(x, y=0.0, z=0.0):
    right = np.asarray(x) > 0.8
    top = np.asarray(y) > 0.8
    comps = []
    for k in range(4):
        q1, q2, q3, q4 = _C3_Q1[k], _C3_Q2[k], _C3_Q3[k], _C3_Q4[k]
        comps.append(
            np.where(right, np.where(top, q1, q4), np.where(top, q2, q3))
        )
    rho, u, v, p = comps
    return _stack(rho, u, v, 0.0, p)


def _rayleigh_taylor_init(x, y=0.0, z=0.0):
    gamma = 5.0 / 3.0
    lower = np.asarray(y) < 0.5
    rho = np.where(lower, 2.0, 1.0)
    p = np.where(lower, 2.0 * np.asarray(y) + 1.0, np.asarray(y) + 1.5)
    v = -0.025 * np.sqrt(gamma * p / rho) * np.cos(8.0 * np.pi * np.asarray(x))
    return _stack(rho, 0.0, v, 0.0, p)


def _rayleigh_taylor_source(w: np.ndarray, grid: Grid, t: float) -> np.ndarray:
    s = np.zeros_like(w)
    s[YMOM] = w[RHO]
    s[ENER] = w[RHO] * w[IV]
    return s


_DMR_TAN = math.tan(math.pi / 3.0)
_DMR_POST = np.array(
    [
        8.0,
        8.25 * math.cos(math.pi / 6.0),
        -8.25 * math.sin(math.pi / 6.0),
        0.0,
        116.5,
    ]
)
_DMR_PRE = np.array([1.4, 0.0, 0.0, 0.0, 1.0])


def _dmr_init(x, y=0.0, z=0.0):
    mask = np.asarray(x) < 1.0 / 6.0 + y / _DMR_TAN
    comps = [np.where(mask, _DMR_POST[k], _DMR_PRE[k]) for k in range(5)]
    return _stack(*comps)


def dmr_shock_position(t: float) -> float:
    """Top-boundary trace of the tilted Mach-10 shock at y = 1."""
    return 1.0 / 6.0 + (1.0 + 20.0 * t) / _DMR_TAN


def _dmr_bottom(data: np.ndarray, grid: Grid, axis: int, side: int, t: float) -> None:
    # reflecting wall right of the shock foot, post-shock inflow left of it
    g = grid.pad(axis)
    xs = grid.centers(0, include_ghosts=True)
    post = xs < 1.0 / 6.0
    for k in range(g):
        ghost, src = g - 1 - k, g + k
        layer = data[:, :, ghost, :]
        layer[:] = data[:, :, src, :]
        layer[2] *= -1.0
        layer[:, post, :] = _DMR_POST[:, None, None]


def _dmr_top(data: np.ndarray, grid: Grid, axis: int, side: int, t: float) -> None:
    g = grid.pad(axis)
    n = grid.n[axis]
    xs = grid.centers(0, include_ghosts=True)
    row = np.where(
        (xs < dmr_shock_position(t))[None, :],
        _DMR_POST[:, None],
        _DMR_PRE[:, None],
    )
    for k in range(g):
        data[:, :, g + n + k, :] = row[:, :, None]


# -- three-dimensional and viscous cases --------------------------------


def _tgv_init(x, y=0.0, z=0.0):
    u = np.sin(x) * np.cos(y) * np.cos(z)
    v = -np.cos(x) * np.sin(y) * np.cos(z)
    p = 100.0 + (
        (np.cos(2.0 * z) + 2.0) * (np.cos(2.0 * x) + np.cos(2.0 * y)) - 2.0
    ) / 16.0
    return _stack(1.0, u, v, 0.0, p)


def _viscous_shock_tube_init(x, y=0.0, z=0.0):
    gamma = 1.4
    mask = np.asarray(x) < 0.5
    rho = np.where(mask, 120.0, 1.2)
    p = rho / gamma
    return _stack(rho, 0.0, 0.0, 0.0, p, shape=np.shape(y))


def _uniform_init(x, y=0.0, z=0.0):
    return _stack(
        1.0, 0.5, -0.25, 0.125, 0.8,
        shape=np.broadcast_shapes(np.shape(x), np.shape(y), np.shape(z)),
    )


# -- registry -----------------------------------------------------------


def _build_linear_ooa() -> CaseSpec:
    return CaseSpec(
        name="linear_ooa",
        bounds=((-1.0, 1.0), (-1.0, 1.0), (0.0, 1.0)),
        periodic=(True, True, False),
        gas=GasModel(gamma=1.4),
        initializer=_linear_ooa_init,
        bcs=BoundarySet(periodic_pair(), periodic_pair(), (_INERT, _INERT)),
        t_final=2.0,
        dt_policy="cfl_dx2",
        presets={"default": (40, 40, 1)},
    )


def _build_isentropic_vortex() -> CaseSpec:
    return CaseSpec(
        name="isentropic_vortex",
        bounds=((0.0, 10.0), (0.0, 10.0), (0.0, 1.0)),
        periodic=(True, True, False),
        gas=GasModel(gamma=1.4),
        initializer=_vortex_init,
        bcs=BoundarySet(periodic_pair(), periodic_pair(), (_INERT, _INERT)),
        t_final=10.0,
        presets={"default": (100, 100, 1)},
    )


def _build_sod() -> CaseSpec:
    return CaseSpec(
        name="sod",
        bounds=((0.0, 1.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_two_state_init(0.5, _SOD_L, _SOD_R),
        bcs=_bcs_1d(_INERT, _INERT),
        t_final=0.2,
        presets={"default": (200, 1, 1)},
    )


def _build_lax() -> CaseSpec:
    return CaseSpec(
        name="lax",
        bounds=((0.0, 1.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_two_state_init(0.5, _LAX_L, _LAX_R),
        bcs=_bcs_1d(_INERT, _INERT),
        t_final=0.14,
        presets={"default": (200, 1, 1)},
    )


def _build_shu_osher() -> CaseSpec:
    inflow = _stack(3.857143, 2.629369, 0.0, 0.0, 10.3333)
    return CaseSpec(
        name="shu_osher",
        bounds=((-5.0, 5.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_shu_osher_init,
        bcs=_bcs_1d(_dirichlet(inflow), _INERT),
        t_final=1.8,
        presets={"default": (300, 1, 1), "coarse": (150, 1, 1)},
    )


def _build_titarev_toro() -> CaseSpec:
    inflow = _stack(1.515695, 0.523326, 0.0, 0.0, 1.805)
    return CaseSpec(
        name="titarev_toro",
        bounds=((-5.0, 5.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_titarev_toro_init,
        bcs=_bcs_1d(_dirichlet(inflow), _INERT),
        t_final=5.0,
        presets={"default": (1000, 1, 1)},
    )


def _build_shock_entropy_2d() -> CaseSpec:
    inflow = _stack(3.857143, 2.629369, 0.0, 0.0, 10.3333)
    return CaseSpec(
        name="shock_entropy_2d",
        bounds=((-5.0, 5.0), (-1.0, 1.0), (0.0, 1.0)),
        periodic=(False, True, False),
        gas=GasModel(gamma=1.4),
        initializer=_shock_entropy_2d_init,
        bcs=BoundarySet(
            x=(_dirichlet(inflow), _INERT),
            y=periodic_pair(),
            z=(_INERT, _INERT),
        ),
        t_final=1.8,
        presets={"default": (400, 80, 1), "reference": (1600, 320, 1)},
    )


def _build_riemann_config3() -> CaseSpec:
    return CaseSpec(
        name="riemann_config3",
        bounds=((0.0, 1.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_riemann_config3_init,
        bcs=BoundarySet(
            x=zero_gradient_pair(),
            y=zero_gradient_pair(),
            z=(_INERT, _INERT),
        ),
        t_final=0.8,
        presets={"default": (400, 400, 1), "coarse": (200, 200, 1)},
    )


def _build_rayleigh_taylor() -> CaseSpec:
    top = np.array([1.0, 0.0, 0.0, 0.0, 2.5])
    bottom = np.array([2.0, 0.0, 0.0, 0.0, 1.0])
    return CaseSpec(
        name="rayleigh_taylor",
        bounds=((0.0, 0.25), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=5.0 / 3.0),
        initializer=_rayleigh_taylor_init,
        bcs=BoundarySet(
            x=(_wall(BCKind.SLIP_WALL), _wall(BCKind.SLIP_WALL)),
            y=(_dirichlet(bottom), _dirichlet(top)),
            z=(_INERT, _INERT),
        ),
        t_final=1.95,
        source=_rayleigh_taylor_source,
        presets={"default": (120, 480, 1), "coarse": (60, 240, 1)},
    )


def _build_dmr() -> CaseSpec:
    return CaseSpec(
        name="dmr",
        bounds=((0.0, 3.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(gamma=1.4),
        initializer=_dmr_init,
        bcs=BoundarySet(
            x=(_dirichlet(_DMR_POST), _INERT),
            y=(
                BoundaryCondition(BCKind.CUSTOM, handler=_dmr_bottom),
                BoundaryCondition(BCKind.CUSTOM, handler=_dmr_top),
            ),
            z=(_INERT, _INERT),
        ),
        t_final=0.2,
        presets={"default": (768, 256, 1), "coarse": (384, 128, 1)},
    )


def _build_tgv_inviscid() -> CaseSpec:
    two_pi = 2.0 * math.pi
    return CaseSpec(
        name="tgv_inviscid",
        bounds=((0.0, two_pi), (0.0, two_pi), (0.0, two_pi)),
        periodic=(True, True, True),
        gas=GasModel(gamma=5.0 / 3.0),
        initializer=_tgv_init,
        bcs=BoundarySet(periodic_pair(), periodic_pair(), periodic_pair()),
        t_final=10.0,
        diagnostics=("ke", "enstrophy"),
        presets={"default": (64, 64, 64), "smoke": (32, 32, 32)},
    )


def _build_viscous_shock_tube() -> CaseSpec:
    return CaseSpec(
        name="viscous_shock_tube",
        bounds=((0.0, 1.0), (0.0, 0.5), (0.0, 1.0)),
        periodic=(False, False, False),
        gas=GasModel(
            gamma=1.4, viscous=True, Re=2500.0, Pr=0.73, Ma=1.0, mu=1.0
        ),
        initializer=_viscous_shock_tube_init,
        bcs=BoundarySet(
            x=(_wall(BCKind.NOSLIP_WALL), _wall(BCKind.NOSLIP_WALL)),
            y=(_wall(BCKind.NOSLIP_WALL), _wall(BCKind.SLIP_WALL)),
            z=(_INERT, _INERT),
        ),
        t_final=1.0,
        presets={"default": (2000, 1000, 1), "coarse": (500, 250, 1)},
    )


def _build_uniform() -> CaseSpec:
    return CaseSpec(
        name="uniform",
        bounds=((0.0, 1.0), (0.0, 1.0), (0.0, 1.0)),
        periodic=(True, True, True),
        gas=GasModel(gamma=1.4),
        initializer=_uniform_init,
        bcs=BoundarySet(periodic_pair(), periodic_pair(), periodic_pair()),
        t_final=1.0,
        presets={"default": (16, 16, 8)},
    )


_REGISTRY: dict[str, Callable[[], CaseSpec]] = {
    "linear_ooa": _build_linear_ooa,
    "isentropic_vortex": _build_isentropic_vortex,
    "sod": _build_sod,
    "lax": _build_lax,
    "shu_osher": _build_shu_osher,
    "titarev_toro": _build_titarev_toro,
    "shock_entropy_2d": _build_shock_entropy_2d,
    "riemann_config3": _build_riemann_config3,
    "rayleigh_taylor": _build_rayleigh_taylor,
    "dmr": _build_dmr,
    "tgv_inviscid": _build_tgv_inviscid,
    "viscous_shock_tube": _build_viscous_shock_tube,
    "uniform": _build_uniform,
}


def list_cases() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def make_case(name: str) -> CaseSpec:
    if name not in _REGISTRY:
        raise ValueError(
            f"unknown case {name!r}; known cases: {', '.join(list_cases())}"
        )
    return _REGISTRY[name]()


# -- exact and reference solutions --------------------------------------

_RIEMANN_SPLIT = {"sod": (_SOD_L, _SOD_R, 0.5), "lax": (_LAX_L, _LAX_R, 0.5)}
_FINE_REFERENCE = {
    "shu_osher": (1600, 1, 1),
    "titarev_toro": (3000, 1, 1),
    "shock_entropy_2d": (1600, 320, 1),
}


def advected_exact(spec: CaseSpec, grid: Grid, t: float) -> np.ndarray:
    """Exact profile for unit-speed advection cases at time t.

    Valid for initial fields whose exact evolution is passive
    transport at velocity (1, 1): the smooth accuracy cases.  Shifted
    coordinates wrap back into the domain on periodic axes so the
    profile re-enters instead of walking off the initializer's
    support.
    """
    x, y, z = grid.centers_mesh()
    shifted = []
    for axis, c in enumerate((x, y)):
        c = c - t
        if spec.periodic[axis]:
            a, b = spec.bounds[axis]
            c = a + np.mod(c - a, b - a)
        shifted.append(c)
    w = spec.initializer(shifted[0], shifted[1], z)
    out = np.empty((5,) + grid.shape_interior)
    out[:] = w
    return out


def _interp_along(
    values: np.ndarray, x_src: np.ndarray, x_dst: np.ndarray, axis: int
) -> np.ndarray:
    moved = np.moveaxis(values, axis, -1)
    flat = moved.reshape(-1, moved.shape[-1])
    out = np.empty((flat.shape[0], x_dst.size))
    for i in range(flat.shape[0]):
        out[i] = np.interp(x_dst, x_src, flat[i])
    return np.moveaxis(
        out.reshape(moved.shape[:-1] + (x_dst.size,)), -1, axis
    )


def _fine_run(spec: CaseSpec, n: tuple[int, int, int]):
    from .solver import RunSetup, SchemeConfig, run_case

    grid = spec.grid(n=n)
    setup = RunSetup(
        grid=grid,
        gas=spec.gas,
        scheme=SchemeConfig(),
        bcs=spec.bcs,
        q0=spec.initial_conserved(grid),
        t_final=spec.t_final,
        dt_policy=spec.dt_policy,
        source=spec.source,
        diag_every=10**9,
    )
    return grid, run_case(setup).w


def reference_solution(
    spec: CaseSpec,
    grid: Optional[Grid] = None,
    fine: Optional[tuple[int, int, int]] = None,
) -> np.ndarray:
    """Reference primitive field at the case's final time.

    Sampled on ``grid`` (the case default when omitted).  Shock tubes
    with piecewise-constant data use the exact Riemann solution;
    wave-interaction cases run a fine-grid high-order solve (cell
    count overridable through ``fine``) and interpolate down; the
    constant case returns its initial state.
    """
    from .analysis import exact_riemann

    if grid is None:
        grid = spec.grid()
    if spec.name in _RIEMANN_SPLIT:
        left, right, x0 = _RIEMANN_SPLIT[spec.name]
        exact = exact_riemann(left, right, spec.gas.gamma)
        x = grid.centers(0)
        rho, u, p = exact.sample((x - x0) / spec.t_final)
        out = np.zeros((5,) + grid.shape_interior)
        out[0] = rho[:, None, None]
        out[1] = u[:, None, None]
        out[4] = p[:, None, None]
        return out
    if spec.name == "uniform":
        return spec.initial_primitive(grid)
    if spec.name in _FINE_REFERENCE:
        n_fine = fine if fine is not None else _FINE_REFERENCE[spec.name]
        fine_grid, w = _fine_run(spec, n_fine)
        for axis in grid.active_axes:
            w = _interp_along(
                w, fine_grid.centers(axis), grid.centers(axis), 1 + axis
            )
        return w
    raise ValueError(f"no reference recipe for case {spec.name!r}")


def accuracy_study(
    spec: CaseSpec,
    cell_counts,
    scheme_cfg=None,
) -> list[dict]:
    """Grid-refinement error table for the smooth advection cases.

    Each row carries the per-axis cell count, the density L2 error
    against the advected exact profile, and the observed order from
    the previous row (None on the first).
    """
    from .analysis import l2_error, observed_order
    from .solver import RunSetup, SchemeConfig, run_case

    if scheme_cfg is None:
        scheme_cfg = SchemeConfig()
    rows: list[dict] = []
    prev: Optional[tuple[int, float]] = None
    default = spec.grid()
    for n in cell_counts:
        shape = tuple(n if default.active(ax) else 1 for ax in range(3))
        grid = spec.grid(n=shape)
        setup = RunSetup(
            grid=grid,
            gas=spec.gas,
            scheme=scheme_cfg,
            bcs=spec.bcs,
            q0=spec.initial_conserved(grid),
            t_final=spec.t_final,
            dt_policy=spec.dt_policy,
            source=spec.source,
            diag_every=10**9,
        )
        result = run_case(setup)
        exact = advected_exact(spec, grid, spec.t_final)
        err = l2_error(result.w[0], exact[0])
        order = None if prev is None else observed_order([prev, (n, err)])[0]
        rows.append({"n": n, "l2": err, "order": order})
        prev = (n, err)
    return rows
