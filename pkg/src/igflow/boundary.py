"""Ghost-cell boundary conditions on primitive fields.

Ghost layers exist so pointwise reconstruction stencils never need
special cases; every condition here only writes ghost cells.  Axes are
filled in order x, y, z over the full extent of the other axes, so
corner ghosts end up consistent with whichever conditions meet there.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

import numpy as np

from .grid import Grid


class ConfigError(ValueError):
    pass


class BCKind(Enum):
    PERIODIC = "periodic"
    SLIP_WALL = "slip_wall"
    NOSLIP_WALL = "noslip_wall"
    ZERO_GRADIENT = "zero_gradient"
    DIRICHLET = "dirichlet"
    CUSTOM = "custom"


#: custom handlers fill the ghost region themselves:
#: handler(data, grid, axis, side, t) with side 0 (low) or 1 (high)
CustomHandler = Callable[[np.ndarray, Grid, int, int, float], None]


@dataclass(frozen=True)
class BoundaryCondition:
    kind: BCKind
    state: Optional[np.ndarray] = None
    handler: Optional[CustomHandler] = None

    def __post_init__(self) -> None:
        if self.kind is BCKind.DIRICHLET:
            if self.state is None or np.asarray(self.state).shape != (5,):
                raise ConfigError("dirichlet condition needs a 5-component state")
        if self.kind is BCKind.CUSTOM and self.handler is None:
            raise ConfigError("custom condition needs a handler")


@dataclass(frozen=True)
class BoundarySet:
    """One (low, high) condition pair per axis."""

    x: tuple[BoundaryCondition, BoundaryCondition]
    y: tuple[BoundaryCondition, BoundaryCondition]
    z: tuple[BoundaryCondition, BoundaryCondition]

    def pair(self, axis: int) -> tuple[BoundaryCondition, BoundaryCondition]:
        return (self.x, self.y, self.z)[axis]

    def validate(self, grid: Grid) -> None:
        for axis in grid.active_axes:
            lo, hi = self.pair(axis)
            n_per = (lo.kind is BCKind.PERIODIC) + (hi.kind is BCKind.PERIODIC)
            if n_per == 1:
                raise ConfigError(
                    f"unmatched periodic pair on axis {axis}: both sides must be periodic"
                )
            if (n_per == 2) != bool(grid.periodic[axis]):
                raise ConfigError(
                    f"axis {axis} periodicity disagrees between grid and conditions"
                )


def periodic_pair() -> tuple[BoundaryCondition, BoundaryCondition]:
    bc = BoundaryCondition(BCKind.PERIODIC)
    return (bc, bc)


def zero_gradient_pair() -> tuple[BoundaryCondition, BoundaryCondition]:
    bc = BoundaryCondition(BCKind.ZERO_GRADIENT)
    return (bc, bc)


def _layer(data: np.ndarray, axis: int, idx) -> tuple:
    sl = [slice(None)] * data.ndim
    sl[1 + axis] = idx
    return tuple(sl)


def _fill_side(
    data: np.ndarray,
    grid: Grid,
    axis: int,
    side: int,
    bc: BoundaryCondition,
    t: float,
) -> None:
    g = grid.pad(axis)
    n = grid.n[axis]
    if bc.kind is BCKind.PERIODIC:
        if side == 0:
            data[_layer(data, axis, slice(0, g))] = data[
                _layer(data, axis, slice(n, n + g))
            ]
        else:
            data[_layer(data, axis, slice(g + n, g + n + g))] = data[
                _layer(data, axis, slice(g, 2 * g))
            ]
        return
    if bc.kind is BCKind.ZERO_GRADIENT:
        edge = g if side == 0 else g + n - 1
        tgt = slice(0, g) if side == 0 else slice(g + n, g + n + g)
        data[_layer(data, axis, tgt)] = data[_layer(data, axis, edge)][
            _expand(axis, data.ndim)
        ]
        return
    if bc.kind is BCKind.DIRICHLET:
        tgt = slice(0, g) if side == 0 else slice(g + n, g + n + g)
        view = data[_layer(data, axis, tgt)]
        state = np.asarray(bc.state, dtype=float)
        view[:] = state.reshape((5,) + (1,) * (view.ndim - 1))
        return
    if bc.kind in (BCKind.SLIP_WALL, BCKind.NOSLIP_WALL):
        flip = (
            [1 + axis]
            if bc.kind is BCKind.SLIP_WALL
            else [1, 2, 3]
        )
        for k in range(g):
            if side == 0:
                ghost, src = g - 1 - k, g + k
            else:
                ghost, src = g + n + k, g + n - 1 - k
            data[_layer(data, axis, ghost)] = data[_layer(data, axis, src)]
            for comp in flip:
                data[(comp,) + _layer(data, axis, ghost)[1:]] *= -1.0
        return
    if bc.kind is BCKind.CUSTOM:
        bc.handler(data, grid, axis, side, t)
        return
    raise ConfigError(f"unhandled boundary kind {bc.kind}")


def _expand(axis: int, ndim: int):
    # broadcasting helper: reinsert the collapsed axis
    sl = [slice(None)] * (ndim - 1)
    sl.insert(1 + axis, np.newaxis)
    return tuple(sl)


def fill_ghosts(
    data: np.ndarray, grid: Grid, bcs: BoundarySet, t: float = 0.0
) -> None:
    """Fill all ghost layers of a padded primitive field in place."""
    for axis in grid.active_axes:
        lo, hi = bcs.pair(axis)
        _fill_side(data, grid, axis, 0, lo, t)
        _fill_side(data, grid, axis, 1, hi, t)


def pad_with_edge(data: np.ndarray, grid: Grid) -> None:
    """Copy the nearest interior layer into every ghost layer in place.

    Used for auxiliary cell-centered fields (gradient components)
    whose face averaging near boundaries falls back to the interior
    value.
    """
    for axis in grid.active_axes:
        g = grid.pad(axis)
        n = grid.n[axis]
        data[_layer(data, axis, slice(0, g))] = data[_layer(data, axis, g)][
            _expand(axis, data.ndim)
        ]
        data[_layer(data, axis, slice(g + n, g + n + g))] = data[
            _layer(data, axis, g + n - 1)
        ][_expand(axis, data.ndim)]
