"""Viscous and heat-conduction face fluxes.

Cell-center velocity and temperature gradients come from the compact
derivative machinery.  At a face, the derivative normal to the face
combines the averaged cell gradients with a damped two-point jump so
that grid-frequency modes stay coupled; tangential derivatives are
plain averages of the adjacent cell gradients.  Stress uses the full
deviatoric form with the -2/3 divergence term, and the heat flux
coefficient carries the Mach scaling of the nondimensional
temperature (the two cancel, so conduction stays finite as the
temperature scale changes).
"""

from __future__ import annotations

import numpy as np

from .boundary import pad_with_edge
from .gradients import GradientScheme, compact_first_derivative
from .grid import Grid, lines_along_axis, scatter_lines_interior
from .state import GasModel


def temperature_field(w: np.ndarray, gas: GasModel) -> np.ndarray:
    """Pointwise nondimensional temperature of a padded primitive field."""
    return gas.Ma**2 * gas.gamma * w[4] / w[0]


def cell_gradient_fields(
    w: np.ndarray, grid: Grid, gas: GasModel, scheme: GradientScheme
) -> np.ndarray:
    """Unscaled gradients of (u, v, w, T) at cell centers.

    Returns a padded array G of shape (4, 3, X, Y, Z); G[q, a] is the
    derivative of quantity q along axis a.  Inactive-axis entries are
    zero.  Ghost layers hold the nearest interior value so that face
    averaging next to walls degenerates to the one-sided interior
    gradient.
    """
    T = temperature_field(w, gas)
    quantities = np.concatenate([w[1:4], T[None]], axis=0)
    G = np.zeros((4, 3) + w.shape[1:])
    for axis in grid.active_axes:
        lines = lines_along_axis(quantities, grid, axis)
        g = grid.pad(axis)
        interior = lines[..., g:-g]
        du = compact_first_derivative(
            interior, scheme, bool(grid.periodic[axis])
        ) / grid.spacing[axis]
        gx = np.zeros((4,) + grid.shape_interior)
        scatter_lines_interior(du, grid, axis, gx)
        sx, sy, sz = grid.interior_slices()
        G[:, axis, sx, sy, sz] = gx
    for axis in range(3):
        pad_with_edge(G[:, axis], grid)
    return G


def face_flux_lines(
    w_lines: np.ndarray,
    grid: Grid,
    gas: GasModel,
    axis: int,
    G: np.ndarray,
    T: np.ndarray,
    alpha_damp: float = 1.0,
) -> np.ndarray:
    """Viscous flux at the faces of one axis sweep, shape (5, B, n+1).

    ``w_lines`` is the primitive line batch (5, B, m) for this axis;
    ``G`` the padded cell-gradient array from
    :func:`cell_gradient_fields`; ``T`` the padded temperature field.
    """
    g = grid.pad(axis)
    n = grid.n[axis]
    dx = grid.spacing[axis]
    lo = slice(g - 1, g + n)
    hi = slice(g, g + n + 1)

    t_lines = lines_along_axis(T[None], grid, axis)[0]
    gn_lines = lines_along_axis(G[:, axis], grid, axis)

    def damped(q_lines, grad_lines):
        qm = q_lines[..., lo]
        qp = q_lines[..., hi]
        gavg = 0.5 * (grad_lines[..., lo] + grad_lines[..., hi])
        return gavg + (alpha_damp / dx) * (qp - qm - dx * gavg)

    # normal derivatives of u, v, w, T at faces
    dn = np.empty((4,) + (w_lines.shape[1], n + 1))
    for q in range(3):
        dn[q] = damped(w_lines[1 + q], gn_lines[q])
    dn[3] = damped(t_lines, gn_lines[3])

    # tangential derivatives via face averages of cell gradients
    def face_avg_grad(q: int, along: int):
        lines = lines_along_axis(G[q, along][None], grid, axis)[0]
        return 0.5 * (lines[..., lo] + lines[..., hi])

    div = dn[axis].copy()
    for t_ax in grid.active_axes:
        if t_ax != axis:
            div += face_avg_grad(t_ax, t_ax)

    mu_eff = gas.mu / gas.Re
    kappa_eff = gas.mu / (gas.Re * gas.Pr * gas.Ma**2 * (gas.gamma - 1.0))

    flux = np.zeros((5,) + dn.shape[1:])
    uf = [0.5 * (w_lines[1 + q][..., lo] + w_lines[1 + q][..., hi]) for q in range(3)]
    for comp in range(3):
        if comp == axis:
            tau = mu_eff * (2.0 * dn[axis] - (2.0 / 3.0) * div)
        else:
            cross = face_avg_grad(axis, comp) if grid.active(comp) else 0.0
            tau = mu_eff * (dn[comp] + cross)
        flux[1 + comp] = tau
        flux[4] += uf[comp] * tau
    flux[4] += kappa_eff * dn[3]
    return flux
