"""Gas model and conversions between primitive and conserved variables.

Component layout is fixed everywhere in the package:

* primitive:  (rho, u, v, w, p)
* conserved:  (rho, rho*u, rho*v, rho*w, rho*E)

with total energy density ``rho*E = p/(gamma-1) + rho*|u|^2/2``.
Temperature follows the nondimensionalization ``T = Ma^2 * gamma * p / rho``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

RHO, XMOM, YMOM, ZMOM, ENER = range(5)
IU, IV, IW, IP = 1, 2, 3, 4


class PrimitiveState(NamedTuple):
    rho: float
    u: float
    v: float
    w: float
    p: float


class ConservedState(NamedTuple):
    rho: float
    mx: float
    my: float
    mz: float
    E: float


@dataclass(frozen=True)
class GasModel:
    """Calorically perfect gas plus the transport constants of a run.

    ``Re``, ``Pr`` and ``Ma`` only matter when ``viscous`` is set; the
    inviscid equations never read them.  ``mu`` is the constant
    nondimensional dynamic viscosity.
    """

    gamma: float = 1.4
    viscous: bool = False
    Re: float = 0.0
    Pr: float = 0.0
    Ma: float = 0.0
    mu: float = 0.0

    def __post_init__(self) -> None:
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")
        if self.viscous:
            for name in ("Re", "Pr", "Ma", "mu"):
                if not getattr(self, name) > 0.0:
                    raise ValueError(f"viscous gas model needs {name} > 0")


def _asarray5(state) -> np.ndarray:
    arr = np.asarray(state, dtype=float)
    if arr.shape[0] != 5:
        raise ValueError(f"state array must have leading extent 5, got {arr.shape}")
    return arr


def conservative_from_primitive(state, gas: GasModel) -> np.ndarray:
    """Map (rho, u, v, w, p) to (rho, mx, my, mz, E); works on stacks."""
    w = _asarray5(state)
    if not np.all(np.isfinite(w)):
        raise ValueError("non-finite primitive state")
    q = np.empty_like(w)
    rho = w[RHO]
    q[RHO] = rho
    q[XMOM] = rho * w[IU]
    q[YMOM] = rho * w[IV]
    q[ZMOM] = rho * w[IW]
    ke = 0.5 * rho * (w[IU] ** 2 + w[IV] ** 2 + w[IW] ** 2)
    q[ENER] = w[IP] / (gas.gamma - 1.0) + ke
    return q


def primitive_from_conservative(state, gas: GasModel) -> np.ndarray:
    """Map (rho, mx, my, mz, E) to (rho, u, v, w, p); works on stacks.

    Nonpositive density or pressure in the *output* is returned as-is
    rather than raised: the positivity fallback in the reconstruction
    is the layer that acts on it.  Non-finite *input* is an error.
    """
    q = _asarray5(state)
    if not np.all(np.isfinite(q)):
        raise ValueError("non-finite conserved state")
    w = np.empty_like(q)
    rho = q[RHO]
    w[RHO] = rho
    w[IU] = q[XMOM] / rho
    w[IV] = q[YMOM] / rho
    w[IW] = q[ZMOM] / rho
    ke = 0.5 * (q[XMOM] ** 2 + q[YMOM] ** 2 + q[ZMOM] ** 2) / rho
    w[IP] = (gas.gamma - 1.0) * (q[ENER] - ke)
    return w


def sound_speed(state, gas: GasModel):
    """c = sqrt(gamma p / rho) for a primitive state or stack."""
    w = _asarray5(state)
    return np.sqrt(gas.gamma * w[IP] / w[RHO])


def temperature(state, gas: GasModel):
    """Nondimensional temperature Ma^2 gamma p / rho of a primitive state."""
    w = _asarray5(state)
    return gas.Ma**2 * gas.gamma * w[IP] / w[RHO]


def total_energy(rho: float, u: float, v: float, w: float, p: float, gamma: float) -> float:
    """Scalar helper for case setup tables."""
    return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v + w * w)


def is_physical(state) -> np.ndarray:
    """Pointwise check rho > 0 and p > 0 on a primitive state or stack."""
    w = _asarray5(state)
    return (w[RHO] > 0.0) & (w[IP] > 0.0)


def mach_number(state, gas: GasModel):
    w = _asarray5(state)
    speed = np.sqrt(w[IU] ** 2 + w[IV] ** 2 + w[IW] ** 2)
    return speed / sound_speed(w, gas)


def sound_speed_scalar(rho: float, p: float, gamma: float) -> float:
    return math.sqrt(gamma * p / rho)
