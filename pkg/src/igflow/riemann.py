"""Convective interface fluxes.

The physical flux, the square-root-weighted average state, the
bracketed wave-speed estimates and the three-wave approximate Riemann
flux, all parameterized by the sweep axis.  States are primitive
(rho, u, v, w, p); the normal direction is identified by the velocity
component index ``d`` in {1, 2, 3}.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from ._kernels import hllc_flux_batch
from .state import GasModel


class FluxError(RuntimeError):
    pass


class WaveSpeeds(NamedTuple):
    left: np.ndarray
    right: np.ndarray
    contact: np.ndarray


class RoeAverage(NamedTuple):
    rho: np.ndarray
    u: np.ndarray
    v: np.ndarray
    w: np.ndarray
    enthalpy: np.ndarray
    sound: np.ndarray


def _stack5(state) -> np.ndarray:
    arr = np.asarray(state, dtype=float)
    if arr.shape[0] != 5:
        raise ValueError(f"expected leading extent 5, got {arr.shape}")
    return arr


def convective_flux(state, gas: GasModel, axis: int = 0) -> np.ndarray:
    """Physical flux of the conservation law along one axis.

    ``state`` is primitive, shape (5, ...); ``axis`` in {0, 1, 2}.
    """
    w = _stack5(state)
    d = 1 + axis
    rho, p = w[0], w[4]
    un = w[d]
    E = p / (gas.gamma - 1.0) + 0.5 * rho * (w[1] ** 2 + w[2] ** 2 + w[3] ** 2)
    f = np.empty_like(w)
    mdot = rho * un
    f[0] = mdot
    f[1] = mdot * w[1]
    f[2] = mdot * w[2]
    f[3] = mdot * w[3]
    f[d] += p
    f[4] = un * (E + p)
    return f


def roe_average(left, right, gas: GasModel) -> RoeAverage:
    """Square-root-density-weighted average of two primitive states."""
    wl = _stack5(left)
    wr = _stack5(right)
    gm1 = gas.gamma - 1.0
    srl = np.sqrt(wl[0])
    srr = np.sqrt(wr[0])
    inv = 1.0 / (srl + srr)

    def avg(a, b):
        return (srl * a + srr * b) * inv

    def enthalpy(w):
        q2 = w[1] ** 2 + w[2] ** 2 + w[3] ** 2
        return gas.gamma * w[4] / (gm1 * w[0]) + 0.5 * q2

    u = avg(wl[1], wr[1])
    v = avg(wl[2], wr[2])
    w_ = avg(wl[3], wr[3])
    h = avg(enthalpy(wl), enthalpy(wr))
    c2 = gm1 * (h - 0.5 * (u * u + v * v + w_ * w_))
    return RoeAverage(srl * srr, u, v, w_, h, np.sqrt(c2))


def wave_speed_estimates(left, right, gas: GasModel, axis: int = 0) -> WaveSpeeds:
    """Bracketed acoustic speeds and the contact speed.

    The outer speeds take the minimum (maximum) of the one-sided
    signal speed and the average-state signal speed; the contact speed
    follows from the normal momentum balance between the two star
    states.
    """
    wl = _stack5(left)
    wr = _stack5(right)
    d = 1 + axis
    cl = np.sqrt(gas.gamma * wl[4] / wl[0])
    cr = np.sqrt(gas.gamma * wr[4] / wr[0])
    roe = roe_average(wl, wr, gas)
    una = (roe.u, roe.v, roe.w)[axis]
    sl = np.minimum(wl[d] - cl, una - roe.sound)
    sr = np.maximum(wr[d] + cr, una + roe.sound)
    num = (
        wr[4]
        - wl[4]
        + wl[0] * wl[d] * (sl - wl[d])
        - wr[0] * wr[d] * (sr - wr[d])
    )
    den = wl[0] * (sl - wl[d]) - wr[0] * (sr - wr[d])
    return WaveSpeeds(sl, sr, num / den)


def hllc_flux(left, right, gas: GasModel, axis: int = 0) -> np.ndarray:
    """Three-wave approximate Riemann flux from primitive face states.

    Accepts single states (5,) or stacks (5, ...).  A non-finite flux
    entry raises with the offending interface location.
    """
    wl = _stack5(left)
    wr = _stack5(right)
    if wl.shape != wr.shape:
        raise ValueError("left/right state shapes differ")
    shape = wl.shape
    flat_l = np.ascontiguousarray(wl.reshape(5, 1, -1))
    flat_r = np.ascontiguousarray(wr.reshape(5, 1, -1))
    out = np.empty_like(flat_l)
    hllc_flux_batch(flat_l, flat_r, gas.gamma, 1 + axis, out)
    if not np.all(np.isfinite(out)):
        bad = np.argwhere(~np.isfinite(out).all(axis=0))
        raise FluxError(f"non-finite flux at interface index {tuple(bad[0])}")
    return out.reshape(shape)


def hllc_flux_lines(
    wl: np.ndarray, wr: np.ndarray, gas: GasModel, axis: int, out: np.ndarray
) -> None:
    """Batched in-place flux for contiguous face stacks (5, B, F)."""
    hllc_flux_batch(wl, wr, gas.gamma, 1 + axis, out)
