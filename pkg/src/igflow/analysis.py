"""Verification tools: convection-operator symbols, an exact Riemann
solver for reference curves, error norms, observed orders, and the
kinetic-energy and enstrophy diagnostics.

Operator symbols are reported in spacing-free form F * dx, to be
compared against the exact operator -i*beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gradients import GradientScheme
from .grid import Grid
from .reconstruction import (
    ReconScheme,
    explicit_gradient_states,
    first_order_states,
    ig_states,
    muscl3_states,
)
from .gradients import compact_first_derivative, compact_second_derivative
from .state import GasModel


# ------------------------------------------------------------------
# closed-form operator symbols
# ------------------------------------------------------------------

def operator_eg(beta) -> np.ndarray:
    """Closed-form symbol of the explicit-gradient scheme."""
    beta = np.asarray(beta, dtype=float)
    c, s = np.cos(beta), np.sin(beta)
    return -((c - 1.0) ** 2) / 3.0 + 1j * s * (c - 4.0) / 3.0


def operator_ig4(beta) -> np.ndarray:
    """Closed-form symbol of the fourth-order compact-gradient scheme."""
    beta = np.asarray(beta, dtype=float)
    c, s = np.cos(beta), np.sin(beta)
    den = 12.0 * (5.0 * c + 7.0) ** 2
    re = (c - 1.0) ** 2 * (c**3 - 7.0 * c**2 + 11.0 * c - 5.0) / den
    im = -s * (c**4 - 8.0 * c**3 + 78.0 * c**2 + 728.0 * c + 929.0) / den
    return re + 1j * im


def operator_ig6(beta, variant: str = "corrected") -> np.ndarray:
    """Closed-form symbol of the sixth-order compact-gradient scheme.

    The dissipative (real) part shares the denominator 108*(2cos b+3)^2
    in both variants.  The source's dispersive part prints the
    denominator constant as 37 where its own derivation gives 3; the
    ``corrected`` variant uses 3 and agrees with the numeric operator,
    the ``printed`` variant reproduces the typo for comparison.
    """
    beta = np.asarray(beta, dtype=float)
    c, s = np.cos(beta), np.sin(beta)
    re = (c - 1.0) ** 2 * (c**3 - 7.0 * c**2 + 26.0 * c - 20.0) / (
        108.0 * (2.0 * c + 3.0) ** 2
    )
    if variant == "corrected":
        dcon = 3.0
    elif variant == "printed":
        dcon = 37.0
    else:
        raise ValueError(f"unknown variant {variant!r}")
    im = -s * (c**4 - 8.0 * c**3 + 105.0 * c**2 + 1070.0 * c + 1532.0) / (
        108.0 * (2.0 * c + dcon) ** 2
    )
    return re + 1j * im


def operator_first_order(beta) -> np.ndarray:
    beta = np.asarray(beta, dtype=float)
    return -(1.0 - np.exp(-1j * beta))


_OPERATOR_SCHEMES = {
    "first_order": ReconScheme.FIRST_ORDER,
    "eg": ReconScheme.MUSCL3,
    "muscl3": ReconScheme.MUSCL3,
    "ig4": ReconScheme.IG4,
    "ig6": ReconScheme.IG6,
}


def operator_numeric(scheme, beta: float, n: int = 64) -> complex:
    """Measured symbol of the production reconstruction on a Fourier mode.

    Builds cos/sin lines of frequency ``beta`` on an n-cell periodic
    line, runs the scheme's own interface-state path with unit
    advection speed (upwind flux = left state) and reads off the
    residual amplification of cell 0.
    """
    if isinstance(scheme, str):
        scheme = _OPERATOR_SCHEMES[scheme.lower()]
    g = 3
    j = np.arange(-g, n + g)
    lines = np.stack([np.cos(beta * j), np.sin(beta * j)])[:, None, :]
    if scheme is ReconScheme.FIRST_ORDER:
        ul, _ = first_order_states(lines, g)
    elif scheme is ReconScheme.MUSCL3:
        ul, _ = muscl3_states(lines, g)
    elif scheme in (ReconScheme.IG4, ReconScheme.IG6):
        grad = (
            GradientScheme.CD4 if scheme is ReconScheme.IG4 else GradientScheme.CD6
        )
        interior = lines[..., g:-g]
        du = compact_first_derivative(interior, grad, True)
        d2u = compact_second_derivative(du, grad, True)
        ul, _ = ig_states(lines, du, d2u, g, True)
    else:
        raise ValueError(f"no linear operator for scheme {scheme}")
    res = -(ul[..., 1:] - ul[..., :-1])
    return complex(res[0, 0, 0], res[1, 0, 0])


def operator_table(schemes, betas, n: int = 64) -> list[tuple]:
    """Rows (scheme, beta, Re F, Im F) for the named schemes."""
    rows = []
    for name in schemes:
        for b in betas:
            f = operator_numeric(name, float(b), n)
            rows.append((name, float(b), f.real, f.imag))
    return rows


# ------------------------------------------------------------------
# exact Riemann solution
# ------------------------------------------------------------------

class VacuumError(ValueError):
    pass


@dataclass
class RiemannExact:
    """Self-similar exact solution of a 1-D Riemann problem.

    Star-region pressure and velocity come from a Newton iteration on
    the pressure function; ``sample`` evaluates (rho, u, p) at
    similarity coordinates xi = x/t.
    """

    left: tuple[float, float, float]
    right: tuple[float, float, float]
    gamma: float
    p_star: float
    u_star: float

    def sample(self, xi) -> np.ndarray:
        xi = np.asarray(xi, dtype=float)
        g = self.gamma
        rl, ul, pl = self.left
        rr, ur, pr = self.right
        cl = math.sqrt(g * pl / rl)
        cr = math.sqrt(g * pr / rr)
        ps, us = self.p_star, self.u_star
        out = np.empty((3,) + xi.shape)

        gp1 = g + 1.0
        gm1 = g - 1.0

        left_shock = ps > pl
        right_shock = ps > pr

        # left wave
        if left_shock:
            rsl = rl * (ps / pl + gm1 / gp1) / (gm1 / gp1 * ps / pl + 1.0)
            sl = ul - cl * math.sqrt(gp1 / (2.0 * g) * ps / pl + gm1 / (2.0 * g))
        else:
            rsl = rl * (ps / pl) ** (1.0 / g)
            csl = cl * (ps / pl) ** (gm1 / (2.0 * g))
            head_l = ul - cl
            tail_l = us - csl
        # right wave
        if right_shock:
            rsr = rr * (ps / pr + gm1 / gp1) / (gm1 / gp1 * ps / pr + 1.0)
            sr = ur + cr * math.sqrt(gp1 / (2.0 * g) * ps / pr + gm1 / (2.0 * g))
        else:
            rsr = rr * (ps / pr) ** (1.0 / g)
            csr = cr * (ps / pr) ** (gm1 / (2.0 * g))
            head_r = ur + cr
            tail_r = us + csr

        flat = xi.ravel()
        rho = np.empty_like(flat)
        vel = np.empty_like(flat)
        prs = np.empty_like(flat)
        for k, x in enumerate(flat):
            if x <= us:
                if left_shock:
                    if x <= sl:
                        rho[k], vel[k], prs[k] = rl, ul, pl
                    else:
                        rho[k], vel[k], prs[k] = rsl, us, ps
                else:
                    if x <= head_l:
                        rho[k], vel[k], prs[k] = rl, ul, pl
                    elif x >= tail_l:
                        rho[k], vel[k], prs[k] = rsl, us, ps
                    else:
                        u_f = (2.0 / gp1) * (cl + 0.5 * gm1 * ul + x)
                        c_f = (2.0 / gp1) * (cl + 0.5 * gm1 * (ul - x))
                        rho[k] = rl * (c_f / cl) ** (2.0 / gm1)
                        vel[k] = u_f
                        prs[k] = pl * (c_f / cl) ** (2.0 * g / gm1)
            else:
                if right_shock:
                    if x >= sr:
                        rho[k], vel[k], prs[k] = rr, ur, pr
                    else:
                        rho[k], vel[k], prs[k] = rsr, us, ps
                else:
                    if x >= head_r:
                        rho[k], vel[k], prs[k] = rr, ur, pr
                    elif x <= tail_r:
                        rho[k], vel[k], prs[k] = rsr, us, ps
                    else:
                        u_f = (2.0 / gp1) * (-cr + 0.5 * gm1 * ur + x)
                        c_f = (2.0 / gp1) * (cr - 0.5 * gm1 * (ur - x))
                        rho[k] = rr * (c_f / cr) ** (2.0 / gm1)
                        vel[k] = u_f
                        prs[k] = pr * (c_f / cr) ** (2.0 * g / gm1)
        out[0] = rho.reshape(xi.shape)
        out[1] = vel.reshape(xi.shape)
        out[2] = prs.reshape(xi.shape)
        return out


def _pressure_fn(p: float, rk: float, pk: float, ck: float, g: float):
    """Toro-style f_K(p) and its derivative for one side."""
    gm1 = g - 1.0
    gp1 = g + 1.0
    if p > pk:
        ak = 2.0 / (gp1 * rk)
        bk = gm1 / gp1 * pk
        root = math.sqrt(ak / (p + bk))
        f = (p - pk) * root
        df = root * (1.0 - 0.5 * (p - pk) / (p + bk))
    else:
        f = 2.0 * ck / gm1 * ((p / pk) ** (gm1 / (2.0 * g)) - 1.0)
        df = 1.0 / (rk * ck) * (p / pk) ** (-gp1 / (2.0 * g))
    return f, df


def exact_riemann(
    left, right, gas: GasModel | float, tol: float = 1.0e-12, max_iter: int = 100
) -> RiemannExact:
    """Solve a 1-D Riemann problem exactly.

    ``left``/``right`` are (rho, u, p) triples; ``gas`` a GasModel or
    a bare gamma.  Raises on vacuum-forming data.
    """
    g = gas.gamma if isinstance(gas, GasModel) else float(gas)
    rl, ul, pl = (float(v) for v in left)
    rr, ur, pr = (float(v) for v in right)
    if min(rl, rr, pl, pr) <= 0.0:
        raise ValueError("states must have positive density and pressure")
    cl = math.sqrt(g * pl / rl)
    cr = math.sqrt(g * pr / rr)
    gm1 = g - 1.0
    if 2.0 * cl / gm1 + 2.0 * cr / gm1 <= ur - ul:
        raise VacuumError("vacuum forms between the states")

    # two-rarefaction style initial guess, floored away from zero
    p = max(
        0.5 * (pl + pr) - 0.125 * (ur - ul) * (rl + rr) * (cl + cr),
        1.0e-8 * min(pl, pr),
    )
    du = ur - ul
    for _ in range(max_iter):
        fl, dfl = _pressure_fn(p, rl, pl, cl, g)
        fr, dfr = _pressure_fn(p, rr, pr, cr, g)
        step = (fl + fr + du) / (dfl + dfr)
        p_new = p - step
        if p_new <= 0.0:
            p_new = 0.5 * p
        if abs(p_new - p) < tol * max(p_new, 1.0e-300):
            p = p_new
            break
        p = p_new
    fl, _ = _pressure_fn(p, rl, pl, cl, g)
    fr, _ = _pressure_fn(p, rr, pr, cr, g)
    u = 0.5 * (ul + ur) + 0.5 * (fr - fl)
    return RiemannExact((rl, ul, pl), (rr, ur, pr), g, p, u)


# ------------------------------------------------------------------
# error norms and diagnostics
# ------------------------------------------------------------------

def l2_error(field: np.ndarray, reference: np.ndarray) -> float:
    """Root-mean-square pointwise difference, √(Σ err²/N)."""
    a = np.asarray(field, dtype=float)
    b = np.asarray(reference, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"grid mismatch: {a.shape} vs {b.shape}")
    return float(np.sqrt(np.mean((a - b) ** 2)))


def observed_order(errors: list[tuple[int, float]]) -> list[float]:
    """Convergence orders from (N, error) pairs on doubling grids."""
    if len(errors) < 2:
        raise ValueError("need at least two grids")
    orders = []
    for (n1, e1), (n2, e2) in zip(errors[:-1], errors[1:]):
        if e1 <= 0.0 or e2 <= 0.0:
            raise ValueError("zero error input")
        orders.append(math.log(e1 / e2) / math.log(n2 / n1))
    return orders


def kinetic_energy(w: np.ndarray, grid: Grid) -> float:
    """Σ ½ ρ |vel|² cellvolume over the interior (primitive input)."""
    ke = 0.5 * w[0] * (w[1] ** 2 + w[2] ** 2 + w[3] ** 2)
    return float(ke.sum()) * grid.cell_volume


def _interior_lines(arr: np.ndarray, axis: int) -> tuple[np.ndarray, tuple]:
    moved = np.moveaxis(arr, axis, -1)
    return np.ascontiguousarray(moved.reshape(-1, moved.shape[-1])), moved.shape


def velocity_gradient(
    w: np.ndarray, grid: Grid, scheme: GradientScheme = GradientScheme.CD6
) -> np.ndarray:
    """Unscaled du_i/dx_j of an interior primitive field, shape (3, 3, ...)."""
    out = np.zeros((3, 3) + w.shape[1:])
    for axis in grid.active_axes:
        for comp in range(3):
            lines, mshape = _interior_lines(w[1 + comp], axis)
            d = compact_first_derivative(
                lines, scheme, bool(grid.periodic[axis])
            ) / grid.spacing[axis]
            out[comp, axis] = np.moveaxis(d.reshape(mshape), -1, axis)
    return out


def enstrophy(
    w: np.ndarray, grid: Grid, scheme: GradientScheme = GradientScheme.CD6
) -> float:
    """Σ ‖curl(vel)‖ cellvolume using compact cell-center gradients."""
    gv = velocity_gradient(w, grid, scheme)
    wx = gv[2, 1] - gv[1, 2]
    wy = gv[0, 2] - gv[2, 0]
    wz = gv[1, 0] - gv[0, 1]
    mag = np.sqrt(wx**2 + wy**2 + wz**2)
    return float(mag.sum()) * grid.cell_volume
