"""Cell-centered first and second derivatives in scaled form.

Derivatives are carried as ``U' = dx * d/dx`` and ``U'' = dx^2 *
d2/dx2`` so the interface-state formulas stay spacing-free.  Two
families are provided: a three-point explicit stencil and two compact
(implicitly coupled) schemes solved line-by-line with the tridiagonal
machinery.  The second derivative is always the first-derivative
operator applied twice.

Compact line solves act on interior values only.  Periodic lines close
cyclically; bounded lines use one-sided third-order closures at the
edge rows and the classical three-point fourth-order relation one row
in, which keeps boundary treatment independent of ghost content.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ._kernels import compact_rhs_closed, compact_rhs_periodic
from .tridiag import TridiagonalOperator


class GradientScheme(Enum):
    EG2 = "eg2"
    CD4 = "cd4"
    CD6 = "cd6"


#: (alpha, a1, b1) of  alpha*U'[j-1] + U'[j] + alpha*U'[j+1]
#:   = (a1/2)*(U[j+1]-U[j-1]) + (b1/4)*(U[j+2]-U[j-2])
_COMPACT_COEF = {
    GradientScheme.CD4: (5.0 / 14.0, 11.0 / 7.0, 1.0 / 7.0),
    GradientScheme.CD6: (1.0 / 3.0, 14.0 / 9.0, 1.0 / 9.0),
}

_PADE_ALPHA = 0.25
_MIN_LINE = 5

_operator_cache: dict[tuple, TridiagonalOperator] = {}


def scheme_coefficients(scheme: GradientScheme) -> tuple[float, float, float]:
    if scheme not in _COMPACT_COEF:
        raise ValueError(f"{scheme} is not a compact scheme")
    return _COMPACT_COEF[scheme]


def explicit_gradients(u: np.ndarray, ghost: int) -> tuple[np.ndarray, np.ndarray]:
    """Three-point scaled derivatives of a ghost-padded line batch.

    ``u`` has shape (..., n + 2*ghost); both outputs have shape
    (..., n) over interior cells and read one ghost layer.
    """
    if ghost < 1:
        raise ValueError("explicit gradients need at least one ghost layer")
    n = u.shape[-1] - 2 * ghost
    if n < 1:
        raise ValueError("no interior cells")
    c = u[..., ghost : ghost + n]
    up = u[..., ghost + 1 : ghost + n + 1]
    um = u[..., ghost - 1 : ghost + n - 1]
    du = 0.5 * (up - um)
    d2u = (up + um) - 2.0 * c
    return du, d2u


def _build_operator(scheme: GradientScheme, n: int, periodic: bool) -> TridiagonalOperator:
    key = (scheme, n, periodic)
    op = _operator_cache.get(key)
    if op is not None:
        return op
    alpha, _, _ = scheme_coefficients(scheme)
    sub = np.full(n, alpha)
    diag = np.ones(n)
    sup = np.full(n, alpha)
    if not periodic:
        # one-sided closure rows and their fourth-order neighbours
        sub[0] = 0.0
        sup[0] = 2.0
        sub[1] = _PADE_ALPHA
        sup[1] = _PADE_ALPHA
        sub[n - 2] = _PADE_ALPHA
        sup[n - 2] = _PADE_ALPHA
        sub[n - 1] = 2.0
        sup[n - 1] = 0.0
    op = TridiagonalOperator(sub, diag, sup, cyclic=periodic)
    _operator_cache[key] = op
    return op


def compact_first_derivative(
    u: np.ndarray, scheme: GradientScheme, periodic: bool
) -> np.ndarray:
    """Scaled first derivative of interior line values.

    ``u`` has shape (..., n) holding interior cells only; the solve
    never reads ghost data.  Lines shorter than five cells cannot
    support the boundary closures and are rejected.

    The solve runs in both line orientations and the results are
    averaged.  A single tridiagonal sweep has a direction, so its
    rounding does not commute with reflecting the line; the averaged
    operator does, exactly, which keeps planar-symmetric flows
    symmetric to the last bit instead of seeding growth at round-off.
    """
    u = np.asarray(u, dtype=float)
    n = u.shape[-1]
    if n < _MIN_LINE:
        raise ValueError(
            f"compact derivative needs at least {_MIN_LINE} interior cells, got {n}"
        )
    _, a1, b1 = scheme_coefficients(scheme)
    c1 = 0.5 * a1
    c2 = 0.25 * b1
    op = _build_operator(scheme, n, periodic)
    build = compact_rhs_periodic if periodic else compact_rhs_closed

    flat = np.ascontiguousarray(u.reshape(-1, n))
    rhs = np.empty_like(flat)
    build(flat, c1, c2, rhs)
    fwd = op.solve(rhs)

    rev_in = np.ascontiguousarray(flat[:, ::-1])
    build(rev_in, c1, c2, rhs)
    rev = op.solve(rhs)

    return (0.5 * (fwd - rev[:, ::-1])).reshape(u.shape)


def compact_second_derivative(
    du: np.ndarray, scheme: GradientScheme, periodic: bool
) -> np.ndarray:
    """Scaled second derivative: the first-derivative operator applied
    to an already-computed scaled first derivative."""
    return compact_first_derivative(du, scheme, periodic)


def gradient_symbol(scheme: GradientScheme, beta) -> np.ndarray:
    """Modified-wavenumber symbol g(beta) of the scaled first derivative.

    For data exp(i beta j) the operator returns g(beta) exp(i beta j);
    the exact derivative has g = i beta.
    """
    beta = np.asarray(beta, dtype=float)
    if scheme is GradientScheme.EG2:
        return 1j * np.sin(beta)
    if scheme is GradientScheme.CD4:
        return 1j * (np.sin(beta) * np.cos(beta) + 11.0 * np.sin(beta)) / (
            5.0 * np.cos(beta) + 7.0
        )
    if scheme is GradientScheme.CD6:
        return (
            1j * np.sin(beta) * (np.cos(beta) + 14.0) / (3.0 * (2.0 * np.cos(beta) + 3.0))
        )
    raise ValueError(f"unknown gradient scheme {scheme}")
