"""Tridiagonal and cyclic-tridiagonal line solves.

All compact-gradient systems in the package share one matrix across a
large batch of right-hand sides, so the public solver factors once and
sweeps the batch.  Cyclic systems (periodic lines) reduce to a plain
tridiagonal solve plus a rank-one correction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._kernels import tri_factor, tri_solve_batch


class ZeroPivotError(ValueError):
    pass


@dataclass
class LineSystem:
    """One tridiagonal system with shared coefficients and batched rhs.

    ``sub[i]`` multiplies x[i-1] in row i and ``sup[i]`` multiplies
    x[i+1].  With ``cyclic`` set, ``sub[0]`` wraps to column n-1 and
    ``sup[n-1]`` wraps to column 0.  ``rhs`` may be a single line (n,)
    or a batch (m, n).
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray
    cyclic: bool = False

    def __post_init__(self) -> None:
        n = self.diag.shape[0]
        if n < 3:
            raise ValueError(f"line length must be at least 3, got {n}")
        for name in ("sub", "sup"):
            if getattr(self, name).shape != (n,):
                raise ValueError(f"{name} must have shape ({n},)")
        if self.rhs.shape[-1] != n:
            raise ValueError(
                f"rhs trailing extent {self.rhs.shape[-1]} does not match n={n}"
            )


@dataclass
class TridiagonalOperator:
    """Factored solver for one matrix, reusable across many rhs batches."""

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    cyclic: bool = False
    _invpiv: np.ndarray = field(init=False, repr=False)
    _cprime: np.ndarray = field(init=False, repr=False)
    _z: np.ndarray | None = field(init=False, repr=False, default=None)
    _vcoef: float = field(init=False, repr=False, default=0.0)

    def __post_init__(self) -> None:
        n = self.diag.shape[0]
        sub = np.ascontiguousarray(self.sub, dtype=float)
        diag = np.ascontiguousarray(self.diag, dtype=float).copy()
        sup = np.ascontiguousarray(self.sup, dtype=float)
        if self.cyclic:
            alpha = sub[0]  # entry (0, n-1)
            beta = sup[n - 1]  # entry (n-1, 0)
            gamma = -diag[0]
            if gamma == 0.0:
                raise ZeroPivotError("zero pivot at index 0")
            diag[0] -= gamma
            diag[n - 1] -= alpha * beta / gamma
            self._vcoef = alpha / gamma
            u = np.zeros((1, n))
            u[0, 0] = gamma
            u[0, n - 1] = beta
        self.sub = sub
        self.diag = diag
        self.sup = sup
        self._invpiv = np.empty(n)
        self._cprime = np.zeros(n)
        bad = tri_factor(sub, diag, sup, self._invpiv, self._cprime)
        if bad >= 0:
            raise ZeroPivotError(f"zero pivot at index {bad}")
        if self.cyclic:
            z = np.empty_like(u)
            tri_solve_batch(sub, self._invpiv, self._cprime, u, z)
            self._z = z[0]

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """Solve for a batch of right-hand sides, shape (..., n)."""
        rhs = np.ascontiguousarray(rhs, dtype=float)
        flat = rhs.reshape(-1, rhs.shape[-1])
        out = np.empty_like(flat)
        tri_solve_batch(self.sub, self._invpiv, self._cprime, flat, out)
        if self.cyclic:
            z = self._z
            n = rhs.shape[-1]
            num = out[:, 0] + self._vcoef * out[:, n - 1]
            den = 1.0 + z[0] + self._vcoef * z[n - 1]
            out -= np.outer(num / den, z)
        return out.reshape(rhs.shape)


def solve_tridiagonal(system: LineSystem) -> np.ndarray:
    """Solve a ``LineSystem``; zero pivots raise with the row index."""
    op = TridiagonalOperator(
        system.sub.astype(float),
        system.diag.astype(float),
        system.sup.astype(float),
        system.cyclic,
    )
    return op.solve(system.rhs)
