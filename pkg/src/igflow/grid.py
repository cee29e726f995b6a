"""Cartesian grid geometry and ghost-padded field storage.

All fields live on a uniform Cartesian grid as point values at cell
centers.  Arrays carry a fixed leading component axis of length 5
(density, three velocity/momentum components, pressure/total energy)
followed by the three spatial axes.  Inactive spatial axes (n == 1)
carry no ghost layers; active axes are padded with ``ghost`` layers on
each side.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

NCOMP = 5


@dataclass(frozen=True)
class Grid:
    """Uniform Cartesian grid.

    Parameters
    ----------
    n : tuple of int
        Interior cell counts (nx, ny, nz).  An axis with n == 1 is
        inactive: it carries no ghost layers and no derivatives are
        taken along it.
    bounds : tuple of (float, float)
        Physical extent per axis, ((xa, xb), (ya, yb), (za, zb)).
    ghost : int
        Ghost layers per side on active axes.  At least 3 so the
        widest pointwise stencil (five cells plus shift) never reads
        past the pad.
    periodic : tuple of bool
        Periodicity flag per axis.
    """

    n: tuple[int, int, int]
    bounds: tuple[tuple[float, float], tuple[float, float], tuple[float, float]]
    ghost: int = 3
    periodic: tuple[bool, bool, bool] = (False, False, False)

    def __post_init__(self) -> None:
        if len(self.n) != 3 or len(self.bounds) != 3 or len(self.periodic) != 3:
            raise ValueError("grid needs exactly three axes")
        if any(int(ni) < 1 for ni in self.n):
            raise ValueError(f"cell counts must be positive, got {self.n}")
        if self.ghost < 3:
            raise ValueError(f"need at least 3 ghost layers, got {self.ghost}")
        for ax, (a, b) in enumerate(self.bounds):
            if not b > a:
                raise ValueError(f"degenerate bounds {a, b} on axis {ax}")

    # -- geometry -----------------------------------------------------

    @property
    def spacing(self) -> tuple[float, float, float]:
        return tuple(
            (b - a) / ni for (a, b), ni in zip(self.bounds, self.n)
        )  # type: ignore[return-value]

    def active(self, axis: int) -> bool:
        return self.n[axis] > 1

    @property
    def active_axes(self) -> tuple[int, ...]:
        return tuple(ax for ax in range(3) if self.n[ax] > 1)

    @property
    def ndim(self) -> int:
        return len(self.active_axes)

    @property
    def cell_volume(self) -> float:
        """Product of spacings over active axes."""
        vol = 1.0
        for ax in self.active_axes:
            vol *= self.spacing[ax]
        return vol

    def pad(self, axis: int) -> int:
        return self.ghost if self.active(axis) else 0

    @property
    def shape_interior(self) -> tuple[int, int, int]:
        return self.n

    @property
    def shape_padded(self) -> tuple[int, int, int]:
        return tuple(ni + 2 * self.pad(ax) for ax, ni in enumerate(self.n))  # type: ignore[return-value]

    def interior_slices(self) -> tuple[slice, slice, slice]:
        """Slices selecting interior cells out of a padded array."""
        return tuple(
            slice(self.pad(ax), self.pad(ax) + self.n[ax]) for ax in range(3)
        )  # type: ignore[return-value]

    def centers(self, axis: int, include_ghosts: bool = False) -> np.ndarray:
        """Cell-center coordinates along one axis.

        Cell j (0-based, interior) sits at ``a + (j + 1/2) dx``.  With
        ``include_ghosts`` the index range extends past both ends by
        the pad width.
        """
        a, _ = self.bounds[axis]
        dx = self.spacing[axis]
        g = self.pad(axis) if include_ghosts else 0
        j = np.arange(-g, self.n[axis] + g)
        return a + (j + 0.5) * dx

    def centers_mesh(
        self, include_ghosts: bool = False
    ) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Broadcastable (X, Y, Z) coordinate arrays at cell centers."""
        cs = [self.centers(ax, include_ghosts) for ax in range(3)]
        return tuple(np.meshgrid(*cs, indexing="ij", sparse=True))  # type: ignore[return-value]


@dataclass
class Field:
    """A 5-component cell-centered field with ghost padding.

    ``data`` has shape (5, X, Y, Z) where each spatial extent includes
    ghost layers on active axes.  ``kind`` records whether the stored
    components are primitive (rho, u, v, w, p) or conserved
    (rho, mx, my, mz, E).
    """

    data: np.ndarray
    kind: str
    grid: Grid = field(repr=False)

    def __post_init__(self) -> None:
        if self.kind not in ("primitive", "conserved"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        want = (NCOMP,) + self.grid.shape_padded
        if self.data.shape != want:
            raise ValueError(
                f"field shape {self.data.shape} does not match grid {want}"
            )

    @classmethod
    def allocate(cls, grid: Grid, kind: str) -> "Field":
        return cls(np.zeros((NCOMP,) + grid.shape_padded), kind, grid)

    @property
    def interior(self) -> np.ndarray:
        """View of the interior cells, shape (5, nx, ny, nz)."""
        sx, sy, sz = self.grid.interior_slices()
        return self.data[:, sx, sy, sz]

    def copy(self) -> "Field":
        return Field(self.data.copy(), self.kind, self.grid)


def lines_along_axis(data: np.ndarray, grid: Grid, axis: int) -> np.ndarray:
    """Gather a padded field into a batch of 1-D lines along ``axis``.

    Returns a contiguous array of shape (5, B, m) where m is the
    padded extent along ``axis`` and B is the number of interior lines
    (the product of interior extents of the other axes).  Ghost cells
    of the *other* axes are excluded: line solves and face sweeps only
    ever run on interior lines.
    """
    sl = [slice(None)] * 4
    for ax in range(3):
        if ax != axis:
            p = grid.pad(ax)
            sl[1 + ax] = slice(p, p + grid.n[ax])
    sub = data[tuple(sl)]
    moved = np.moveaxis(sub, 1 + axis, 3)
    return np.ascontiguousarray(moved.reshape(data.shape[0], -1, sub.shape[1 + axis]))


def scatter_lines_interior(
    lines: np.ndarray, grid: Grid, axis: int, out: np.ndarray
) -> None:
    """Scatter per-line interior data back into an interior-shaped array.

    ``lines`` has shape (C, B, n_axis) holding interior cells only;
    ``out`` has shape (C, nx, ny, nz) and receives the values in place.
    """
    other = [ax for ax in range(3) if ax != axis]
    shape = (lines.shape[0], grid.n[other[0]], grid.n[other[1]], lines.shape[-1])
    arr = lines.reshape(shape)
    np.copyto(np.moveaxis(out, 1 + axis, 3), arr)


def faces_to_field(lines: np.ndarray, grid: Grid, axis: int) -> np.ndarray:
    """Reshape a face-stack batch (C, B, n+1) into field layout.

    The result has the interior extents of the other axes and n+1
    along ``axis``.
    """
    other = [ax for ax in range(3) if ax != axis]
    shape = (lines.shape[0], grid.n[other[0]], grid.n[other[1]], lines.shape[-1])
    arr = lines.reshape(shape)
    return np.moveaxis(arr, 3, 1 + axis)
