"""On-disk snapshot formats and the output bundle.

One-dimensional runs emit plain CSV profiles; higher-dimensional runs
emit a text structured-points format that legacy VTK readers accept
(binary payload available behind a flag for the big viscous fields).
All floats are printed with 17 significant digits so a reader
recovers the in-memory values exactly.  A bundle collects the files
of one run and finishes with a manifest listing every file and its
checksum; nothing in the output depends on wall-clock time, so
identical runs produce identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .grid import Grid

_FMT = "%.17g"


def _fmt(x: float) -> str:
    return _FMT % x


# -- 1D profiles --------------------------------------------------------


def format_profile_csv(w: np.ndarray, grid: Grid) -> str:
    """CSV text of a one-dimensional primitive field: x,rho,u,p."""
    if grid.ndim != 1:
        raise ValueError(f"profile CSV needs a 1D grid, got {grid.ndim}D")
    axis = grid.active_axes[0]
    x = grid.centers(axis)
    flat = w.reshape(5, -1)
    lines = ["x,rho,u,p"]
    for j in range(x.size):
        lines.append(
            ",".join(
                (_fmt(x[j]), _fmt(flat[0, j]), _fmt(flat[1 + axis, j]), _fmt(flat[4, j]))
            )
        )
    return "\n".join(lines) + "\n"


def read_profile_csv(text: str) -> dict[str, np.ndarray]:
    """Columns of a profile CSV keyed by header name."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty profile CSV")
    names = lines[0].split(",")
    rows = [[float(v) for v in ln.split(",")] for ln in lines[1:]]
    data = np.asarray(rows, dtype=float)
    if data.ndim != 2 or data.shape[1] != len(names):
        raise ValueError("ragged profile CSV")
    return {name: data[:, k] for k, name in enumerate(names)}


# -- diagnostics time series --------------------------------------------


def format_diagnostics_csv(rows: list[dict]) -> str:
    """CSV text of per-step diagnostic rows (columns from row keys)."""
    if not rows:
        raise ValueError("no diagnostic rows")
    names = list(rows[0].keys())
    out = [",".join(names)]
    for row in rows:
        cells = []
        for name in names:
            v = row[name]
            cells.append(str(v) if isinstance(v, int) else _fmt(v))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"


# -- structured points --------------------------------------------------


def format_structured_points(
    fields: dict[str, np.ndarray],
    grid: Grid,
    title: str = "igflow snapshot",
    binary: bool = False,
) -> bytes:
    """Legacy-VTK structured-points encoding of cell-centered fields.

    ``fields`` maps names to scalar arrays shaped like the interior,
    except a ``velocity`` entry which is (3, ...) and becomes the
    vector attribute.  Values are laid out x-fastest as the format
    requires.  Text payload by default; ``binary`` switches the data
    sections to big-endian float64.
    """
    nx, ny, nz = grid.shape_interior
    origin = [grid.bounds[ax][0] + 0.5 * grid.spacing[ax] for ax in range(3)]
    npoints = nx * ny * nz
    head = [
        "# vtk DataFile Version 3.0",
        title,
        "BINARY" if binary else "ASCII",
        "DATASET STRUCTURED_POINTS",
        f"DIMENSIONS {nx} {ny} {nz}",
        "ORIGIN " + " ".join(_fmt(o) for o in origin),
        "SPACING " + " ".join(_fmt(s) for s in grid.spacing),
        f"POINT_DATA {npoints}",
    ]
    chunks: list[bytes] = [("\n".join(head) + "\n").encode()]

    def payload(arr: np.ndarray) -> bytes:
        flat = np.ascontiguousarray(arr, dtype=float)
        if binary:
            return flat.astype(">f8").tobytes() + b"\n"
        return ("\n".join(_fmt(v) for v in flat.ravel()) + "\n").encode()

    for name, arr in fields.items():
        arr = np.asarray(arr, dtype=float)
        if name == "velocity":
            if arr.shape != (3, nx, ny, nz):
                raise ValueError(f"velocity shape {arr.shape} does not match grid")
            chunks.append(f"VECTORS {name} double\n".encode())
            vecs = np.stack(
                [arr[k].reshape(nx, ny, nz).ravel(order="F") for k in range(3)],
                axis=-1,
            )
            chunks.append(payload(vecs))
        else:
            if arr.shape != (nx, ny, nz):
                raise ValueError(f"field {name!r} shape {arr.shape} does not match grid")
            chunks.append(
                f"SCALARS {name} double\nLOOKUP_TABLE default\n".encode()
            )
            chunks.append(payload(arr.ravel(order="F")))
    return b"".join(chunks)


def read_structured_points(data: bytes) -> tuple[dict, dict[str, np.ndarray]]:
    """Decode a structured-points file back to metadata and fields.

    Returns (meta, fields) with meta holding dimensions, origin, and
    spacing; scalar fields come back shaped (nx, ny, nz) and the
    velocity vector (3, nx, ny, nz).
    """
    pos = 0

    def next_line() -> str:
        nonlocal pos
        end = data.index(b"\n", pos)
        line = data[pos:end].decode()
        pos = end + 1
        return line

    if not next_line().startswith("# vtk DataFile"):
        raise ValueError("not a structured-points file")
    meta = {"title": next_line()}
    mode = next_line()
    if mode not in ("ASCII", "BINARY"):
        raise ValueError(f"unknown data mode {mode!r}")
    binary = mode == "BINARY"
    if next_line() != "DATASET STRUCTURED_POINTS":
        raise ValueError("not a structured-points dataset")
    dims = orig = spac = None
    npoints = 0
    for _ in range(4):
        parts = next_line().split()
        if parts[0] == "DIMENSIONS":
            dims = tuple(int(v) for v in parts[1:4])
        elif parts[0] == "ORIGIN":
            orig = tuple(float(v) for v in parts[1:4])
        elif parts[0] == "SPACING":
            spac = tuple(float(v) for v in parts[1:4])
        elif parts[0] == "POINT_DATA":
            npoints = int(parts[1])
    if dims is None or orig is None or spac is None or npoints == 0:
        raise ValueError("incomplete structured-points header")
    meta.update({"dimensions": dims, "origin": orig, "spacing": spac})
    nx, ny, nz = dims

    def read_values(count: int) -> np.ndarray:
        nonlocal pos
        if binary:
            raw = data[pos : pos + 8 * count]
            pos += 8 * count + 1
            return np.frombuffer(raw, dtype=">f8").astype(float)
        vals = []
        while len(vals) < count:
            vals.extend(float(v) for v in next_line().split())
        return np.asarray(vals, dtype=float)

    fields: dict[str, np.ndarray] = {}
    while pos < len(data):
        line = next_line().strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "SCALARS":
            next_line()  # LOOKUP_TABLE
            vals = read_values(npoints)
            fields[parts[1]] = vals.reshape((nx, ny, nz), order="F")
        elif parts[0] == "VECTORS":
            vals = read_values(3 * npoints).reshape(-1, 3)
            fields[parts[1]] = np.stack(
                [vals[:, k].reshape((nx, ny, nz), order="F") for k in range(3)]
            )
        else:
            raise ValueError(f"unexpected attribute line {line!r}")
    return meta, fields


def snapshot_fields(
    w: np.ndarray, grid: Grid, vorticity: bool = False
) -> dict[str, np.ndarray]:
    """Standard structured-points field set for a primitive snapshot."""
    fields: dict[str, np.ndarray] = {
        "rho": w[0],
        "p": w[4],
        "velocity": w[1:4],
    }
    if vorticity:
        from .analysis import velocity_gradient

        gv = velocity_gradient(w, grid)
        wx = gv[2, 1] - gv[1, 2]
        wy = gv[0, 2] - gv[2, 0]
        wz = gv[1, 0] - gv[0, 1]
        fields["vorticity_magnitude"] = np.sqrt(wx**2 + wy**2 + wz**2)
    return fields


# -- output bundle ------------------------------------------------------


@dataclass
class OutputBundle:
    """Accumulates one run's files and writes the closing manifest."""

    root: Path
    meta: dict = field(default_factory=dict)
    files: dict[str, dict] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.root = Path(self.root)
        self.root.mkdir(parents=True, exist_ok=True)

    def add_bytes(self, relpath: str, data: bytes) -> Path:
        target = self.root / relpath
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(data)
        self.files[relpath] = {
            "sha256": hashlib.sha256(data).hexdigest(),
            "bytes": len(data),
        }
        return target

    def add_text(self, relpath: str, text: str) -> Path:
        return self.add_bytes(relpath, text.encode())

    def write_manifest(self) -> Path:
        doc = {
            "format_version": 1,
            "package_version": __version__,
            **self.meta,
            "files": self.files,
        }
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
        target = self.root / "manifest.json"
        target.write_text(text)
        return target
