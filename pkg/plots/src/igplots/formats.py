"""Readers for the solver's documented output files.

These parse the text interfaces from scratch on purpose: the plotting
side consumes files, never solver internals, so any drift between the
two packages shows up here as a schema error instead of a silently
shared assumption. All floats are parsed and re-emitted with 17
significant digits, which makes read/emit a lossless roundtrip.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

_FMT = "%.17g"

PROFILE_HEADER = "x,rho,u,p"
OPERATOR_HEADER = "scheme,beta,re,im"


class SchemaError(ValueError):
    """An input file does not carry the documented layout."""


def _text(source) -> str:
    if isinstance(source, (str, Path)) and "\n" not in str(source):
        return Path(source).read_text()
    return str(source)


def read_profile(source) -> dict[str, np.ndarray]:
    """Parse a 1D profile CSV into column arrays."""
    lines = _text(source).strip().split("\n")
    if not lines or lines[0] != PROFILE_HEADER:
        got = lines[0] if lines else ""
        raise SchemaError(f"profile header mismatch: got {got!r}")
    rows = [line.split(",") for line in lines[1:]]
    if not rows or any(len(r) != 4 for r in rows):
        raise SchemaError("profile rows must have 4 columns")
    data = np.array([[float(v) for v in r] for r in rows])
    return {name: data[:, k] for k, name in enumerate(PROFILE_HEADER.split(","))}


def emit_profile(cols: dict[str, np.ndarray]) -> str:
    """Inverse of read_profile, byte-identical for solver output."""
    names = PROFILE_HEADER.split(",")
    if list(cols) != names:
        raise SchemaError(f"profile columns mismatch: got {list(cols)}")
    n = len(cols["x"])
    lines = [PROFILE_HEADER]
    for k in range(n):
        lines.append(",".join(_FMT % cols[name][k] for name in names))
    return "\n".join(lines) + "\n"


def read_diagnostics(source) -> dict[str, np.ndarray]:
    """Parse a diagnostics CSV; first two columns must be step and t."""
    lines = _text(source).strip().split("\n")
    names = lines[0].split(",") if lines else []
    if names[:2] != ["step", "t"]:
        raise SchemaError(f"diagnostics header mismatch: got {lines[0]!r}")
    data = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    if data.ndim != 2 or data.shape[1] != len(names):
        raise SchemaError("diagnostics rows do not match the header")
    return {name: data[:, k] for k, name in enumerate(names)}


def read_operator_table(source) -> dict[str, dict[str, np.ndarray]]:
    """Parse an operator response table, grouped by scheme name."""
    lines = _text(source).strip().split("\n")
    if not lines or lines[0] != OPERATOR_HEADER:
        got = lines[0] if lines else ""
        raise SchemaError(f"operator header mismatch: got {got!r}")
    groups: dict[str, list[list[float]]] = {}
    for line in lines[1:]:
        parts = line.split(",")
        if len(parts) != 4:
            raise SchemaError(f"operator row {line!r} must have 4 columns")
        groups.setdefault(parts[0], []).append([float(v) for v in parts[1:]])
    out = {}
    for scheme, rows in groups.items():
        arr = np.array(rows)
        out[scheme] = {"beta": arr[:, 0], "re": arr[:, 1], "im": arr[:, 2]}
    return out


# -- structured points --------------------------------------------------


def _header_floats(line: str, key: str) -> tuple[float, float, float]:
    parts = line.split()
    if parts[0] != key or len(parts) != 4:
        raise SchemaError(f"snapshot header mismatch: got {line!r}")
    return tuple(float(v) for v in parts[1:])


def read_structured_points(source) -> tuple[dict, dict[str, np.ndarray]]:
    """Decode a structured-points snapshot (text or binary payload).

    Returns (meta, fields). Scalars come back shaped (nx, ny, nz), the
    velocity vector (3, nx, ny, nz); meta carries title, dimensions,
    origin, and spacing.
    """
    if isinstance(source, (str, Path)):
        data = Path(source).read_bytes()
    else:
        data = bytes(source)
    head, _, rest = data.partition(b"\n")
    if not head.startswith(b"# vtk DataFile"):
        raise SchemaError(f"not a structured-points file: got {head[:40]!r}")
    lines = []
    for _ in range(7):
        line, _, rest = rest.partition(b"\n")
        lines.append(line.decode())
    title, mode, dataset = lines[0], lines[1], lines[2]
    if mode not in ("ASCII", "BINARY"):
        raise SchemaError(f"snapshot header mismatch: got {mode!r}")
    if dataset != "DATASET STRUCTURED_POINTS":
        raise SchemaError(f"snapshot header mismatch: got {dataset!r}")
    dims = lines[3].split()
    if dims[0] != "DIMENSIONS" or len(dims) != 4:
        raise SchemaError(f"snapshot header mismatch: got {lines[3]!r}")
    nx, ny, nz = (int(v) for v in dims[1:])
    meta = {
        "title": title,
        "dimensions": (nx, ny, nz),
        "origin": _header_floats(lines[4], "ORIGIN"),
        "spacing": _header_floats(lines[5], "SPACING"),
    }
    npoints = nx * ny * nz
    if lines[6] != f"POINT_DATA {npoints}":
        raise SchemaError(f"snapshot header mismatch: got {lines[6]!r}")

    binary = mode == "BINARY"

    def take_values(count: int) -> np.ndarray:
        nonlocal rest
        if binary:
            nbytes = 8 * count
            if len(rest) < nbytes:
                raise SchemaError("snapshot payload truncated")
            values = np.frombuffer(rest[:nbytes], dtype=">f8").astype(float)
            rest = rest[nbytes:]
            if rest[:1] == b"\n":
                rest = rest[1:]
            return values
        values = np.empty(count)
        for k in range(count):
            line, _, rest = rest.partition(b"\n")
            try:
                values[k] = float(line)
            except ValueError:
                raise SchemaError(f"snapshot payload mismatch: got {line!r}") from None
        return values

    fields: dict[str, np.ndarray] = {}
    while rest.strip():
        line, _, rest = rest.partition(b"\n")
        parts = line.decode().split()
        if parts[:1] == ["SCALARS"]:
            if len(parts) != 3:
                raise SchemaError(f"snapshot attribute mismatch: got {line!r}")
            lut, _, rest = rest.partition(b"\n")
            if lut != b"LOOKUP_TABLE default":
                raise SchemaError(f"snapshot attribute mismatch: got {lut!r}")
            fields[parts[1]] = take_values(npoints).reshape((nx, ny, nz), order="F")
        elif parts[:1] == ["VECTORS"]:
            if len(parts) != 3:
                raise SchemaError(f"snapshot attribute mismatch: got {line!r}")
            flat = take_values(3 * npoints).reshape(npoints, 3)
            fields[parts[1]] = np.stack(
                [flat[:, k].reshape((nx, ny, nz), order="F") for k in range(3)]
            )
        else:
            raise SchemaError(f"snapshot attribute mismatch: got {line!r}")
    return meta, fields


def emit_snapshot_table(meta: dict, fields: dict[str, np.ndarray]) -> str:
    """Flatten snapshot data to CSV at full text precision.

    One row per grid point in x-fastest order, vector fields expanded
    to one column per component. Feeding read_structured_points output
    through this reproduces every stored value exactly.
    """
    nx, ny, nz = meta["dimensions"]
    columns: list[tuple[str, np.ndarray]] = []
    for name, arr in fields.items():
        if arr.ndim == 4:
            for k, suffix in enumerate(("x", "y", "z")):
                columns.append((f"{name}_{suffix}", arr[k].ravel(order="F")))
        else:
            columns.append((name, arr.ravel(order="F")))
    lines = ["i,j,k," + ",".join(name for name, _ in columns)]
    idx = 0
    for k in range(nz):
        for j in range(ny):
            for i in range(nx):
                values = ",".join(_FMT % col[idx] for _, col in columns)
                lines.append(f"{i},{j},{k},{values}")
                idx += 1
    return "\n".join(lines) + "\n"
