"""Figure rendering for the supported plot kinds."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .formats import (
    SchemaError,
    read_diagnostics,
    read_operator_table,
    read_profile,
    read_structured_points,
)

KINDS = ("line-overlay", "contour", "operator-curves", "timeseries")

# marker and color per scheme, following the usual figure captions;
# labels not listed here draw from the fallback cycle
SCHEME_STYLE = {
    "ig6mp": ("*", "green"),
    "teno5": ("s", "blue"),
    "ig4mp": ("o", "red"),
    "muscl3": ("^", "darkorange"),
    "mp5": ("v", "purple"),
}

_FALLBACK = (
    ("D", "teal"),
    ("x", "maroon"),
    ("+", "olive"),
    ("1", "navy"),
)

_DPI = 150
_METADATA = {"Software": "igplots"}


@dataclass(frozen=True)
class PlotSpec:
    """One figure: what to read, how to draw it, where to put it."""

    kind: str
    inputs: tuple[Path, ...]
    output: Path
    labels: tuple[str, ...] = ()
    field: str = "rho"
    reference: Optional[Path] = None
    title: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown plot kind {self.kind!r}, expected one of {KINDS}")
        if not self.inputs:
            raise ValueError("plot needs at least one input file")
        if self.labels and len(self.labels) != len(self.inputs):
            raise ValueError(
                f"{len(self.labels)} labels for {len(self.inputs)} inputs"
            )


def _style(label: str, position: int):
    return SCHEME_STYLE.get(label.lower(), _FALLBACK[position % len(_FALLBACK)])


def _labels(spec: PlotSpec) -> tuple[str, ...]:
    if spec.labels:
        return spec.labels
    return tuple(Path(p).stem for p in spec.inputs)


def _finish(fig: Figure, spec: PlotSpec) -> Path:
    if spec.title:
        fig.suptitle(spec.title)
    FigureCanvasAgg(fig)
    fig.savefig(spec.output, dpi=_DPI, metadata=_METADATA)
    return Path(spec.output)


def _plot_overlay(spec: PlotSpec) -> Figure:
    fig = Figure(figsize=(6.0, 4.5))
    ax = fig.add_subplot(1, 1, 1)
    if spec.reference is not None:
        ref = read_profile(spec.reference)
        ax.plot(ref["x"], ref[spec.field], "k--", linewidth=1.0, label="reference")
    for pos, (path, label) in enumerate(zip(spec.inputs, _labels(spec))):
        cols = read_profile(path)
        if spec.field not in cols:
            raise SchemaError(
                f"profile has no column {spec.field!r}, offending header: "
                + ",".join(cols)
            )
        marker, color = _style(label, pos)
        every = max(1, cols["x"].size // 50)
        ax.plot(
            cols["x"],
            cols[spec.field],
            marker=marker,
            color=color,
            markevery=every,
            markerfacecolor="none",
            linewidth=0.8,
            label=label,
        )
    ax.set_xlabel("x")
    ax.set_ylabel(spec.field)
    ax.legend()
    return fig


def _plot_operator_curves(spec: PlotSpec) -> Figure:
    table = read_operator_table(spec.inputs[0])
    fig = Figure(figsize=(9.0, 4.0))
    ax_disp = fig.add_subplot(1, 2, 1)
    ax_diss = fig.add_subplot(1, 2, 2)
    betas = np.linspace(0.0, np.pi, 128)
    ax_disp.plot(betas, -betas, "k--", linewidth=1.0, label="exact")
    ax_diss.axhline(0.0, color="k", linestyle="--", linewidth=1.0)
    for pos, (scheme, cols) in enumerate(table.items()):
        marker, color = _style(scheme, pos)
        for ax, comp in ((ax_disp, "im"), (ax_diss, "re")):
            ax.plot(
                cols["beta"],
                cols[comp],
                marker=marker,
                color=color,
                markerfacecolor="none",
                linewidth=0.8,
                label=scheme,
            )
    ax_disp.set_xlabel("wavenumber")
    ax_disp.set_ylabel("dispersion (imaginary part)")
    ax_disp.legend()
    ax_diss.set_xlabel("wavenumber")
    ax_diss.set_ylabel("dissipation (real part)")
    fig.subplots_adjust(wspace=0.3)
    return fig


def _plot_contour(spec: PlotSpec) -> Figure:
    meta, fields = read_structured_points(spec.inputs[0])
    if spec.field not in fields:
        raise SchemaError(
            f"snapshot has no field {spec.field!r}, offending header: "
            + ",".join(fields)
        )
    arr = fields[spec.field]
    if arr.ndim != 3 or arr.shape[2] != 1:
        raise SchemaError(f"contour needs a 2D snapshot, got dims {meta['dimensions']}")
    nx, ny, _ = meta["dimensions"]
    ox, oy, _ = meta["origin"]
    dx, dy, _ = meta["spacing"]
    fig = Figure(figsize=(5.4, 5.0))
    ax = fig.add_subplot(1, 1, 1)
    x = ox + dx * np.arange(nx)
    y = oy + dy * np.arange(ny)
    cs = ax.contourf(x, y, arr[:, :, 0].T, levels=30)
    fig.colorbar(cs, ax=ax, label=spec.field)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_aspect("equal")
    return fig


def _plot_timeseries(spec: PlotSpec) -> Figure:
    fig = Figure(figsize=(9.0, 4.0))
    ax_ke = fig.add_subplot(1, 2, 1)
    ax_ens = fig.add_subplot(1, 2, 2)
    for pos, (path, label) in enumerate(zip(spec.inputs, _labels(spec))):
        cols = read_diagnostics(path)
        for ax, name in ((ax_ke, "ke"), (ax_ens, "enstrophy")):
            if name not in cols:
                raise SchemaError(
                    f"diagnostics have no column {name!r}, offending header: "
                    + ",".join(cols)
                )
            _, color = _style(label, pos)
            ax.plot(
                cols["t"],
                cols[name] / cols[name][0],
                color=color,
                linewidth=1.2,
                label=label,
            )
    ax_ke.set_xlabel("t")
    ax_ke.set_ylabel("kinetic energy / initial")
    ax_ke.legend()
    ax_ens.set_xlabel("t")
    ax_ens.set_ylabel("enstrophy / initial")
    fig.subplots_adjust(wspace=0.3)
    return fig


_RENDER = {
    "line-overlay": _plot_overlay,
    "operator-curves": _plot_operator_curves,
    "contour": _plot_contour,
    "timeseries": _plot_timeseries,
}


def plot(spec: PlotSpec) -> Path:
    """Render one figure; identical inputs give identical bytes."""
    fig = _RENDER[spec.kind](spec)
    return _finish(fig, spec)
