"""Batch figure tools for solver output files.

The package reads the solver's documented text interfaces (profile and
diagnostics CSV, operator tables, structured-points snapshots) and
renders the standard figure types from them. It deliberately has no
dependency on the solver itself; everything arrives through files.
"""

from .figures import PlotSpec, SCHEME_STYLE, plot
from .formats import (
    SchemaError,
    emit_profile,
    emit_snapshot_table,
    read_diagnostics,
    read_operator_table,
    read_profile,
    read_structured_points,
)

__all__ = [
    "PlotSpec",
    "SCHEME_STYLE",
    "SchemaError",
    "emit_profile",
    "emit_snapshot_table",
    "plot",
    "read_diagnostics",
    "read_operator_table",
    "read_profile",
    "read_structured_points",
]
