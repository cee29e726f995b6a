"""Run configuration: flat key=value text to validated run setups.

The format is deliberately small: one or more ``key=value`` tokens per
line, ``#`` starts a comment, no sections.  Every key is checked
against the known set and against the case registry before any
allocation happens, so a bad config fails with a line number instead
of a stack trace mid-run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .boundary import ConfigError
from .cases import CaseSpec, list_cases, make_case
from .gradients import GradientScheme
from .grid import Grid
from .reconstruction import ReconScheme, parse_scheme
from .solver import RunSetup, SchemeConfig

_DIAG_CHOICES = ("mass", "ke", "enstrophy")
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


@dataclass
class RunConfig:
    """Validated knobs for one solver run."""

    case: str
    scheme: ReconScheme = ReconScheme.IG6MP
    gradient: Optional[GradientScheme] = None
    characteristic: bool = False
    grid: Optional[tuple[int, int, int]] = None
    preset: str = "default"
    cfl: float = 0.2
    t_final: Optional[float] = None
    out_dir: str = "out"
    snapshot_every: int = 0
    diagnostics: tuple[str, ...] = ()
    diag_every: int = 1
    threads: int = 1
    binary: bool = False


def _parse_bool(val: str, ln: int, key: str) -> bool:
    low = val.lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise ConfigError(f"line {ln}: {key} expects a boolean, got {val!r}")


def _parse_grid(val: str, ln: int) -> tuple[int, int, int]:
    parts = val.lower().split("x")
    try:
        dims = [int(p) for p in parts]
    except ValueError:
        raise ConfigError(f"line {ln}: bad grid spec {val!r}") from None
    if not 1 <= len(dims) <= 3 or any(d < 1 for d in dims):
        raise ConfigError(f"line {ln}: bad grid spec {val!r}")
    while len(dims) < 3:
        dims.append(1)
    return tuple(dims)  # type: ignore[return-value]


def _parse_positive_float(val: str, ln: int, key: str) -> float:
    try:
        x = float(val)
    except ValueError:
        raise ConfigError(f"line {ln}: {key} expects a number, got {val!r}") from None
    if not x > 0.0:
        raise ConfigError(f"line {ln}: {key} must be positive, got {val}")
    return x


def _parse_count(val: str, ln: int, key: str, minimum: int = 0) -> int:
    try:
        k = int(val)
    except ValueError:
        raise ConfigError(f"line {ln}: {key} expects an integer, got {val!r}") from None
    if k < minimum:
        raise ConfigError(f"line {ln}: {key} must be at least {minimum}, got {k}")
    return k


_GRADIENTS = {g.name.lower(): g for g in GradientScheme}


def parse_config(text: str) -> RunConfig:
    """Parse and validate flat key=value configuration text."""
    seen: dict[str, tuple[int, str]] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split():
            key, eq, val = token.partition("=")
            if not eq or not key or not val:
                raise ConfigError(
                    f"line {ln}: expected key=value, got {token!r}"
                )
            if key in seen:
                raise ConfigError(f"line {ln}: duplicate key {key!r}")
            seen[key] = (ln, val)

    if "case" not in seen:
        raise ConfigError("config must set 'case'")

    cfg = RunConfig(case="")
    for key, (ln, val) in seen.items():
        if key == "case":
            if val not in list_cases():
                raise ConfigError(
                    f"line {ln}: unknown case {val!r}; known cases: "
                    + ", ".join(list_cases())
                )
            cfg.case = val
        elif key == "scheme":
            try:
                cfg.scheme = parse_scheme(val)
            except ValueError as exc:
                raise ConfigError(f"line {ln}: {exc}") from None
        elif key == "gradient":
            if val.lower() not in _GRADIENTS:
                raise ConfigError(
                    f"line {ln}: unknown gradient scheme {val!r}"
                )
            cfg.gradient = _GRADIENTS[val.lower()]
        elif key == "characteristic":
            cfg.characteristic = _parse_bool(val, ln, key)
        elif key == "grid":
            cfg.grid = _parse_grid(val, ln)
        elif key == "preset":
            cfg.preset = val
        elif key == "cfl":
            cfg.cfl = _parse_positive_float(val, ln, key)
        elif key == "t_final":
            cfg.t_final = _parse_positive_float(val, ln, key)
        elif key == "out_dir":
            cfg.out_dir = val
        elif key == "snapshot_every":
            cfg.snapshot_every = _parse_count(val, ln, key)
        elif key == "diagnostics":
            names = tuple(v for v in val.split(",") if v)
            for name in names:
                if name not in _DIAG_CHOICES:
                    raise ConfigError(
                        f"line {ln}: unknown diagnostic {name!r}; "
                        f"choices: {', '.join(_DIAG_CHOICES)}"
                    )
            cfg.diagnostics = names
        elif key == "diag_every":
            cfg.diag_every = _parse_count(val, ln, key, minimum=1)
        elif key == "threads":
            cfg.threads = _parse_count(val, ln, key, minimum=1)
        elif key == "binary":
            cfg.binary = _parse_bool(val, ln, key)
        else:
            raise ConfigError(f"line {ln}: unknown key {key!r}")

    spec = make_case(cfg.case)
    if cfg.grid is None and cfg.preset not in spec.presets:
        ln = seen["preset"][0] if "preset" in seen else seen["case"][0]
        raise ConfigError(
            f"line {ln}: case {cfg.case!r} has no preset {cfg.preset!r}"
        )
    return cfg


def build_setup(cfg: RunConfig) -> tuple[CaseSpec, Grid, RunSetup]:
    """Materialize a parsed config into a case, grid, and run setup."""
    spec = make_case(cfg.case)
    grid = spec.grid(n=cfg.grid, preset=cfg.preset)
    scheme_cfg = SchemeConfig(
        scheme=cfg.scheme,
        gradient=cfg.gradient,
        characteristic=cfg.characteristic,
        cfl=cfg.cfl,
    )
    diagnostics = tuple(dict.fromkeys(spec.diagnostics + cfg.diagnostics))
    setup = RunSetup(
        grid=grid,
        gas=spec.gas,
        scheme=scheme_cfg,
        bcs=spec.bcs,
        q0=spec.initial_conserved(grid),
        t_final=cfg.t_final if cfg.t_final is not None else spec.t_final,
        dt_policy=spec.dt_policy,
        source=spec.source,
        diagnostics=diagnostics,
        diag_every=cfg.diag_every,
    )
    return spec, grid, setup
