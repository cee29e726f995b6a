"""Command-line entry points.

Subcommands: ``run`` (drive a configured case to its final time and
write an output bundle), ``ooa`` (grid-refinement error table),
``fourier`` (measured operator table for the gradient schemes), and
``riemann`` (exact shock-tube query).  Failures exit with a stable
code per category and a one-line JSON error on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .analysis import VacuumError, exact_riemann, operator_table
from .boundary import ConfigError
from .cases import accuracy_study, make_case
from .config import build_setup, parse_config
from .reconstruction import PositivityError, parse_scheme
from .riemann import FluxError
from .snapshots import (
    OutputBundle,
    format_diagnostics_csv,
    format_profile_csv,
    format_structured_points,
    snapshot_fields,
)
from .solver import SchemeConfig, SolverError, run_case

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_IO = 4

_OPERATOR_NAMES = ("EG", "IG4", "IG6", "MUSCL3", "FIRST_ORDER")
_SMOOTH_CASES = ("linear_ooa", "isentropic_vortex")


class _Parser(argparse.ArgumentParser):
    """Argument parser that reports usage problems as config errors."""

    def error(self, message: str):  # noqa: A003 - argparse API
        raise ConfigError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="igflow", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="advance a configured case")
    p_run.add_argument("config", help="path to a key=value config file")
    p_run.add_argument("--out", help="override the configured output directory")

    p_ooa = sub.add_parser("ooa", help="grid-refinement error table")
    p_ooa.add_argument("--case", required=True, choices=_SMOOTH_CASES)
    p_ooa.add_argument(
        "--grids", required=True, help="comma-separated per-axis cell counts"
    )
    p_ooa.add_argument("--scheme", default="IG6MP")

    p_fou = sub.add_parser("fourier", help="measured operator table")
    p_fou.add_argument(
        "--schemes", required=True, help="comma-separated scheme names"
    )
    p_fou.add_argument("--n", type=int, default=64, help="cells per period")

    p_rie = sub.add_parser("riemann", help="exact shock-tube query")
    p_rie.add_argument("--left", required=True, help="rho,u,p left of the jump")
    p_rie.add_argument("--right", required=True, help="rho,u,p right of the jump")
    p_rie.add_argument("--gamma", type=float, default=1.4)
    p_rie.add_argument(
        "--samples",
        type=int,
        default=0,
        help="emit a sampled profile with this many points (0: star state only)",
    )
    p_rie.add_argument("--time", type=float, default=0.2)
    p_rie.add_argument("--x0", type=float, default=0.5)
    p_rie.add_argument("--xmin", type=float, default=0.0)
    p_rie.add_argument("--xmax", type=float, default=1.0)
    return parser


def _cmd_run(args) -> int:
    try:
        text = Path(args.config).read_text()
    except OSError as exc:
        raise OSError(f"cannot read config {args.config}: {exc}") from None
    cfg = parse_config(text)
    if args.out:
        cfg.out_dir = args.out
    spec, grid, setup = build_setup(cfg)
    bundle = OutputBundle(Path(cfg.out_dir))
    bundle.meta = {
        "case": cfg.case,
        "scheme": cfg.scheme.value,
        "grid": list(grid.n),
        "cfl": cfg.cfl,
        "t_final": setup.t_final,
        "threads": cfg.threads,
    }
    with_vorticity = spec.gas.viscous or "enstrophy" in setup.diagnostics

    def write_snapshot(stem: str, w: np.ndarray, t: float) -> None:
        if grid.ndim == 1:
            bundle.add_text(stem + ".csv", format_profile_csv(w, grid))
        else:
            data = format_structured_points(
                snapshot_fields(w, grid, with_vorticity),
                grid,
                title=f"{cfg.case} t={t:.17g}",
                binary=cfg.binary,
            )
            bundle.add_bytes(stem + ".vtk", data)

    on_step = None
    if cfg.snapshot_every > 0:

        def on_step(step: int, t: float, w: np.ndarray) -> None:
            if step % cfg.snapshot_every == 0:
                write_snapshot(f"snapshot_{step:06d}", w, t)

    result = run_case(setup, on_step)
    write_snapshot("final", result.w, result.t)
    bundle.add_text("diagnostics.csv", format_diagnostics_csv(result.diag))
    bundle.add_text("config.cfg", text)
    bundle.meta["steps"] = result.steps
    bundle.meta["t_end"] = result.t
    bundle.write_manifest()
    print(
        f"{cfg.case}: {result.steps} steps to t={result.t:.17g}, "
        f"bundle at {bundle.root}"
    )
    return EXIT_OK


def _cmd_ooa(args) -> int:
    spec = make_case(args.case)
    try:
        counts = [int(v) for v in args.grids.split(",") if v]
    except ValueError:
        raise ConfigError(f"bad grid list {args.grids!r}") from None
    if not counts:
        raise ConfigError("empty grid list")
    scheme_cfg = SchemeConfig(scheme=parse_scheme(args.scheme))
    rows = accuracy_study(spec, counts, scheme_cfg)
    print("N,l2,order")
    for row in rows:
        order = "" if row["order"] is None else f"{row['order']:.17g}"
        print(f"{row['n']},{row['l2']:.17g},{order}")
    return EXIT_OK


def _cmd_fourier(args) -> int:
    schemes = [s.strip() for s in args.schemes.split(",") if s.strip()]
    if not schemes:
        raise ConfigError("no schemes given")
    for s in schemes:
        if s.upper() not in _OPERATOR_NAMES:
            raise ConfigError(
                f"unknown operator scheme {s!r}; choices: "
                + ", ".join(_OPERATOR_NAMES)
            )
    if args.n < 8:
        raise ConfigError(f"need at least 8 cells per period, got {args.n}")
    ks = np.arange(1, args.n // 2 + 1)
    betas = 2.0 * np.pi * ks / args.n
    print("scheme,beta,re,im")
    for name, beta, re, im in operator_table(schemes, betas, n=args.n):
        print(f"{name},{beta:.17g},{re:.17g},{im:.17g}")
    return EXIT_OK


def _parse_state(text: str, label: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ConfigError(f"{label} state needs rho,u,p, got {text!r}")
    try:
        rho, u, p = (float(v) for v in parts)
    except ValueError:
        raise ConfigError(f"{label} state needs numbers, got {text!r}") from None
    return rho, u, p


def _cmd_riemann(args) -> int:
    left = _parse_state(args.left, "left")
    right = _parse_state(args.right, "right")
    solution = exact_riemann(left, right, args.gamma)
    if args.samples <= 0:
        print(
            json.dumps(
                {"p_star": solution.p_star, "u_star": solution.u_star},
                sort_keys=True,
            )
        )
        return EXIT_OK
    if args.time <= 0.0:
        raise ConfigError("sampled profile needs a positive --time")
    if not args.xmax > args.xmin:
        raise ConfigError("--xmax must exceed --xmin")
    x = np.linspace(args.xmin, args.xmax, args.samples)
    rho, u, p = solution.sample((x - args.x0) / args.time)
    print("x,rho,u,p")
    for k in range(x.size):
        print(f"{x[k]:.17g},{rho[k]:.17g},{u[k]:.17g},{p[k]:.17g}")
    return EXIT_OK


_COMMANDS = {
    "run": _cmd_run,
    "ooa": _cmd_ooa,
    "fourier": _cmd_fourier,
    "riemann": _cmd_riemann,
}


def _emit_error(exc: BaseException) -> None:
    doc = {"error": type(exc).__name__, "message": str(exc)}
    print(json.dumps(doc, sort_keys=True), file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (SolverError, PositivityError, FluxError, VacuumError) as exc:
        _emit_error(exc)
        return EXIT_SOLVER
    except (ConfigError, ValueError) as exc:
        _emit_error(exc)
        return EXIT_CONFIG
    except OSError as exc:
        _emit_error(exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
