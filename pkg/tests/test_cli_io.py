"""Config parsing, snapshot formats, bundles, and the CLI."""

import json

import numpy as np
import pytest

from igflow.boundary import ConfigError
from igflow.cli import main
from igflow.config import build_setup, parse_config
from igflow.gradients import GradientScheme
from igflow.reconstruction import ReconScheme
from igflow.snapshots import (
    OutputBundle,
    format_diagnostics_csv,
    format_profile_csv,
    format_structured_points,
    read_profile_csv,
    read_structured_points,
    snapshot_fields,
)

from conftest import line_grid, square_grid


# -- config -------------------------------------------------------------


def test_parse_minimal_config():
    cfg = parse_config("case=sod\n")
    assert cfg.case == "sod"
    assert cfg.scheme is ReconScheme.IG6MP
    assert cfg.cfl == 0.2
    assert cfg.preset == "default"
    assert cfg.t_final is None


def test_parse_full_config():
    text = """
    # smooth accuracy study
    case=isentropic_vortex  scheme=ig4mp
    gradient=cd4
    grid=64x32
    cfl=0.45
    t_final=2.5
    diagnostics=mass,ke
    diag_every=5
    snapshot_every=10
    out_dir=run7
    characteristic=yes
    binary=true
    threads=2
    """
    cfg = parse_config(text)
    assert cfg.scheme is ReconScheme.IG4MP
    assert cfg.gradient is GradientScheme.CD4
    assert cfg.grid == (64, 32, 1)
    assert cfg.cfl == 0.45
    assert cfg.t_final == 2.5
    assert cfg.diagnostics == ("mass", "ke")
    assert cfg.diag_every == 5
    assert cfg.snapshot_every == 10
    assert cfg.out_dir == "run7"
    assert cfg.characteristic and cfg.binary
    assert cfg.threads == 2


@pytest.mark.parametrize(
    "text,needle",
    [
        ("scheme=ig6mp\n", "must set 'case'"),
        ("case=sod\nwhat=ever\n", "line 2"),
        ("case=sod\ncase=lax\n", "duplicate"),
        ("case=nope\n", "unknown case"),
        ("case=sod\nscheme=weno\n", "line 2"),
        ("case=sod\ngrid=8xx2\n", "bad grid"),
        ("case=sod\ncfl=-0.1\n", "positive"),
        ("case=sod\ncfl=fast\n", "number"),
        ("case=sod\ndiagnostics=mass,entropy\n", "unknown diagnostic"),
        ("case=sod\ncharacteristic=maybe\n", "boolean"),
        ("case=sod\ndiag_every=0\n", "at least 1"),
        ("case=sod\npreset=huge\n", "preset"),
        ("case=sod badtoken\n", "key=value"),
    ],
)
def test_parse_config_errors(text, needle):
    with pytest.raises(ConfigError, match=needle):
        parse_config(text)


def test_build_setup_defaults_and_overrides():
    spec, grid, setup = build_setup(parse_config("case=sod\n"))
    assert grid.shape_interior == (200, 1, 1)
    assert setup.t_final == 0.2
    _, grid2, setup2 = build_setup(
        parse_config("case=sod\ngrid=50\nt_final=0.05\ncfl=0.3\n")
    )
    assert grid2.shape_interior == (50, 1, 1)
    assert setup2.t_final == 0.05
    assert setup2.scheme.cfl == 0.3


# -- snapshot formats ---------------------------------------------------


def test_profile_csv_roundtrip():
    g = line_grid(7, bounds=(0.0, 1.0))
    w = np.zeros((5,) + g.shape_interior)
    w[0] = np.pi
    w[1] = 1.0 / 3.0
    w[4] = 0.1
    text = format_profile_csv(w, g)
    cols = read_profile_csv(text)
    assert list(cols) == ["x", "rho", "u", "p"]
    assert np.array_equal(cols["x"], g.centers(0))
    assert np.array_equal(cols["rho"], np.full(7, np.pi))
    assert np.array_equal(cols["u"], np.full(7, 1.0 / 3.0))


def test_profile_csv_needs_1d():
    g = square_grid(4)
    with pytest.raises(ValueError, match="1D"):
        format_profile_csv(np.zeros((5,) + g.shape_interior), g)
    with pytest.raises(ValueError):
        read_profile_csv("")


def test_diagnostics_csv():
    rows = [
        {"step": 0, "t": 0.0, "mass": 1.0 / 3.0},
        {"step": 1, "t": 0.25, "mass": 1.0 / 3.0},
    ]
    text = format_diagnostics_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0] == "step,t,mass"
    assert lines[1].startswith("0,0,0.333333")
    assert lines[2].split(",")[0] == "1"
    with pytest.raises(ValueError):
        format_diagnostics_csv([])


@pytest.mark.parametrize("binary", [False, True])
def test_structured_points_roundtrip(rng, binary):
    g = square_grid(5, bounds=((0.0, 1.0), (2.0, 3.0)))
    rho = rng.normal(size=g.shape_interior)
    vel = rng.normal(size=(3,) + g.shape_interior)
    data = format_structured_points(
        {"rho": rho, "velocity": vel}, g, title="check", binary=binary
    )
    meta, fields = read_structured_points(data)
    assert meta["title"] == "check"
    assert meta["dimensions"] == (5, 5, 1)
    assert meta["origin"] == (0.1, 2.1, 0.5)
    assert np.array_equal(fields["rho"], rho)
    assert np.array_equal(fields["velocity"], vel)


def test_structured_points_validation():
    g = square_grid(4)
    with pytest.raises(ValueError, match="velocity"):
        format_structured_points({"velocity": np.zeros((2, 4, 4, 1))}, g)
    with pytest.raises(ValueError, match="shape"):
        format_structured_points({"rho": np.zeros((3, 3, 1))}, g)
    with pytest.raises(ValueError, match="structured-points"):
        read_structured_points(b"plain text\nnot a snapshot\n")


def test_snapshot_field_set():
    g = square_grid(8)
    w = np.ones((5,) + g.shape_interior)
    fields = snapshot_fields(w, g)
    assert set(fields) == {"rho", "p", "velocity"}
    fields = snapshot_fields(w, g, vorticity=True)
    assert "vorticity_magnitude" in fields
    assert fields["vorticity_magnitude"].shape == g.shape_interior


def test_output_bundle_manifest(tmp_path):
    bundle = OutputBundle(tmp_path / "out")
    bundle.meta = {"case": "demo"}
    bundle.add_text("a/profile.csv", "x,rho\n0,1\n")
    bundle.add_bytes("blob.bin", b"\x00\x01")
    path = bundle.write_manifest()
    doc = json.loads(path.read_text())
    assert doc["format_version"] == 1
    assert doc["case"] == "demo"
    assert set(doc["files"]) == {"a/profile.csv", "blob.bin"}
    assert doc["files"]["blob.bin"]["bytes"] == 2
    import hashlib

    assert doc["files"]["blob.bin"]["sha256"] == hashlib.sha256(b"\x00\x01").hexdigest()


# -- CLI ----------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_riemann_star_state(capsys):
    code, out, err = run_cli(
        capsys, "riemann", "--left", "1,0,1", "--right", "0.125,0,0.1"
    )
    assert code == 0 and err == ""
    doc = json.loads(out)
    assert doc["p_star"] == pytest.approx(0.30313017805064682, rel=1e-10)
    assert doc["u_star"] == pytest.approx(0.92745262004894995, rel=1e-10)


def test_cli_riemann_profile(capsys):
    code, out, _ = run_cli(
        capsys,
        "riemann",
        "--left",
        "1,0,1",
        "--right",
        "0.125,0,0.1",
        "--samples",
        "11",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,rho,u,p"
    assert len(lines) == 12


def test_cli_riemann_vacuum_is_solver_failure(capsys):
    # vacuum formation counts as a solver-category failure even though
    # the exception type descends from ValueError
    code, _, err = run_cli(
        capsys, "riemann", "--left", "1,-6,1", "--right", "1,6,1"
    )
    assert code == 3
    doc = json.loads(err)
    assert doc["error"] == "VacuumError"


def test_cli_riemann_bad_state(capsys):
    code, _, err = run_cli(capsys, "riemann", "--left", "1,0", "--right", "1,0,1")
    assert code == 2
    assert json.loads(err)["error"] == "ConfigError"


def test_cli_fourier_table(capsys):
    code, out, _ = run_cli(capsys, "fourier", "--schemes", "EG,IG6", "--n", "16")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "scheme,beta,re,im"
    assert len(lines) == 1 + 2 * 8
    code, _, err = run_cli(capsys, "fourier", "--schemes", "weno")
    assert code == 2
    code, _, err = run_cli(capsys, "fourier", "--schemes", "EG", "--n", "4")
    assert code == 2


def test_cli_unknown_command(capsys):
    code, _, err = run_cli(capsys, "paint")
    assert code == 2
    assert json.loads(err)["error"] == "ConfigError"


def test_cli_run_missing_config(capsys, tmp_path):
    code, _, err = run_cli(capsys, "run", str(tmp_path / "absent.cfg"))
    assert code == 4
    assert json.loads(err)["error"] == "OSError"


def test_cli_run_bad_config(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("case=sod\nscheme=weno\n")
    code, _, err = run_cli(capsys, "run", str(cfg))
    assert code == 2


def test_cli_ooa_single_grid(capsys):
    code, out, _ = run_cli(
        capsys, "ooa", "--case", "linear_ooa", "--grids", "10", "--scheme", "muscl3"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "N,l2,order"
    assert lines[1].startswith("10,")
    assert lines[1].endswith(",")  # no order on the first row


def test_cli_run_bundle_and_determinism(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("case=sod\ngrid=60\nt_final=0.05\ndiagnostics=mass\n")
    code, out, _ = run_cli(capsys, "run", str(cfg), "--out", str(tmp_path / "a"))
    assert code == 0
    assert "steps" in out
    names = {"final.csv", "diagnostics.csv", "config.cfg", "manifest.json"}
    assert {p.name for p in (tmp_path / "a").iterdir()} == names
    doc = json.loads((tmp_path / "a" / "manifest.json").read_text())
    assert doc["case"] == "sod"
    assert doc["t_end"] == 0.05
    cols = read_profile_csv((tmp_path / "a" / "final.csv").read_text())
    assert cols["rho"].shape == (60,)
    assert np.all(cols["rho"] > 0.0)

    code, _, _ = run_cli(capsys, "run", str(cfg), "--out", str(tmp_path / "b"))
    assert code == 0
    for name in ("final.csv", "diagnostics.csv", "manifest.json"):
        assert (tmp_path / "a" / name).read_bytes() == (
            tmp_path / "b" / name
        ).read_bytes()


def test_cli_run_2d_snapshot(capsys, tmp_path):
    cfg = tmp_path / "c3.cfg"
    cfg.write_text("case=riemann_config3\ngrid=12x12\nt_final=0.004\n")
    code, _, _ = run_cli(capsys, "run", str(cfg), "--out", str(tmp_path / "c3"))
    assert code == 0
    meta, fields = read_structured_points(
        (tmp_path / "c3" / "final.vtk").read_bytes()
    )
    assert meta["dimensions"] == (12, 12, 1)
    assert set(fields) == {"rho", "p", "velocity"}
    assert np.all(fields["rho"] > 0.0)
