"""Benchmark registry: initializers, grids, references."""

import numpy as np
import pytest

from igflow.analysis import kinetic_energy
from igflow.cases import (
    accuracy_study,
    advected_exact,
    dmr_shock_position,
    list_cases,
    make_case,
    reference_solution,
)
from igflow.solver import SchemeConfig
from igflow.state import is_physical

ALL_CASES = (
    "linear_ooa",
    "isentropic_vortex",
    "sod",
    "lax",
    "shu_osher",
    "titarev_toro",
    "shock_entropy_2d",
    "riemann_config3",
    "rayleigh_taylor",
    "dmr",
    "tgv_inviscid",
    "viscous_shock_tube",
    "uniform",
)


def smallest_grid(spec):
    name = min(spec.presets, key=lambda k: np.prod(spec.presets[k]))
    return spec.grid(preset=name)


def test_registry_is_complete():
    assert list_cases() == tuple(sorted(ALL_CASES))
    with pytest.raises(ValueError, match="unknown case"):
        make_case("kelvin_helmholtz")


@pytest.mark.parametrize("name", ALL_CASES)
def test_initial_fields_are_physical(name):
    spec = make_case(name)
    grid = smallest_grid(spec)
    w = spec.initial_primitive(grid)
    assert np.all(np.isfinite(w))
    assert bool(np.all(is_physical(w)))
    spec.bcs.validate(grid)


def test_sod_initializer_sides():
    init = make_case("sod").initializer
    assert np.allclose(init(0.25), [0.125, 0.0, 0.0, 0.0, 0.1], atol=1e-15)
    assert np.allclose(init(0.75), [1.0, 0.0, 0.0, 0.0, 1.0], atol=1e-15)


def test_lax_initializer_sides():
    init = make_case("lax").initializer
    assert np.allclose(init(0.2), [0.445, 0.698, 0.0, 0.0, 3.528], atol=1e-15)
    assert np.allclose(init(0.8), [0.5, 0.0, 0.0, 0.0, 0.571], atol=1e-15)


def test_vortex_center_state():
    w = make_case("isentropic_vortex").initializer(5.0, 5.0)
    assert w[0] == pytest.approx(0.49380732389534654, rel=1e-14)
    assert w[1] == pytest.approx(1.0, abs=1e-15)
    assert w[2] == pytest.approx(1.0, abs=1e-15)
    assert w[4] == pytest.approx(w[0] ** 1.4, rel=1e-14)


def test_tgv_origin_and_kinetic_energy():
    spec = make_case("tgv_inviscid")
    w0 = spec.initializer(0.0, 0.0, 0.0)
    assert w0[1] == 0.0 and w0[2] == 0.0
    assert w0[4] == pytest.approx(100.25, abs=1e-13)
    grid = spec.grid(preset="smoke")
    ke = kinetic_energy(spec.initial_primitive(grid), grid)
    # cell-center quadrature is exact for these sub-grid-frequency
    # trigonometric products, so the box integral pi^3 comes out sharp
    assert ke == pytest.approx(np.pi**3, rel=1e-13)


def test_dmr_initializer_and_shock_trace():
    init = make_case("dmr").initializer
    assert init(0.0, 0.5)[0] == 8.0
    assert init(3.0, 0.5)[0] == pytest.approx(1.4)
    assert dmr_shock_position(0.0) == pytest.approx(
        1.0 / 6.0 + 1.0 / np.sqrt(3.0), rel=1e-14
    )
    assert dmr_shock_position(0.2) == pytest.approx(
        1.0 / 6.0 + 5.0 / np.sqrt(3.0), rel=1e-14
    )


def test_rayleigh_taylor_initializer():
    spec = make_case("rayleigh_taylor")
    assert spec.gas.gamma == pytest.approx(5.0 / 3.0)
    w = spec.initializer(0.0, 0.25)
    assert w[0] == 2.0
    assert w[4] == pytest.approx(1.5, abs=1e-15)
    c = np.sqrt(5.0 / 3.0 * 1.5 / 2.0)
    assert w[2] == pytest.approx(-0.025 * c, rel=1e-14)
    above = spec.initializer(0.0, 0.75)
    assert above[0] == 1.0
    assert above[4] == pytest.approx(2.25, abs=1e-15)


def test_viscous_shock_tube_gas():
    spec = make_case("viscous_shock_tube")
    assert spec.gas.viscous
    assert spec.gas.Re == 2500.0
    assert spec.gas.Pr == 0.73
    w = spec.initializer(0.25, 0.25)
    assert w[0] == 120.0
    assert w[4] == pytest.approx(120.0 / 1.4, rel=1e-15)


def test_grid_presets():
    spec = make_case("shu_osher")
    assert spec.grid().shape_interior == (300, 1, 1)
    assert spec.grid(preset="coarse").shape_interior == (150, 1, 1)
    assert spec.grid(n=(48, 1, 1)).shape_interior == (48, 1, 1)
    with pytest.raises(ValueError, match="preset"):
        spec.grid(preset="gigantic")


def test_advected_profile_returns_after_one_period():
    spec = make_case("linear_ooa")
    grid = spec.grid(n=(24, 24, 1))
    start = spec.initial_primitive(grid)
    assert np.allclose(advected_exact(spec, grid, 2.0), start, atol=1e-12)
    vort = make_case("isentropic_vortex")
    vgrid = vort.grid(n=(25, 25, 1))
    assert np.allclose(
        advected_exact(vort, vgrid, 10.0), vort.initial_primitive(vgrid), atol=1e-12
    )


def test_sod_reference_star_density(air):
    spec = make_case("sod")
    ref = reference_solution(spec)
    x = spec.grid().centers(0)
    k = int(np.argmin(np.abs(x - 0.5)))
    # light gas on the low side, so the star region carries the
    # mirrored textbook value at the diaphragm
    assert ref[0, k, 0, 0] == pytest.approx(0.42631942817849519, rel=1e-10)
    assert ref[1, k, 0, 0] == pytest.approx(-0.92745262004894995, rel=1e-10)
    assert bool(np.all(is_physical(ref)))


def test_uniform_reference_is_initial():
    spec = make_case("uniform")
    grid = spec.grid()
    assert np.array_equal(reference_solution(spec, grid), spec.initial_primitive(grid))


def test_reference_recipe_missing():
    with pytest.raises(ValueError, match="reference"):
        reference_solution(make_case("dmr"))


def test_fine_reference_smoke():
    spec = make_case("shu_osher")
    grid = spec.grid(n=(60, 1, 1))
    ref = reference_solution(spec, grid, fine=(120, 1, 1))
    assert ref.shape == (5, 60, 1, 1)
    assert bool(np.all(is_physical(ref)))


@pytest.mark.slow
def test_accuracy_study_rows():
    spec = make_case("linear_ooa")
    rows = accuracy_study(spec, [10, 20], SchemeConfig())
    assert rows[0]["order"] is None
    assert rows[1]["order"] > 2.5
    assert rows[1]["l2"] < rows[0]["l2"]
