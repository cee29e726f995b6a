"""Operator symbols, exact Riemann reference, norms, diagnostics."""

import numpy as np
import pytest

from igflow.analysis import (
    VacuumError,
    enstrophy,
    exact_riemann,
    kinetic_energy,
    l2_error,
    observed_order,
    operator_eg,
    operator_first_order,
    operator_ig4,
    operator_ig6,
    operator_numeric,
    operator_table,
    velocity_gradient,
)

from conftest import square_grid


# -- closed-form symbols -------------------------------------------


def test_eg_symbol_values():
    assert operator_eg(np.pi / 2) == pytest.approx(
        -1.0 / 3.0 - 4.0j / 3.0, abs=1e-15
    )
    assert operator_eg(np.pi) == pytest.approx(-4.0 / 3.0, abs=1e-15)


def test_ig4_symbol_at_cutoff():
    assert operator_ig4(np.pi) == pytest.approx(-2.0, abs=1e-14)


def test_first_order_symbol():
    b = 0.8
    assert operator_first_order(b) == pytest.approx(
        -(1.0 - np.exp(-1j * b)), abs=1e-15
    )


def test_numeric_operator_matches_closed_forms():
    n = 64
    for k in (1, 3, 9, 21, 31):
        b = 2.0 * np.pi * k / n
        assert operator_numeric("eg", b, n) == pytest.approx(
            complex(operator_eg(b)), abs=1e-11
        )
        assert operator_numeric("ig4", b, n) == pytest.approx(
            complex(operator_ig4(b)), abs=1e-11
        )
        assert operator_numeric("ig6", b, n) == pytest.approx(
            complex(operator_ig6(b)), abs=1e-11
        )
        assert operator_numeric("first_order", b, n) == pytest.approx(
            complex(operator_first_order(b)), abs=1e-12
        )


def test_ig6_variant_discrimination():
    # the corrected dispersive denominator tracks the numeric operator;
    # the printed one departs at order one away from beta -> 0.  The
    # probe frequency must be a harmonic of the measurement line.
    b = 2.0 * np.pi * 13 / 64
    numeric = operator_numeric("ig6", b, 64)
    assert abs(numeric - complex(operator_ig6(b, "corrected"))) < 1e-12
    assert abs(numeric - complex(operator_ig6(b, "printed"))) > 1e-1
    with pytest.raises(ValueError):
        operator_ig6(1.0, variant="exact")


def test_ig4_low_wavenumber_expansion():
    # F = -i b - i b^5/720 + O(b^7)  and  Re F = -b^8/6912 + O(b^10)
    b = 0.05
    f = complex(operator_ig4(b))
    assert (f.imag + b) / b**5 == pytest.approx(-1.0 / 720.0, rel=1e-2)
    b = 0.1
    f = complex(operator_ig4(b))
    assert f.real / b**8 == pytest.approx(-1.0 / 6912.0, rel=1e-2)


def test_ig6_low_wavenumber_expansion():
    # dispersive error b^4/720 and dissipative error b^5/1440, both
    # relative to the exact operator -i b
    b = 0.05
    f = complex(operator_ig6(b))
    assert (f.imag + b) / b**5 == pytest.approx(-1.0 / 720.0, rel=1e-2)
    b = 0.1
    f = complex(operator_ig6(b))
    assert f.real / b**6 == pytest.approx(-1.0 / 1440.0, rel=1e-2)


def test_operator_table_rows():
    rows = operator_table(["eg", "ig6"], [0.5, 1.0])
    assert len(rows) == 4
    name, beta, re, im = rows[0]
    assert name == "eg" and beta == 0.5
    assert complex(re, im) == pytest.approx(complex(operator_eg(0.5)), abs=1e-12)


# -- exact Riemann solution ----------------------------------------


def test_sod_star_region(air):
    sol = exact_riemann((1.0, 0.0, 1.0), (0.125, 0.0, 0.1), air)
    assert sol.p_star == pytest.approx(0.30313017805064682, rel=1e-10)
    assert sol.u_star == pytest.approx(0.92745262004894995, rel=1e-10)
    v = sol.sample(np.array([0.0]))
    assert v[0, 0] == pytest.approx(0.42631942817849519, rel=1e-10)
    far = sol.sample(np.array([-10.0, 10.0]))
    assert np.allclose(far[:, 0], [1.0, 0.0, 1.0], atol=1e-14)
    assert np.allclose(far[:, 1], [0.125, 0.0, 0.1], atol=1e-14)


def test_lax_star_region(air):
    sol = exact_riemann((0.445, 0.698, 3.528), (0.5, 0.0, 0.571), air)
    assert sol.p_star == pytest.approx(2.4660979192073567, rel=1e-10)
    assert sol.u_star == pytest.approx(1.528723026632884, rel=1e-10)


def test_right_shock_satisfies_jump_conditions(air):
    # sample both sides of the Sod right shock and verify the
    # Rankine-Hugoniot relations with the speed from the mass jump
    sol = exact_riemann((1.0, 0.0, 1.0), (0.125, 0.0, 0.1), air)
    s_guess = 1.75  # between contact (0.93) and the right edge
    inner = sol.sample(np.array([s_guess - 0.3]))[:, 0]
    outer = sol.sample(np.array([s_guess + 0.3]))[:, 0]
    r1, u1, p1 = inner
    r2, u2, p2 = outer
    s = (r2 * u2 - r1 * u1) / (r2 - r1)
    mom = (r2 * u2**2 + p2) - (r1 * u1**2 + p1) - s * (r2 * u2 - r1 * u1)
    E1 = p1 / 0.4 + 0.5 * r1 * u1**2
    E2 = p2 / 0.4 + 0.5 * r2 * u2**2
    ene = (u2 * (E2 + p2)) - (u1 * (E1 + p1)) - s * (E2 - E1)
    assert abs(mom) < 1e-10
    assert abs(ene) < 1e-10


def test_vacuum_and_validation(air):
    with pytest.raises(VacuumError):
        exact_riemann((1.0, -6.0, 1.0), (1.0, 6.0, 1.0), air)
    with pytest.raises(ValueError):
        exact_riemann((-1.0, 0.0, 1.0), (1.0, 0.0, 1.0), air)
    # bare gamma accepted in place of a gas model
    sol = exact_riemann((1.0, 0.0, 1.0), (0.125, 0.0, 0.1), 1.4)
    assert sol.gamma == 1.4


# -- norms, orders, diagnostics ------------------------------------


def test_l2_error():
    a = np.zeros((4, 4))
    b = np.full((4, 4), 0.5)
    assert l2_error(a, b) == pytest.approx(0.5, abs=1e-15)
    with pytest.raises(ValueError):
        l2_error(np.zeros(3), np.zeros(4))


def test_observed_order_examples():
    assert observed_order([(10, 1.0e-2), (20, 1.25e-3)])[0] == pytest.approx(3.0)
    assert observed_order([(10, 4.65e-4), (20, 4.37e-5)])[0] == pytest.approx(
        3.41, abs=5e-3
    )
    assert observed_order([(50, 1.64e-4), (100, 4.10e-5)])[0] == pytest.approx(
        2.0, abs=1e-12
    )
    with pytest.raises(ValueError):
        observed_order([(10, 1.0e-2)])


def test_kinetic_energy_uniform():
    g = square_grid(8)
    w = np.zeros((5,) + g.shape_interior)
    w[0] = 2.0
    w[1] = 3.0
    assert kinetic_energy(w, g) == pytest.approx(9.0, rel=1e-14)


def test_velocity_gradient_linear_shear():
    g = square_grid(16, periodic=False, bounds=((0.0, 1.0), (0.0, 1.0)))
    x, y, _ = g.centers_mesh()
    w = np.zeros((5,) + g.shape_interior)
    w[0] = 1.0
    w[1] = np.broadcast_to(y, g.shape_interior).copy()
    w[4] = 1.0
    gv = velocity_gradient(w, g)
    assert np.allclose(gv[0, 1], 1.0, atol=1e-10)
    assert np.allclose(gv[1, 0], 0.0, atol=1e-12)


def test_solid_body_rotation_enstrophy():
    # u = (-y, x): curl magnitude 2 everywhere, so the integral is
    # twice the domain volume; closed-line gradients are exact on
    # linear fields
    g = square_grid(20, periodic=False, bounds=((-1.0, 1.0), (-1.0, 1.0)))
    x, y, _ = g.centers_mesh()
    w = np.zeros((5,) + g.shape_interior)
    w[0] = 1.0
    w[1] = np.broadcast_to(-y, g.shape_interior).copy()
    w[2] = np.broadcast_to(x, g.shape_interior).copy()
    w[4] = 1.0
    assert enstrophy(w, g) == pytest.approx(2.0 * 4.0, rel=1e-10)
