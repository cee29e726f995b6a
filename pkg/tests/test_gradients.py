"""Explicit and compact scaled derivatives, symbols, mirror symmetry."""

import numpy as np
import pytest

from igflow.gradients import (
    GradientScheme,
    compact_first_derivative,
    compact_second_derivative,
    explicit_gradients,
    gradient_symbol,
    scheme_coefficients,
)


def test_explicit_gradients_exact_on_quadratic():
    j = np.arange(-1.0, 11.0)  # one ghost layer each side
    u = j**2
    du, d2u = explicit_gradients(u, ghost=1)
    inner = j[1:-1]
    assert np.array_equal(du, 2.0 * inner)
    assert np.array_equal(d2u, np.full(10, 2.0))


def test_explicit_gradients_batch_shape():
    u = np.zeros((3, 2, 14))
    du, d2u = explicit_gradients(u, ghost=2)
    assert du.shape == (3, 2, 10)
    assert d2u.shape == (3, 2, 10)


def test_symbol_values():
    assert gradient_symbol(GradientScheme.EG2, np.pi / 2) == pytest.approx(1j)
    assert gradient_symbol(GradientScheme.CD4, np.pi / 4) == pytest.approx(
        0.7857384985862408j, abs=1e-12
    )
    assert gradient_symbol(GradientScheme.CD6, np.pi / 3) == pytest.approx(
        1.0464473629061967j, abs=1e-12
    )
    for s in GradientScheme:
        assert gradient_symbol(s, 0.0) == 0.0


def test_symbol_consistent_at_small_wavenumber():
    beta = 1e-3
    for s in GradientScheme:
        g = gradient_symbol(s, beta)
        assert g.imag == pytest.approx(beta, rel=1e-5)
        assert g.real == 0.0


def test_operator_matches_symbol_on_fourier_mode():
    n = 48
    j = np.arange(n)
    for s in (GradientScheme.CD4, GradientScheme.CD6):
        for k in (1, 5, 11):
            beta = 2.0 * np.pi * k / n
            gamma = gradient_symbol(s, beta).imag
            du = compact_first_derivative(np.cos(beta * j), s, periodic=True)
            assert np.max(np.abs(du + gamma * np.sin(beta * j))) < 1e-12


def test_periodic_sine_sixth_order():
    errs = []
    for n in (32, 64):
        x = 2.0 * np.pi * np.arange(n) / n
        h = 2.0 * np.pi / n
        du = compact_first_derivative(np.sin(x), GradientScheme.CD6, periodic=True) / h
        errs.append(np.max(np.abs(du - np.cos(x))))
    order = np.log2(errs[0] / errs[1])
    assert order == pytest.approx(6.0, abs=0.3)


def test_closed_line_exact_on_cubic():
    x = np.arange(20, dtype=float)
    u = 0.3 * x**3 - 2.0 * x**2 + x - 5.0
    exact = 0.9 * x**2 - 4.0 * x + 1.0
    for s in (GradientScheme.CD4, GradientScheme.CD6):
        du = compact_first_derivative(u, s, periodic=False)
        assert np.max(np.abs(du - exact)) < 1e-11


def test_second_derivative_is_first_applied_twice():
    n = 64
    x = 2.0 * np.pi * np.arange(n) / n
    u = np.sin(x)
    du = compact_first_derivative(u, GradientScheme.CD6, periodic=True)
    d2u = compact_second_derivative(du, GradientScheme.CD6, periodic=True)
    h = 2.0 * np.pi / n
    assert np.max(np.abs(d2u / h**2 + np.sin(x))) < 1e-8


def test_mirror_antisymmetry_is_bitwise(rng):
    # reversing the line must negate the derivative with no round-off at
    # all, or reflection-symmetric flows drift
    for periodic in (True, False):
        for s in (GradientScheme.CD4, GradientScheme.CD6):
            u = rng.normal(size=(4, 37))
            du = compact_first_derivative(u, s, periodic)
            du_rev = compact_first_derivative(u[:, ::-1], s, periodic)
            assert np.array_equal(du_rev, -du[:, ::-1])


def test_short_line_rejected():
    with pytest.raises(ValueError):
        compact_first_derivative(np.ones(4), GradientScheme.CD6, periodic=False)


def test_coefficients_and_validation():
    assert scheme_coefficients(GradientScheme.CD6) == (1.0 / 3.0, 14.0 / 9.0, 1.0 / 9.0)
    assert scheme_coefficients(GradientScheme.CD4) == (5.0 / 14.0, 11.0 / 7.0, 1.0 / 7.0)
    with pytest.raises(ValueError):
        scheme_coefficients(GradientScheme.EG2)
    with pytest.raises(ValueError):
        explicit_gradients(np.ones(10), ghost=0)
