"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from igflow.grid import Grid
from igflow.state import GasModel


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def air():
    return GasModel(gamma=1.4)


def random_physical_states(rng, n, *, gamma=1.4):
    """(5, n) primitive states with density and pressure bounded away
    from zero and velocities of either sign."""
    w = np.empty((5, n))
    w[0] = rng.uniform(0.1, 5.0, n)
    w[1] = rng.uniform(-3.0, 3.0, n)
    w[2] = rng.uniform(-3.0, 3.0, n)
    w[3] = rng.uniform(-3.0, 3.0, n)
    w[4] = rng.uniform(0.05, 8.0, n)
    return w


def line_grid(n, *, periodic=True, bounds=(0.0, 2.0 * np.pi)):
    """1D x-only grid with three ghost layers."""
    return Grid(
        n=(n, 1, 1),
        bounds=((bounds[0], bounds[1]), (0.0, 1.0), (0.0, 1.0)),
        periodic=(periodic, False, False),
    )


def square_grid(n, *, periodic=True, bounds=((0.0, 1.0), (0.0, 1.0))):
    return Grid(
        n=(n, n, 1),
        bounds=(bounds[0], bounds[1], (0.0, 1.0)),
        periodic=(periodic, periodic, False),
    )
