"""Shared fixtures: frames and surfaces reused across test modules.

Session-scoped because integration on the finer grids is the expensive part
of the suite; everything downstream of a frame is cheap.
"""

import numpy as np
import pytest

from cmclab.frames import SpectralParam, integrate_frame, shift_frame
from cmclab.surface_data import GridSpec, cylinder_data, delaunay_data


def square_grid(n: int) -> GridSpec:
    return GridSpec(-1.0, 1.0, -1.0, 1.0, n, n)


@pytest.fixture(scope="session")
def sp_half():
    return SpectralParam(0.5)


@pytest.fixture(scope="session")
def cyl_frame_51(sp_half):
    return integrate_frame(cylinder_data(square_grid(51)), sp_half)


@pytest.fixture(scope="session")
def cyl_frame_101(sp_half):
    return integrate_frame(cylinder_data(square_grid(101)), sp_half)


@pytest.fixture(scope="session")
def cyl_frame_201(sp_half):
    return integrate_frame(cylinder_data(square_grid(201)), sp_half)


@pytest.fixture(scope="session")
def del_data_101():
    return delaunay_data(square_grid(101), 0.5, 0.3, 0.0)


@pytest.fixture(scope="session")
def del_data_201():
    return delaunay_data(square_grid(201), 0.5, 0.3, 0.0)


@pytest.fixture(scope="session")
def del_frame_101(del_data_101, sp_half):
    return integrate_frame(del_data_101, sp_half)


@pytest.fixture(scope="session")
def del_frame_201(del_data_201, sp_half):
    return integrate_frame(del_data_201, sp_half)
