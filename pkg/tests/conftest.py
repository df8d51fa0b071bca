"""Shared fixtures for the test suites."""

import numpy as np
import pytest

from simulation import GridSpec, PathGrid, SimSpec, map_replicates
from empirics import CloudTask


def path_from_values(values, t_start=0.0, t_end=None):
    """PathGrid on a grid with unit spacing unless t_end is given."""
    values = np.asarray(values, dtype=float)
    t_end = t_start + values.size - 1 if t_end is None else t_end
    return PathGrid(GridSpec(t_start, t_end, values.size), values, 0.5)


@pytest.fixture(scope='session')
def brownian_clouds():
    """Local maxima over [0, 1) of 60 Brownian paths on [-3, 4] at 4096 steps per unit."""
    spec = SimSpec('brownian', GridSpec.window(3.0, 4096), master_seed=11, replicates=60)
    return map_replicates(spec, CloudTask(), workers=1)
