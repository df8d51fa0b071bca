"""
Brownian motion fast path: i.i.d. Gaussian increments.
"""

import numpy as np

from .base_generator import BaseGenerator
from .grid import PathGrid


class BrownianGenerator(BaseGenerator):
    """Standard Brownian motion, the fBm(H = 1/2) special case."""

    def __init__(self):
        super().__init__('brownian')

    def generate(self, spec, replicate_index):
        rng = self._rng_for(spec, replicate_index)
        n = spec.grid.n_points - 1
        increments = rng.standard_normal(n) * np.sqrt(spec.grid.step)
        return PathGrid.from_increments(spec.grid, increments, 0.5, 'iid_gaussian')
