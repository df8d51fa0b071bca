"""
Strictly alpha-stable Levy motion via the Chambers-Mallows-Stuck transform.
"""

import numpy as np

from utils.errors import DomainError
from .base_generator import BaseGenerator
from .grid import PathGrid


def cms_standard(alpha, beta, size, rng):
    """
    Standard strictly alpha-stable variates, S_alpha(1, beta, 0).

    alpha = 2 is rescaled by 1/sqrt(2) so that the output is N(0, 1), which
    makes alpha = 2 motion coincide with standard Brownian motion.

    Args:
        alpha: Stability index in (0, 2]
        beta: Skewness in [-1, 1]; must be 0 when alpha = 1
        size: Number of variates
        rng: numpy Generator

    Returns:
        Array of variates
    """
    if not 0.0 < alpha <= 2.0:
        raise DomainError(f"alpha must lie in (0, 2], got {alpha}")
    if not -1.0 <= beta <= 1.0:
        raise DomainError(f"beta must lie in [-1, 1], got {beta}")
    if alpha == 1.0 and beta != 0.0:
        raise DomainError("alpha = 1 is strictly stable only for beta = 0")

    phi = rng.uniform(-0.5 * np.pi, 0.5 * np.pi, size)
    w = rng.standard_exponential(size)

    if alpha == 2.0:
        return np.sqrt(2.0 * w) * np.sin(phi)
    if alpha == 1.0:
        return np.tan(phi)

    tan_term = beta * np.tan(0.5 * np.pi * alpha)
    shift = np.arctan(tan_term) / alpha
    scale = (1.0 + tan_term ** 2) ** (0.5 / alpha)
    arg = alpha * (phi + shift)
    return (scale * np.sin(arg) / np.cos(phi) ** (1.0 / alpha)
            * (np.cos(phi - arg) / w) ** ((1.0 - alpha) / alpha))


class StableLevyGenerator(BaseGenerator):
    """i.i.d. strictly stable increments, self-similar with H = 1/alpha."""

    def __init__(self):
        super().__init__('stable_levy')

    def generate(self, spec, replicate_index):
        rng = self._rng_for(spec, replicate_index)
        n = spec.grid.n_points - 1
        increments = cms_standard(spec.alpha, spec.beta, n, rng)
        increments *= spec.grid.step ** (1.0 / spec.alpha)
        return PathGrid.from_increments(spec.grid, increments, 1.0 / spec.alpha, 'cms')


_DEFAULT = StableLevyGenerator()


def gen_stable_levy(spec, replicate_index):
    """
    Generate one stable Levy motion replicate.

    Args:
        spec: SimSpec with family 'stable_levy'
        replicate_index: Replicate number

    Returns:
        PathGrid
    """
    return _DEFAULT.generate(spec, replicate_index)
