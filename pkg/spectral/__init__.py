"""
Closed-form spectral layer: basis densities, bounds, mixtures and envelopes.
"""

from .basis import (
    basis_density,
    basis_density_reversible,
    basis_integral,
    basis_mean,
    default_v_grid,
    entropy_z,
    h_threshold,
)
from .bounds import entropy_bound, improvement_factor, reversible_bound, stationary_bound
from .mixture import DensityCurve, MixtureMeasure, mixture_density, mixture_integral
from .expectation import expectation_bounds, interval_probability_bound
from .shape import ShapeReport, check_shape_constraints

__all__ = [
    'entropy_z', 'basis_density', 'basis_density_reversible', 'basis_integral',
    'basis_mean', 'default_v_grid', 'h_threshold',
    'entropy_bound', 'reversible_bound', 'stationary_bound', 'improvement_factor',
    'MixtureMeasure', 'DensityCurve', 'mixture_density', 'mixture_integral',
    'expectation_bounds', 'interval_probability_bound',
    'ShapeReport', 'check_shape_constraints',
]
