"""
Recover the mixing measure of a density curve.
"""

import logging

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError
from spectral.mixture import DensityCurve, MixtureMeasure, mixture_density
from .design import build_design
from .solver import nnls_solve

logger = logging.getLogger(__name__)


class FitReport:
    """Misfit and solver diagnostics of a mixture fit."""

    def __init__(self, l2, sup, total_mass, iterations, kkt, mass_capped, reproduced):
        """
        Args:
            l2: Euclidean norm of the residual on the curve's grid
            sup: Largest absolute residual
            total_mass: Mass of the recovered measure
            iterations: Solver iterations
            kkt: Scaled optimality residual
            mass_capped: True if the mass cap was binding
            reproduced: DensityCurve of the recovered mixture on the same grid
        """
        self.l2 = l2
        self.sup = sup
        self.total_mass = total_mass
        self.iterations = iterations
        self.kkt = kkt
        self.mass_capped = mass_capped
        self.reproduced = reproduced

    @property
    def boundary_mass(self):
        return max(0.0, 1.0 - self.total_mass)

    def to_dict(self):
        return {
            'l2': self.l2,
            'sup': self.sup,
            'total_mass': self.total_mass,
            'boundary_mass': self.boundary_mass,
            'iterations': self.iterations,
            'kkt': self.kkt,
            'mass_capped': self.mass_capped,
        }


def _symmetrise(v, w):
    """Spread each atom (v, w) of a reversible fit over v and 1 - v."""
    mirror = v < 0.5
    v_all = np.concatenate([v, 1.0 - v[mirror]])
    w_all = np.concatenate([np.where(mirror, w / 2.0, w), w[mirror] / 2.0])
    order = np.argsort(v_all, kind='stable')
    return v_all[order], w_all[order]


def fit_mixture(curve, v_grid=None, mass_cap=1.0, damping=0.0, reversible=False):
    """
    Fit a sub-probability mixture of basis densities to a curve.

    Args:
        curve: DensityCurve to reproduce
        v_grid: Atom locations; 199 midpoints j/200 by default
        mass_cap: Upper bound on the recovered mass
        damping: Tikhonov weight, 0 for plain least squares
        reversible: Fit the symmetrised basis and return a measure
                    symmetric under v -> 1 - v

    Returns:
        Tuple (MixtureMeasure of the atoms with positive mass, FitReport)
    """
    if not isinstance(curve, DensityCurve):
        raise DomainError("fit_mixture expects a DensityCurve")
    design = build_design(curve.t_grid, v_grid, reversible=reversible)
    result = nnls_solve(design, curve.f_values, mass_cap=mass_cap, damping=damping)

    v, w = design.v_grid, result.weights
    if reversible:
        v, w = _symmetrise(v, w)
    keep = w > 0.0
    excess = np.inf if mass_cap is None else max(mass_cap - 1.0, 0.0)
    measure = MixtureMeasure(v[keep], w[keep], mass_tol=max(Defaults.MASS_TOL, excess))

    fitted = mixture_density(measure, curve.t_grid)
    residual = np.atleast_1d(fitted) - curve.f_values
    report = FitReport(
        l2=float(np.linalg.norm(residual)),
        sup=float(np.abs(residual).max()),
        total_mass=measure.total_mass,
        iterations=result.iterations,
        kkt=result.kkt,
        mass_capped=result.mass_capped,
        reproduced=DensityCurve(curve.t_grid, np.atleast_1d(fitted)),
    )
    logger.info("fitted %d atoms, total mass %.6f, l2 misfit %.3g",
                len(measure), report.total_mass, report.l2)
    return measure, report
