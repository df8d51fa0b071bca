"""
Inverse problem: recover the mixing measure from a location density.
"""

from .design import DesignMatrix, build_design, reversible_v_grid
from .solver import NnlsResult, nnls_solve
from .fit import FitReport, fit_mixture

__all__ = [
    'DesignMatrix', 'build_design', 'reversible_v_grid',
    'NnlsResult', 'nnls_solve',
    'FitReport', 'fit_mixture',
]
