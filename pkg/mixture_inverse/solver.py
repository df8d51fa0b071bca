"""
Nonnegative least squares with an optional cap on total mass.
"""

import logging

import numpy as np
from scipy.optimize import lsq_linear

from utils.defaults import Defaults
from utils.errors import DomainError, SolverError

logger = logging.getLogger(__name__)


class NnlsResult:
    """Weights and convergence diagnostics of one solve."""

    def __init__(self, weights, residual, iterations, kkt, status, mass_capped=False):
        self.weights = weights
        self.residual = residual
        self.iterations = iterations
        self.kkt = kkt
        self.status = status
        self.mass_capped = mass_capped

    @property
    def l2(self):
        return float(np.linalg.norm(self.residual))

    @property
    def total_mass(self):
        return float(self.weights.sum())

    def to_dict(self):
        return {
            'l2': self.l2,
            'total_mass': self.total_mass,
            'iterations': self.iterations,
            'kkt': self.kkt,
            'status': self.status,
            'mass_capped': self.mass_capped,
        }


def _kkt_residual(A, b, w, damping, multiplier=0.0):
    """Worst violation of the optimality conditions for w >= 0."""
    grad = A.T @ (A @ w - b) + damping * w + multiplier
    free = w > 0.0
    worst_free = np.abs(grad[free]).max() if free.any() else 0.0
    worst_bound = np.maximum(-grad[~free], 0.0).max() if (~free).any() else 0.0
    scale = max(1.0, float(np.abs(A.T @ b).max()) if b.size else 1.0)
    return float(max(worst_free, worst_bound) / scale)


def _bvls(A, b, tol, max_iter):
    result = lsq_linear(A, b, bounds=(0.0, np.inf), method='bvls', tol=tol, max_iter=max_iter)
    if result.status <= 0:
        reason = "iteration limit reached" if result.status == 0 else "solver failed"
        report = {
            'status': int(result.status),
            'iterations': int(result.nit),
            'l2': float(np.linalg.norm(A @ result.x - b)),
            'message': result.message,
        }
        raise SolverError(f"nonnegative least squares did not converge: {reason}", report)
    return np.maximum(result.x, 0.0), int(result.nit), int(result.status)


def nnls_solve(A, b, mass_cap=None, damping=0.0, tol=Defaults.KKT_TOL, max_iter=None):
    """
    Minimise ||A w - b|| over w >= 0, optionally with sum(w) <= mass_cap.

    A binding cap is imposed through a heavily weighted row M * sum(w) = M *
    mass_cap, after which any remaining excess is removed by rescaling.

    Args:
        A: DesignMatrix or 2-d array
        b: Target vector, nonnegative
        mass_cap: Upper bound on sum(w), or None
        damping: Tikhonov weight lambda >= 0 on ||w||^2
        tol: Convergence tolerance of the active-set iteration
        max_iter: Iteration limit; 50 per atom if None

    Returns:
        NnlsResult
    """
    matrix = np.asarray(getattr(A, 'matrix', A), dtype=float)
    b = np.asarray(b, dtype=float)
    if matrix.ndim != 2 or b.shape != (matrix.shape[0],):
        raise DomainError(f"design {matrix.shape} does not match target of length {b.size}")
    if not np.all(np.isfinite(b)) or np.any(b < 0.0):
        raise DomainError("target values must be finite and nonnegative")
    if damping < 0.0:
        raise DomainError("damping must be nonnegative")
    if mass_cap is not None and mass_cap < 0.0:
        raise DomainError("mass_cap must be nonnegative")

    n_atoms = matrix.shape[1]
    if max_iter is None:
        max_iter = 50 * max(n_atoms, 1)
    if not np.any(b > 0.0):
        zero = np.zeros(n_atoms)
        return NnlsResult(zero, matrix @ zero - b, 0, 0.0, 1)

    A_fit, b_fit = matrix, b
    if damping > 0.0:
        A_fit = np.vstack([matrix, np.sqrt(damping) * np.eye(n_atoms)])
        b_fit = np.concatenate([b, np.zeros(n_atoms)])

    w, iterations, status = _bvls(A_fit, b_fit, tol, max_iter)
    capped = False
    multiplier = 0.0
    if mass_cap is not None and w.sum() > mass_cap + Defaults.MASS_TOL:
        capped = True
        penalty = 1e3 * max(1.0, float(np.linalg.norm(matrix, 2)))
        A_cap = np.vstack([A_fit, penalty * np.ones((1, n_atoms))])
        b_cap = np.concatenate([b_fit, [penalty * mass_cap]])
        w, more, status = _bvls(A_cap, b_cap, tol, max_iter)
        iterations += more
        if w.sum() > mass_cap:
            w *= mass_cap / w.sum()
        grad = matrix.T @ (matrix @ w - b) + damping * w
        free = w > 0.0
        if free.any():
            multiplier = float(-grad[free].mean())
        logger.debug("mass cap %.6g binding, multiplier %.3g", mass_cap, multiplier)

    kkt = _kkt_residual(matrix, b, w, damping, multiplier)
    logger.debug("nnls: %d atoms, %d iterations, kkt %.3g", n_atoms, iterations, kkt)
    return NnlsResult(w, matrix @ w - b, iterations, kkt, status, mass_capped=capped)
