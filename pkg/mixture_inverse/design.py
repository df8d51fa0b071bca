"""
Discretised kernel of the spectral mixture, f(t_i) = sum_j w_j f_{v_j}(t_i).
"""

import numpy as np
from scipy import integrate

from utils.errors import DomainError
from spectral.basis import _kernel, _open_unit, _reversible_kernel, default_v_grid


class DesignMatrix:
    """Basis values f_{v_j}(t_i): one row per t, one column per atom v."""

    def __init__(self, t_grid, v_grid, matrix, reversible=False):
        self.t_grid = t_grid
        self.v_grid = v_grid
        self.matrix = matrix
        self.reversible = reversible

    @property
    def shape(self):
        return self.matrix.shape

    def column(self, v):
        """Column of the atom nearest to v."""
        return self.matrix[:, int(np.argmin(np.abs(self.v_grid - v)))]

    def column_mass(self):
        """Trapezoid integral of each column over t_grid; below 1 by the uncovered edges."""
        if self.t_grid.size < 2:
            return np.zeros(self.v_grid.size)
        return integrate.trapezoid(self.matrix, self.t_grid, axis=0)

    def __matmul__(self, w):
        return self.matrix @ w

    def __repr__(self):
        kind = "reversible " if self.reversible else ""
        return f"DesignMatrix({kind}{self.shape[0]}x{self.shape[1]})"


def reversible_v_grid(n_atoms=None):
    """Atoms of default_v_grid in (0, 1/2]."""
    v = default_v_grid(n_atoms)
    return v[v <= 0.5 + 1e-12]


def build_design(t_grid, v_grid=None, reversible=False):
    """
    Build the design matrix for a t-grid and atom locations.

    Args:
        t_grid: Evaluation points strictly inside (0, 1)
        v_grid: Atom locations strictly inside (0, 1); defaults to the
                199 midpoints j/200 (those <= 1/2 when reversible)
        reversible: Use the symmetrised basis, atoms restricted to (0, 1/2]

    Returns:
        DesignMatrix
    """
    if v_grid is None:
        v_grid = reversible_v_grid() if reversible else default_v_grid()
    t = _open_unit(np.atleast_1d(t_grid), 't_grid')
    v = _open_unit(np.atleast_1d(v_grid), 'v_grid')
    if t.ndim != 1 or v.ndim != 1:
        raise DomainError("t_grid and v_grid must be 1-d")
    if reversible:
        if np.any(v > 0.5):
            raise DomainError("reversible design needs atoms in (0, 1/2]")
        matrix = _reversible_kernel(v[None, :], t[:, None])
    else:
        matrix = _kernel(v[None, :], t[:, None])
    return DesignMatrix(t, v, matrix, reversible=reversible)
