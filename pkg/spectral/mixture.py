"""
Discrete mixing measures and sampled density curves.
"""

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError
from spectral.basis import _kernel, _antiderivative, _closed_unit, _open_unit, _out


class MixtureMeasure:
    """
    Sub-probability measure on (0, 1) made of atoms (v_j, w_j).

    The mass 1 - total_mass is the probability that the location sits on
    the boundary {0, 1}.
    """

    def __init__(self, v, w, mass_tol=Defaults.MASS_TOL):
        """
        Initialize a measure.

        Args:
            v: Atom locations, strictly inside (0, 1)
            w: Atom masses, nonnegative
            mass_tol: Allowed excess of total mass over 1
        """
        v = np.atleast_1d(np.asarray(v, dtype=float))
        w = np.atleast_1d(np.asarray(w, dtype=float))
        if v.shape != w.shape or v.ndim != 1:
            raise DomainError("atom locations and masses must be 1-d arrays of equal length")
        if v.size and not np.all((v > 0.0) & (v < 1.0)):
            raise DomainError("atom locations must lie strictly inside (0, 1)")
        if not np.all(np.isfinite(w)) or np.any(w < 0.0):
            raise DomainError("atom masses must be finite and nonnegative")
        if w.sum() > 1.0 + mass_tol:
            raise DomainError(f"total mass {w.sum():.12g} exceeds 1")
        self.v = v
        self.mass_tol = mass_tol
        self.w = w

    @classmethod
    def empty(cls):
        return cls(np.empty(0), np.empty(0))

    @classmethod
    def point(cls, v, mass=1.0):
        """Single atom of the given mass at v."""
        return cls([v], [mass])

    @property
    def total_mass(self):
        return float(self.w.sum())

    @property
    def boundary_mass(self):
        """Mass left for the end points, 1 - total_mass."""
        return max(0.0, 1.0 - self.total_mass)

    @property
    def atoms(self):
        return list(zip(self.v.tolist(), self.w.tolist()))

    def __len__(self):
        return self.v.size

    def pruned(self, threshold=0.0):
        """Copy without atoms of mass <= threshold."""
        keep = self.w > threshold
        return MixtureMeasure(self.v[keep], self.w[keep], self.mass_tol)

    def reflected(self):
        """Image under v -> 1 - v, the measure of the time-reversed process."""
        order = np.argsort(1.0 - self.v, kind='stable')
        return MixtureMeasure(1.0 - self.v[order], self.w[order], self.mass_tol)

    def mass_near(self, v, radius):
        """Mass of atoms within radius of v."""
        return float(self.w[np.abs(self.v - v) <= radius + 1e-12].sum())

    def to_rows(self):
        """CSV rows (v, mass)."""
        return [(float(a), float(b)) for a, b in zip(self.v, self.w)]

    def to_dict(self):
        return {'v': self.v.tolist(), 'w': self.w.tolist()}

    @staticmethod
    def from_dict(data):
        return MixtureMeasure(data['v'], data['w'])

    def __repr__(self):
        return f"MixtureMeasure(atoms={len(self)}, total_mass={self.total_mass:.6g})"


class DensityCurve:
    """A density f sampled at increasing points of (0, 1)."""

    def __init__(self, t_grid, f_values, se=None):
        """
        Initialize a curve.

        Args:
            t_grid: Strictly increasing points inside (0, 1)
            f_values: Nonnegative finite density values
            se: Optional standard errors of f_values
        """
        t_grid = np.asarray(t_grid, dtype=float)
        f_values = np.asarray(f_values, dtype=float)
        if t_grid.ndim != 1 or t_grid.shape != f_values.shape or t_grid.size == 0:
            raise DomainError("t_grid and f_values must be non-empty 1-d arrays of equal length")
        _open_unit(t_grid, 't_grid')
        if np.any(np.diff(t_grid) <= 0.0):
            raise DomainError("t_grid must be strictly increasing")
        if not np.all(np.isfinite(f_values)) or np.any(f_values < 0.0):
            raise DomainError("f_values must be finite and nonnegative")
        if se is not None:
            se = np.asarray(se, dtype=float)
            if se.shape != f_values.shape or np.any(se < 0.0):
                raise DomainError("se must be nonnegative and match f_values")
        self.t_grid = t_grid
        self.f_values = f_values
        self.se = se

    @classmethod
    def sample(cls, density, n_points):
        """
        Sample a density at the n_points bin midpoints (k + 1/2) / n_points.

        Args:
            density: Callable on arrays in (0, 1)
            n_points: Number of samples
        """
        t = (np.arange(n_points) + 0.5) / n_points
        return cls(t, density(t))

    def __len__(self):
        return self.t_grid.size

    def is_uniform(self, rtol=1e-6):
        if len(self) < 3:
            return True
        gaps = np.diff(self.t_grid)
        return bool(np.all(np.abs(gaps - gaps.mean()) <= rtol * gaps.mean()))

    @property
    def step(self):
        """Grid spacing of a uniform curve."""
        if len(self) < 2:
            return 1.0
        if not self.is_uniform():
            raise DomainError("curve is not on a uniform grid")
        return float(self.t_grid[1] - self.t_grid[0])

    def integral(self):
        """Riemann sum of the curve over its cells."""
        return float(self.f_values.sum() * self.step)

    def to_rows(self):
        """CSV rows (t, value)."""
        return [(float(a), float(b)) for a, b in zip(self.t_grid, self.f_values)]

    def __repr__(self):
        return f"DensityCurve(points={len(self)})"


def mixture_density(mu, t):
    """
    Density sum_j w_j f_{v_j}(t) of a mixture.

    Args:
        mu: MixtureMeasure
        t: Scalar or array in (0, 1)

    Returns:
        Mixture density at t; zero for the empty measure
    """
    t = _open_unit(t, 't')
    if len(mu) == 0:
        return _out(np.zeros_like(t))
    values = _kernel(mu.v[:, None], np.atleast_1d(t)[None, :])
    return _out((mu.w @ values).reshape(t.shape))


def mixture_integral(mu, a=0.0, b=1.0):
    """
    Exact integral of the mixture density over [a, b].

    Returns:
        Mass the mixture puts on [a, b]; total_mass for [0, 1]
    """
    a = float(_closed_unit(a, 'a'))
    b = float(_closed_unit(b, 'b'))
    if len(mu) == 0:
        return 0.0
    parts = _antiderivative(mu.v, b) - _antiderivative(mu.v, a)
    return float(mu.w @ parts)
