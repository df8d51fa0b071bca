"""
Uniform time grids and sampled process paths.
"""

import numpy as np

from utils.errors import DomainError


class GridSpec:
    """A uniform grid t_start + k * step, k = 0 .. n_points - 1."""

    def __init__(self, t_start, t_end, n_points):
        """
        Initialize a grid.

        Args:
            t_start: Left end of the window
            t_end: Right end of the window
            n_points: Number of grid points (>= 2)
        """
        if int(n_points) != n_points or n_points < 2:
            raise DomainError(f"n_points must be an integer >= 2, got {n_points}")
        if not (np.isfinite(t_start) and np.isfinite(t_end)) or t_start >= t_end:
            raise DomainError(f"need t_start < t_end, got [{t_start}, {t_end}]")
        self.t_start = float(t_start)
        self.t_end = float(t_end)
        self.n_points = int(n_points)

    @classmethod
    def unit(cls, n_steps):
        """Grid on [0, 1] with n_steps increments."""
        return cls(0.0, 1.0, n_steps + 1)

    @classmethod
    def window(cls, width, steps_per_unit):
        """Grid on [-width, 1 + width] with steps_per_unit increments per unit time."""
        n_steps = int(round((1.0 + 2.0 * width) * steps_per_unit))
        return cls(-float(width), 1.0 + float(width), n_steps + 1)

    @property
    def step(self):
        """Grid spacing."""
        return (self.t_end - self.t_start) / (self.n_points - 1)

    @property
    def length(self):
        return self.t_end - self.t_start

    def times(self):
        """All grid points as an array."""
        return self.t_start + self.step * np.arange(self.n_points)

    def index_range(self, a, b):
        """
        Grid indices covering the closed interval [a, b].

        Args:
            a, b: Interval end points, a < b, inside the grid

        Returns:
            Tuple (first_index, last_index), inclusive
        """
        slack = 1e-9 * self.step
        if not a < b:
            raise DomainError(f"empty sub-interval [{a}, {b}]")
        if a < self.t_start - slack or b > self.t_end + slack:
            raise DomainError(
                f"sub-interval [{a}, {b}] not covered by grid [{self.t_start}, {self.t_end}]"
            )
        lo = int(np.ceil((a - self.t_start) / self.step - 1e-9))
        hi = int(np.floor((b - self.t_start) / self.step + 1e-9))
        lo = max(lo, 0)
        hi = min(hi, self.n_points - 1)
        if lo > hi:
            raise DomainError(f"sub-interval [{a}, {b}] contains no grid point")
        return lo, hi

    def scaled(self, a):
        """Grid with time multiplied by a > 0."""
        return GridSpec(a * self.t_start, a * self.t_end, self.n_points)

    def to_dict(self):
        return {'t_start': self.t_start, 't_end': self.t_end, 'n_points': self.n_points}

    @staticmethod
    def from_dict(data):
        return GridSpec(data['t_start'], data['t_end'], data['n_points'])

    def __eq__(self, other):
        if not isinstance(other, GridSpec):
            return False
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"GridSpec([{self.t_start}, {self.t_end}], n={self.n_points})"


class PathGrid:
    """A sampled path X(t) on a uniform grid, anchored so that X(t_start) = 0."""

    def __init__(self, grid, values, hurst_exponent, method=None):
        """
        Initialize a path.

        Args:
            grid: GridSpec the values live on
            values: Array of path values, one per grid point
            hurst_exponent: Self-similarity exponent H > 0 of the process
            method: Name of the generator that produced the path, if any
        """
        values = np.asarray(values, dtype=float)
        if values.shape != (grid.n_points,):
            raise DomainError(
                f"path has {values.size} values for a grid of {grid.n_points} points"
            )
        if not np.all(np.isfinite(values)):
            raise DomainError("path values must be finite")
        if values[0] != 0.0:
            raise DomainError(f"path must be anchored at 0, got values[0]={values[0]}")
        if not hurst_exponent > 0:
            raise DomainError(f"Hurst exponent must be positive, got {hurst_exponent}")
        self.grid = grid
        self.values = values
        self.hurst_exponent = float(hurst_exponent)
        self.method = method

    @classmethod
    def from_increments(cls, grid, increments, hurst_exponent, method=None):
        """Cumulative sum of increments, anchored at the left window edge."""
        values = np.empty(grid.n_points)
        values[0] = 0.0
        np.cumsum(increments, out=values[1:])
        return cls(grid, values, hurst_exponent, method)

    def increments(self):
        return np.diff(self.values)

    def time_scaled(self, a):
        """The same values on the time-rescaled grid a * grid."""
        return PathGrid(self.grid.scaled(a), self.values, self.hurst_exponent, self.method)

    def to_rows(self):
        """Rows (t, x) for CSV export."""
        return np.column_stack([self.grid.times(), self.values])

    def __len__(self):
        return self.grid.n_points

    def __repr__(self):
        return f"PathGrid({self.grid}, H={self.hurst_exponent}, method={self.method})"
