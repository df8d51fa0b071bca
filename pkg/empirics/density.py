"""
Histogram estimates of location densities with boundary atoms.
"""

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError, InsufficientDataError
from locations.location_sample import LocationSample
from spectral.mixture import DensityCurve


def sample_arrays(samples):
    """
    Split location samples into (values, at_zero, at_one) arrays.

    Plain numbers are accepted too; they are flagged at the boundary when
    they equal 0 or 1 exactly.
    """
    samples = list(samples)
    if samples and isinstance(samples[0], LocationSample):
        values = np.array([s.value for s in samples], dtype=float)
        at_zero = np.array([s.at_zero for s in samples], dtype=bool)
        at_one = np.array([s.at_one for s in samples], dtype=bool)
    else:
        values = np.asarray(samples, dtype=float)
        at_zero = values == 0.0
        at_one = values == 1.0
    if np.any((values < 0.0) | (values > 1.0)) or not np.all(np.isfinite(values)):
        raise DomainError("location samples must lie in [0, 1]")
    return values, at_zero, at_one


class DensityEstimate:
    """Interior histogram plus point masses at 0 and 1."""

    def __init__(self, edges, heights, mass_at_0, mass_at_1, n_samples, standard_error):
        self.edges = edges
        self.heights = heights
        self.mass_at_0 = mass_at_0
        self.mass_at_1 = mass_at_1
        self.n_samples = n_samples
        self.standard_error = standard_error

    @property
    def bins(self):
        return self.heights.size

    @property
    def bin_width(self):
        return float(self.edges[1] - self.edges[0])

    @property
    def centers(self):
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def interior_mass(self):
        return float(self.heights.sum() * self.bin_width)

    @property
    def relative_error(self):
        """SE / height, inf where a bin is empty."""
        with np.errstate(divide='ignore', invalid='ignore'):
            return np.where(self.heights > 0.0, self.standard_error / self.heights, np.inf)

    def height_at(self, t):
        """Linear interpolation of the bin heights at t."""
        return np.interp(t, self.centers, self.heights)

    def se_at(self, t):
        return np.interp(t, self.centers, self.standard_error)

    def to_curve(self):
        """Bin centres and heights as a DensityCurve with standard errors."""
        return DensityCurve(self.centers, self.heights, se=self.standard_error)

    def mirrored(self):
        """Estimate of 1 - tau."""
        return DensityEstimate(
            self.edges, self.heights[::-1].copy(), self.mass_at_1, self.mass_at_0,
            self.n_samples, self.standard_error[::-1].copy(),
        )

    def to_rows(self):
        """CSV rows (t, height, se)."""
        return [
            (float(c), float(h), float(e))
            for c, h, e in zip(self.centers, self.heights, self.standard_error)
        ]

    def to_dict(self):
        return {
            'bins': self.bins,
            'n_samples': self.n_samples,
            'mass_at_0': self.mass_at_0,
            'mass_at_1': self.mass_at_1,
            'interior_mass': self.interior_mass,
        }

    def __repr__(self):
        return (f"DensityEstimate(n={self.n_samples}, bins={self.bins}, "
                f"mass_at_0={self.mass_at_0:.4f}, mass_at_1={self.mass_at_1:.4f})")


def estimate_location_density(samples, bins=Defaults.BINS):
    """
    Estimate the density of a location law on [0, 1].

    Samples flagged at 0 or 1 become point masses; the rest are binned on
    B uniform bins so that boundary masses plus the histogram integrate to 1.

    Args:
        samples: LocationSample list or array of values in [0, 1]
        bins: Number of bins B >= 2

    Returns:
        DensityEstimate
    """
    if int(bins) != bins or bins < 2:
        raise DomainError(f"need an integer number of bins >= 2, got {bins}")
    values, at_zero, at_one = sample_arrays(samples)
    n = values.size
    if n == 0:
        raise InsufficientDataError("no location samples")
    interior = ~(at_zero | at_one)
    edges = np.linspace(0.0, 1.0, int(bins) + 1)
    counts, _ = np.histogram(values[interior], bins=edges)
    width = edges[1] - edges[0]
    share = counts / n
    heights = share / width
    standard_error = np.sqrt(share * (1.0 - share) / n) / width
    return DensityEstimate(
        edges, heights,
        mass_at_0=float(np.count_nonzero(at_zero)) / n,
        mass_at_1=float(np.count_nonzero(at_one & ~at_zero)) / n,
        n_samples=n,
        standard_error=standard_error,
    )
