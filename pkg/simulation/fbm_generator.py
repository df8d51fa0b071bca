"""
Fractional Brownian motion via circulant embedding (Davies-Harte), with a
Cholesky fallback when the embedding is not non-negative definite.
"""

import logging

import numpy as np
from scipy.linalg import cholesky, toeplitz

from utils.errors import DomainError
from .base_generator import BaseGenerator
from .grid import PathGrid

logger = logging.getLogger(__name__)

# Relative size of a negative eigenvalue still treated as round-off.
_EIGEN_TOL = 1e-10


def fbm_cov(h, s, t):
    """
    Covariance of standard fractional Brownian motion.

    Args:
        h: Hurst exponent in (0, 1)
        s, t: Times (scalars or broadcastable arrays)

    Returns:
        0.5 * (|s|^2h + |t|^2h - |s - t|^2h)
    """
    if not 0.0 < h < 1.0:
        raise DomainError(f"Hurst exponent must lie in (0, 1), got {h}")
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    two_h = 2.0 * h
    cov = 0.5 * (np.abs(s) ** two_h + np.abs(t) ** two_h - np.abs(s - t) ** two_h)
    return float(cov) if cov.ndim == 0 else cov


def fgn_autocovariance(h, n):
    """Autocovariance of unit-step fractional Gaussian noise at lags 0 .. n - 1."""
    k = np.arange(n, dtype=float)
    two_h = 2.0 * h
    return 0.5 * ((k + 1) ** two_h - 2.0 * k ** two_h + np.abs(k - 1) ** two_h)


def increment_covariance(h, n, step=1.0):
    """Covariance matrix of n fGn increments on a grid of the given step."""
    return toeplitz(fgn_autocovariance(h, n)) * step ** (2.0 * h)


def _embedding_size(n):
    """Smallest power of two >= 2n; non-power sizes are padded up to it."""
    return 1 << int(np.ceil(np.log2(2 * n)))


def circulant_eigenvalues(h, n):
    """
    Eigenvalues of the circulant embedding of the fGn covariance.

    Args:
        h: Hurst exponent
        n: Number of increments

    Returns:
        Array of m = _embedding_size(n) real eigenvalues
    """
    m = _embedding_size(n)
    lags = np.minimum(np.arange(m), m - np.arange(m))
    two_h = 2.0 * h
    lags = lags.astype(float)
    row = 0.5 * ((lags + 1) ** two_h - 2.0 * lags ** two_h + np.abs(lags - 1) ** two_h)
    return np.fft.fft(row).real


def _davies_harte(eigs, n, rng):
    """Unit-step fGn of length n from precomputed embedding eigenvalues."""
    m = eigs.size
    half = m // 2
    z = rng.standard_normal(m)
    w = np.empty(m, dtype=complex)
    w[0] = np.sqrt(eigs[0] / m) * z[0]
    w[half] = np.sqrt(eigs[half] / m) * z[half]
    scale = np.sqrt(eigs[1:half] / (2.0 * m))
    w[1:half] = scale * (z[1:half] + 1j * z[half + 1:])
    w[half + 1:] = np.conj(w[1:half][::-1])
    return np.fft.fft(w).real[:n]


def _cholesky(h, n, rng):
    """Unit-step fGn of length n by Cholesky factorization of its covariance."""
    lower = cholesky(increment_covariance(h, n), lower=True)
    return lower @ rng.standard_normal(n)


class FbmGenerator(BaseGenerator):
    """Exact-in-distribution fBm paths."""

    def __init__(self, method='auto'):
        """
        Initialize generator.

        Args:
            method: 'auto' (Davies-Harte, Cholesky on failure),
                'davies_harte' or 'cholesky'
        """
        super().__init__('fbm')
        if method not in ('auto', 'davies_harte', 'cholesky'):
            raise DomainError(f"unknown fbm method '{method}'")
        self.method = method
        self._eigen_cache = {}

    def _eigenvalues(self, h, n):
        """Embedding eigenvalues, or None when the embedding is not valid."""
        key = (h, n)
        if key not in self._eigen_cache:
            eigs = circulant_eigenvalues(h, n)
            if eigs.min() < -_EIGEN_TOL * eigs.max():
                logger.warning(
                    "circulant embedding not non-negative for H=%s, n=%d "
                    "(min eigenvalue %.3e); using Cholesky", h, n, eigs.min()
                )
                eigs = None
            else:
                eigs = np.clip(eigs, 0.0, None)
            self._eigen_cache[key] = eigs
        return self._eigen_cache[key]

    def generate(self, spec, replicate_index):
        rng = self._rng_for(spec, replicate_index)
        h = spec.hurst
        n = spec.grid.n_points - 1

        method = self.method
        eigs = None
        if method != 'cholesky':
            eigs = self._eigenvalues(h, n)
            if eigs is None:
                if method == 'davies_harte':
                    raise DomainError(f"circulant embedding fails for H={h}, n={n}")
                method = 'cholesky'
            else:
                method = 'davies_harte'

        if method == 'davies_harte':
            fgn = _davies_harte(eigs, n, rng)
        else:
            fgn = _cholesky(h, n, rng)

        increments = fgn * spec.grid.step ** h
        return PathGrid.from_increments(spec.grid, increments, h, method)


_DEFAULT = FbmGenerator()


def gen_fbm(spec, replicate_index, method='auto'):
    """
    Generate one fBm replicate.

    Args:
        spec: SimSpec with family 'fbm'
        replicate_index: Replicate number
        method: 'auto', 'davies_harte' or 'cholesky'

    Returns:
        PathGrid whose `method` attribute names the construction used
    """
    generator = _DEFAULT if method == 'auto' else FbmGenerator(method)
    return generator.generate(spec, replicate_index)
