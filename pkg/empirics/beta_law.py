"""
Beta laws for the location of the supremum of Levy processes.
"""

import numpy as np
from scipy.special import betaln

from utils.errors import DomainError, SolverError

ITMAX = 10000
EPS = 1e-15
TINY = 1e-300


def _continued_fraction(a, b, x):
    """Continued fraction for I_x(a, b), modified Lentz evaluation."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < TINY:
        d = TINY
    d = 1.0 / d
    h = d
    for m in range(1, ITMAX + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < TINY:
            d = TINY
        c = 1.0 + aa / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < EPS:
            return h
    raise SolverError(f"incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}")


def beta_cdf(a, b, x):
    """
    Regularised incomplete beta function I_x(a, b).

    Args:
        a, b: Shape parameters > 0
        x: Point in [0, 1]

    Returns:
        I_x(a, b)
    """
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"beta shape parameters must be positive, got ({a}, {b})")
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    log_front = a * np.log(x) + b * np.log1p(-x) - betaln(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return float(np.exp(log_front) * _continued_fraction(a, b, x) / a)
    return float(1.0 - np.exp(log_front) * _continued_fraction(b, a, 1.0 - x) / b)


class BetaLaw:
    """Beta(a, b) on [0, 1]."""

    def __init__(self, a, b):
        if not (a > 0.0 and b > 0.0) or not (np.isfinite(a) and np.isfinite(b)):
            raise DomainError(f"beta shape parameters must be positive, got ({a}, {b})")
        self.a = float(a)
        self.b = float(b)

    @classmethod
    def arcsine(cls):
        """Beta(1/2, 1/2), the law of the Brownian supremum location."""
        return cls(0.5, 0.5)

    @classmethod
    def uniform(cls):
        return cls(1.0, 1.0)

    def cdf(self, x):
        if np.ndim(x) == 0:
            return beta_cdf(self.a, self.b, float(x))
        return np.array([beta_cdf(self.a, self.b, float(xi)) for xi in np.ravel(x)]).reshape(np.shape(x))

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide='ignore'):
            log_pdf = (self.a - 1.0) * np.log(x) + (self.b - 1.0) * np.log1p(-x) - betaln(self.a, self.b)
        out = np.exp(log_pdf)
        return float(out) if out.ndim == 0 else out

    @property
    def mean(self):
        return self.a / (self.a + self.b)

    @property
    def var(self):
        s = self.a + self.b
        return self.a * self.b / (s * s * (s + 1.0))

    def to_dict(self):
        return {'a': self.a, 'b': self.b}

    def __eq__(self, other):
        return isinstance(other, BetaLaw) and (self.a, self.b) == (other.a, other.b)

    def __repr__(self):
        return f"BetaLaw(a={self.a:.6g}, b={self.b:.6g})"


def beta_from_moments(mean, variance):
    """
    Method-of-moments Beta law for a mean and variance.

    Args:
        mean: m in (0, 1)
        variance: s^2 > 0 with s^2 < m (1 - m)

    Returns:
        BetaLaw(m k, (1 - m) k) with k = m (1 - m) / s^2 - 1
    """
    if not 0.0 < mean < 1.0:
        raise DomainError(f"mean must lie in (0, 1), got {mean}")
    if not variance > 0.0:
        raise DomainError("variance must be positive")
    spread = mean * (1.0 - mean)
    if spread <= variance:
        raise DomainError(f"no Beta law has mean {mean:g} and variance {variance:g}")
    k = spread / variance - 1.0
    return BetaLaw(mean * k, (1.0 - mean) * k)


def fit_beta_moments(samples):
    """
    Fit a Beta law to location samples by the method of moments.

    Args:
        samples: Array of values in [0, 1] (LocationSample lists accepted)

    Returns:
        BetaLaw
    """
    values = np.asarray([getattr(s, 'value', s) for s in samples], dtype=float)
    if values.size < 2:
        raise DomainError("need at least two samples")
    return beta_from_moments(float(values.mean()), float(values.var(ddof=1)))
