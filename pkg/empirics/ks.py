"""
One-sample Kolmogorov-Smirnov statistic and test.
"""

import numpy as np
from scipy import stats

from utils.defaults import Defaults
from utils.errors import DomainError


def _evaluate(cdf, x):
    try:
        values = np.asarray(cdf(x), dtype=float)
        if values.shape == x.shape:
            return values
    except (TypeError, ValueError):
        pass
    return np.array([float(cdf(xi)) for xi in x])


def ks_statistic(samples, cdf):
    """
    Kolmogorov distance between the empirical law of samples and cdf.

    Both one-sided suprema are taken at the sample points, so ties are
    handled through F_n(x-) and F_n(x).

    Args:
        samples: Sample values (LocationSample lists accepted)
        cdf: Nondecreasing callable, vectorised or scalar

    Returns:
        Tuple (D, n)
    """
    x = np.sort(np.asarray([getattr(s, 'value', s) for s in samples], dtype=float))
    n = x.size
    if n == 0:
        raise DomainError("ks_statistic needs at least one sample")
    f = _evaluate(cdf, x)
    ranks = np.arange(1, n + 1)
    d_plus = np.max(ranks / n - f)
    d_minus = np.max(f - (ranks - 1) / n)
    return float(max(d_plus, d_minus)), n


class KsVerdict:
    """Outcome of a Kolmogorov-Smirnov test."""

    def __init__(self, statistic, n, threshold, p_value, level):
        self.statistic = statistic
        self.n = n
        self.threshold = threshold
        self.p_value = p_value
        self.level = level

    @property
    def passed(self):
        return self.statistic <= self.threshold

    def to_dict(self):
        return {
            'statistic': self.statistic,
            'n': self.n,
            'threshold': self.threshold,
            'p_value': self.p_value,
            'level': self.level,
            'pass': self.passed,
        }

    def __repr__(self):
        return f"KsVerdict(D={self.statistic:.5f}, threshold={self.threshold:.5f}, passed={self.passed})"


def ks_test(samples, cdf, level=Defaults.KS_LEVEL):
    """
    Asymptotic Kolmogorov test of samples against cdf.

    Args:
        samples: Sample values
        cdf: Hypothesised distribution function
        level: Significance level

    Returns:
        KsVerdict with threshold K_{1-level} / sqrt(n)
    """
    d, n = ks_statistic(samples, cdf)
    root_n = np.sqrt(n)
    threshold = float(stats.kstwobign.isf(level) / root_n)
    p_value = float(stats.kstwobign.sf(d * root_n))
    return KsVerdict(d, n, threshold, p_value, level)
