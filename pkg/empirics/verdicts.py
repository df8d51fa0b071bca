"""
Monte Carlo verdicts for the universal bounds and identities.
"""

import logging

import numpy as np
from scipy import stats

from utils.defaults import Defaults
from utils.errors import DomainError
from spectral.bounds import entropy_bound
from .density import sample_arrays

logger = logging.getLogger(__name__)


class Verdict:
    """Pass/fail outcome with the statistic it was decided on."""

    def __init__(self, name, statistic, threshold, passed, details=None):
        self.name = name
        self.statistic = float(statistic)
        self.threshold = float(threshold)
        self.passed = bool(passed)
        self.details = details or {}

    def to_dict(self):
        out = {
            'name': self.name,
            'statistic': self.statistic,
            'threshold': self.threshold,
            'pass': self.passed,
        }
        out.update(self.details)
        return out

    def __repr__(self):
        return f"Verdict({self.name}, statistic={self.statistic:.4g}, passed={self.passed})"


def bound_compliance(estimate, bound=entropy_bound, n_se=Defaults.N_SE):
    """
    Check a histogram against a density bound with sampling slack.

    A bin fails when f_hat > bound(centre) * (1 + n_se * SE / f_hat).

    Args:
        estimate: DensityEstimate
        bound: Callable bound on (0, 1), e.g. entropy_bound or reversible_bound
        n_se: Standard errors of slack

    Returns:
        Verdict whose statistic is the largest f_hat / bound ratio
    """
    heights = estimate.heights
    occupied = heights > 0.0
    limit = np.asarray(bound(estimate.centers), dtype=float)
    allowed = limit * (1.0 + n_se * estimate.relative_error)
    failing = occupied & (heights > allowed)
    ratio = float((heights / limit).max())
    bad = estimate.centers[failing]
    if bad.size:
        logger.info("%s exceeded in %d bins, first at t=%.4f", getattr(bound, '__name__', 'bound'),
                    bad.size, bad[0])
    return Verdict(
        getattr(bound, '__name__', 'bound'), ratio, 1.0, not failing.any(),
        {'violations': int(failing.sum()), 'bins': int(heights.size),
         'failing_centers': bad.tolist(), 'n_se': n_se},
    )


def frame_identity_check(nu, estimate, t_values=Defaults.FRAME_T_VALUES,
                         n_se=Defaults.N_SE, rel_tol=None):
    """
    Compare nu([t, inf) x [1 - t, inf)) with the location density at t.

    Args:
        nu: EmpiricalNu holding the pairs (t, 1 - t)
        estimate: DensityEstimate of the supremum location on [0, 1]
        t_values: Points t to compare
        n_se: Combined standard errors allowed
        rel_tol: Relative allowance; the looser of it and the SE allowance
                 applies at each t, SE only if None

    Returns:
        Verdict whose statistic is the worst gap / allowance ratio, passing
        at or below 1
    """
    t_values = np.asarray(t_values, dtype=float)
    if np.any((t_values <= 0.0) | (t_values >= 1.0)):
        raise DomainError("frame identity is checked strictly inside (0, 1)")
    index = [nu.index_of(t, 1.0 - t) for t in t_values]
    nu_values = nu.values[index]
    nu_se = nu.standard_error[index]
    f_hat = estimate.height_at(t_values)
    f_se = estimate.se_at(t_values)
    gap = np.abs(nu_values - f_hat)
    allowed = n_se * np.sqrt(nu_se ** 2 + f_se ** 2)
    if rel_tol is not None:
        allowed = np.maximum(allowed, rel_tol * f_hat)
    tiny = np.finfo(float).tiny
    relative = gap / np.maximum(f_hat, tiny)
    ratio = gap / np.maximum(allowed, tiny)
    rows = [
        {'t': float(t), 'nu': float(a), 'f_hat': float(b), 'allowed': float(c)}
        for t, a, b, c in zip(t_values, nu_values, f_hat, allowed)
    ]
    return Verdict('frame_identity', float(ratio.max()), 1.0, bool(np.all(gap <= allowed)),
                   {'points': rows, 'max_relative_deviation': float(relative.max()),
                    'rel_tol': rel_tol, 'n_se': n_se})


def reversibility_check(samples, level=Defaults.KS_LEVEL):
    """
    Two-sample test of tau against 1 - tau on disjoint halves.

    Args:
        samples: Location samples in [0, 1]
        level: Significance level

    Returns:
        Verdict on the two-sample KS statistic, passed when p >= level
    """
    values, _, _ = sample_arrays(samples)
    if values.size < 4:
        raise DomainError("reversibility check needs at least four samples")
    half = values.size // 2
    result = stats.ks_2samp(values[:half], 1.0 - values[half:2 * half])
    return Verdict('reversibility', result.statistic, level, result.pvalue >= level,
                   {'p_value': float(result.pvalue), 'n': int(2 * half)})
