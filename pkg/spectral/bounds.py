"""
Universal upper bounds for the density of the supremum location.
"""

import numpy as np

from spectral.basis import _entropy, _open_unit, _out


def entropy_bound(t):
    """
    Entropy bound f(t) <= 1 / Z(t), valid for every ss,si process.

    Args:
        t: Scalar or array in (0, 1)

    Returns:
        1 / Z(t)
    """
    t = _open_unit(t, 't')
    return _out(1.0 / _entropy(t))


def reversible_bound(t):
    """
    Sharper bound for time-reversible processes.

    Args:
        t: Scalar or array in (0, 1)

    Returns:
        1 / (2 (1 - t) Z(t)) for t < 1/2, 1 / (2 t Z(t)) otherwise
    """
    t = _open_unit(t, 't')
    z = _entropy(t)
    return _out(np.where(t < 0.5, 1.0 / (2.0 * (1.0 - t) * z), 1.0 / (2.0 * t * z)))


def stationary_bound(t):
    """Bound max(1/t, 1/(1-t)) that needs stationary increments only."""
    t = _open_unit(t, 't')
    return _out(np.maximum(1.0 / t, 1.0 / (1.0 - t)))


def improvement_factor(t):
    """
    How much self-similarity tightens the bound at t.

    Returns:
        stationary_bound(t) / entropy_bound(t); equals 2 ln 2 at t = 1/2
    """
    t = _open_unit(t, 't')
    return _out(np.maximum(1.0 / t, 1.0 / (1.0 - t)) * _entropy(t))
