"""
Spectral basis densities f_v and their closed-form integrals.

Every interior density of a supremum location of an ss,si process is a
sub-probability mixture of the two-branch densities

    f_v(t) = (1 - v) / Z(v) / (1 - t)   for t <= v
    f_v(t) = v / Z(v) / t               for t > v

with Z(v) = -v ln v - (1 - v) ln(1 - v).
"""

import numpy as np
from scipy.special import xlogy

from utils.defaults import Defaults
from utils.errors import DomainError


def _open_unit(x, name):
    """Array view of x, checked to lie strictly inside (0, 1)."""
    arr = np.asarray(x, dtype=float)
    if not np.all((arr > 0.0) & (arr < 1.0)):
        raise DomainError(f"{name} must lie strictly inside (0, 1)")
    return arr


def _closed_unit(x, name):
    arr = np.asarray(x, dtype=float)
    if not np.all((arr >= 0.0) & (arr <= 1.0)):
        raise DomainError(f"{name} must lie in [0, 1]")
    return arr


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def _entropy(v):
    # symmetric in v <-> 1 - v term by term
    return -xlogy(v, v) - xlogy(1.0 - v, 1.0 - v)


def entropy_z(v):
    """
    Binary entropy Z(v) = -v ln v - (1 - v) ln(1 - v) in nats.

    Args:
        v: Scalar or array in (0, 1)

    Returns:
        Z(v) > 0
    """
    return _out(_entropy(_open_unit(v, 'v')))


def _kernel(v, t):
    """f_v(t) without domain checks; bounded on the closed interval [0, 1]."""
    z = _entropy(v)
    return np.where(t <= v, (1.0 - v) / (z * (1.0 - t)), v / (z * t))


def basis_density(v, t):
    """
    Basis density f_v(t); the branch t <= v owns the kink.

    Args:
        v: Atom location(s) in (0, 1)
        t: Evaluation point(s) in (0, 1), broadcast against v

    Returns:
        f_v(t)
    """
    v = _open_unit(v, 'v')
    t = _open_unit(t, 't')
    return _out(_kernel(v, t))


def h_threshold(v, t):
    """
    Threshold h(v, t) with Psi([t, inf) x [1 - t, inf)) = {(u, v): u >= h(v, t)}.

    Args:
        v, t: Values in (0, 1)

    Returns:
        t if v < t, else v (1 - t) / (1 - v)
    """
    v = _open_unit(v, 'v')
    t = _open_unit(t, 't')
    return _out(np.where(v < t, t, v * (1.0 - t) / (1.0 - v)))


def _antiderivative(v, t):
    """F with F(0) = 0 and F' = f_v on [0, 1]."""
    z = _entropy(v)
    below = -(1.0 - v) * np.log1p(-np.minimum(t, v)) / z
    above = v * (np.log(np.maximum(t, v)) - np.log(v)) / z
    return below + np.where(t > v, above, 0.0)


def basis_integral(v, a=0.0, b=1.0):
    """
    Exact integral of f_v over [a, b].

    Args:
        v: Atom location(s) in (0, 1)
        a, b: Integration limits in [0, 1]

    Returns:
        Integral value(s); 1 for [0, 1]
    """
    v = _open_unit(v, 'v')
    a = _closed_unit(a, 'a')
    b = _closed_unit(b, 'b')
    return _out(_antiderivative(v, b) - _antiderivative(v, a))


def basis_mean(v):
    """
    Exact mean of f_v, -(1 - v) ln(1 - v) / Z(v).

    Args:
        v: Atom location(s) in (0, 1)

    Returns:
        Mean value(s)
    """
    v = _open_unit(v, 'v')
    return _out(-xlogy(1.0 - v, 1.0 - v) / _entropy(v))


def basis_density_reversible(v, t):
    """
    Symmetrised basis density for time-reversible processes, v in (0, 1/2].

        1 / (2 Z(v)) / (1 - t)               0 < t < v
        v / (2 Z(v)) * (1 / t + 1 / (1 - t))  v <= t < 1 - v
        1 / (2 Z(v)) / t                     1 - v <= t < 1

    Equals (f_v(t) + f_{1-v}(t)) / 2.

    Args:
        v: Atom location(s) in (0, 1/2]
        t: Evaluation point(s) in (0, 1)

    Returns:
        Density value(s)
    """
    v = _open_unit(v, 'v')
    if np.any(v > 0.5):
        raise DomainError("reversible basis requires v <= 1/2")
    t = _open_unit(t, 't')
    return _out(_reversible_kernel(v, t))


def _reversible_kernel(v, t):
    two_z = 2.0 * _entropy(v)
    left = 1.0 / (two_z * (1.0 - t))
    middle = v / two_z * (1.0 / t + 1.0 / (1.0 - t))
    right = 1.0 / (two_z * t)
    return np.where(t < v, left, np.where(t < 1.0 - v, middle, right))


def default_v_grid(n_atoms=None):
    """Atom locations j / (n_atoms + 1), j = 1 .. n_atoms; 199 midpoints j/200 by default."""
    n_atoms = Defaults.V_ATOMS if n_atoms is None else int(n_atoms)
    if n_atoms < 1:
        raise DomainError("need at least one atom")
    return np.arange(1, n_atoms + 1) / (n_atoms + 1.0)


def _moment_antiderivative(v, t):
    """G with G(0) = 0 and G'(t) = t f_v(t) on [0, 1]."""
    z = _entropy(v)
    low = np.minimum(t, v)
    below = (1.0 - v) * (-low - np.log1p(-low)) / z
    above = v * (np.maximum(t, v) - v) / z
    return below + np.where(t > v, above, 0.0)
