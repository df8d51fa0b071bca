"""
Envelopes for E g(tau) over all ss,si processes.

Since f is a sub-probability mixture of the f_v plus boundary mass, every
expectation E g(tau) lies between the extremes of g(0), g(1) and the
basis integrals of g.
"""

import logging

import numpy as np
from scipy import integrate

from utils.errors import DomainError
from spectral.basis import (
    _antiderivative,
    _closed_unit,
    _kernel,
    _moment_antiderivative,
    _open_unit,
    default_v_grid,
)

logger = logging.getLogger(__name__)


def _sampled_integrals(g_values, v):
    """
    Exact integrals of the piecewise linear interpolant of g against each f_v.

    Args:
        g_values: g on the uniform grid k / (m - 1), k = 0 .. m - 1
        v: Atom locations

    Returns:
        Array of integrals, one per v
    """
    t = np.linspace(0.0, 1.0, g_values.size)
    slope = np.diff(g_values) / np.diff(t)
    offset = g_values[:-1] - slope * t[:-1]
    mass = np.diff(_antiderivative(v[:, None], t[None, :]), axis=1)
    moment = np.diff(_moment_antiderivative(v[:, None], t[None, :]), axis=1)
    return mass @ offset + moment @ slope


def _callable_integrals(g, v, breakpoints):
    out = np.empty(v.size)
    for j, vj in enumerate(v):
        points = sorted({float(vj), *breakpoints})
        value, _ = integrate.quad(
            lambda x: g(x) * _kernel(vj, x), 0.0, 1.0, points=points, limit=200
        )
        out[j] = value
    return out


def expectation_bounds(g, v_grid=None, breakpoints=()):
    """
    Lower and upper bounds for E g(tau).

    Args:
        g: Callable on [0, 1], or samples of g on a uniform grid over [0, 1]
           including both end points (piecewise linear in between)
        v_grid: Atom locations to scan; default_v_grid() if None
        breakpoints: Discontinuities of a callable g, passed to the quadrature

    Returns:
        Tuple (lower, upper)
    """
    v = default_v_grid() if v_grid is None else _open_unit(np.atleast_1d(v_grid), 'v_grid')
    if callable(g):
        g0, g1 = float(g(0.0)), float(g(1.0))
        if not (np.isfinite(g0) and np.isfinite(g1)):
            raise DomainError("g must be finite on [0, 1]")
        integrals = _callable_integrals(g, v, breakpoints)
    else:
        samples = np.asarray(g, dtype=float)
        if samples.ndim != 1 or samples.size < 2:
            raise DomainError("g samples must cover [0, 1] with at least two points")
        if not np.all(np.isfinite(samples)):
            raise DomainError("g must be finite on [0, 1]")
        g0, g1 = float(samples[0]), float(samples[-1])
        integrals = _sampled_integrals(samples, v)
    if not np.all(np.isfinite(integrals)):
        raise DomainError("g is not integrable against the basis")
    lower = min(g0, g1, float(integrals.min()))
    upper = max(g0, g1, float(integrals.max()))
    logger.debug("expectation bounds over %d atoms: [%g, %g]", v.size, lower, upper)
    return lower, upper


def interval_probability_bound(c, d, v_grid=None):
    """
    Upper bound on P(tau in [c, d]) valid for every ss,si process.

    Args:
        c, d: Interval end points, 0 <= c <= d <= 1
        v_grid: Atom locations to scan; default_v_grid() if None

    Returns:
        max(1{0 in [c, d]}, 1{1 in [c, d]}, max_v int_c^d f_v)
    """
    c = float(_closed_unit(c, 'c'))
    d = float(_closed_unit(d, 'd'))
    if c > d:
        raise DomainError(f"need c <= d, got [{c}, {d}]")
    if c == 0.0 or d == 1.0:
        return 1.0
    v = default_v_grid() if v_grid is None else _open_unit(np.atleast_1d(v_grid), 'v_grid')
    parts = _antiderivative(v, d) - _antiderivative(v, c)
    return float(min(1.0, parts.max()))
