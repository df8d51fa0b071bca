"""
Supremum and largest-jump locations of sampled paths.

Sampled values already represent attained levels, so the upper
semicontinuous modification X(t-) v X(t) is the identity on a grid.
"""

import numpy as np

from utils.errors import DomainError
from .location_sample import LocationSample


def _interval(path, sub_interval):
    grid = path.grid
    if sub_interval is None:
        a, b = grid.t_start, grid.t_end
    else:
        a, b = sub_interval
    lo, hi = grid.index_range(a, b)
    return a, b, lo, hi


def _rescale(path, index, a, b):
    t = path.grid.t_start + index * path.grid.step
    return min(max((t - a) / (b - a), 0.0), 1.0)


def argmax_location(path, sub_interval=None):
    """
    Leftmost location of the maximum over [a, b].

    Args:
        path: PathGrid
        sub_interval: (a, b) inside the grid window, default the whole window

    Returns:
        LocationSample of kind 'supremum'
    """
    a, b, lo, hi = _interval(path, sub_interval)
    segment = path.values[lo:hi + 1]
    k = int(np.argmax(segment))  # first occurrence = leftmost
    return LocationSample(
        _rescale(path, lo + k, a, b), 'supremum',
        at_zero=(k == 0), at_one=(k == segment.size - 1),
    )


def _jump_location(path, sub_interval, kind):
    a, b, lo, hi = _interval(path, sub_interval)
    if hi - lo < 1:
        raise DomainError("need at least two grid points in the sub-interval")
    increments = np.diff(path.values[lo:hi + 1])
    if kind == 'largest_jump':
        k = int(np.argmax(np.abs(increments)))
    else:
        k = int(np.argmax(-increments))
    index = lo + k + 1  # the increment values[i] - values[i-1] sits at grid point i
    # a jump falls inside a grid cell, so neither end carries a point mass
    return LocationSample(_rescale(path, index, a, b), kind)


def largest_jump_location(path, sub_interval=None):
    """
    Leftmost location of the largest absolute grid increment over [a, b].

    Grid increments stand in for jumps |X(t) - X(t-)|.

    Args:
        path: PathGrid
        sub_interval: (a, b) inside the grid window

    Returns:
        LocationSample of kind 'largest_jump'
    """
    return _jump_location(path, sub_interval, 'largest_jump')


def largest_drawdown_location(path, sub_interval=None):
    """
    Leftmost location of the largest downward grid increment over [a, b].

    Args:
        path: PathGrid
        sub_interval: (a, b) inside the grid window

    Returns:
        LocationSample of kind 'largest_drawdown'
    """
    return _jump_location(path, sub_interval, 'largest_drawdown')


LOCATORS = {
    'supremum': argmax_location,
    'largest_jump': largest_jump_location,
    'largest_drawdown': largest_drawdown_location,
}
