"""
Power-law tail of the u-marginal of the local-maxima measure.

With u = l and v = l / (l + r), the measure has density c u^-2 in u for
each v, so the u-survival decays like u^-1.
"""

import logging

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError, InsufficientDataError
from .nu import UNIT_RANGE, _to_cloud

logger = logging.getLogger(__name__)


def log_binned_slope(x, lo, hi, n_bins=20):
    """
    Log-log slope of the density of x on [lo, hi] from a log-binned histogram.

    Args:
        x: Positive samples
        lo, hi: Fit window, 0 < lo < hi
        n_bins: Log-spaced bins across the window

    Returns:
        Tuple (slope, intercept, points_used)
    """
    if not 0.0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got ({lo}, {hi})")
    edges = np.geomspace(lo, hi, n_bins + 1)
    counts, _ = np.histogram(x, bins=edges)
    centers = np.sqrt(edges[:-1] * edges[1:])
    keep = counts > 0
    if np.count_nonzero(keep) < 3:
        raise InsufficientDataError("fewer than three occupied bins in the fit window")
    density = counts[keep] / np.diff(edges)[keep]
    slope, intercept = np.polyfit(np.log(centers[keep]), np.log(density), 1, w=np.sqrt(counts[keep]))
    return float(slope), float(intercept), int(counts.sum())


def default_u_window(grid_step, window_edge, v_range=Defaults.TAIL_V_RANGE):
    """
    Fit window for u that keeps both return distances resolvable.

    The floor keeps r = u (1 - v) / v above TAIL_FLOOR_STEPS grid steps,
    the ceiling keeps r below a quarter of the edge distance.
    """
    v_lo, v_hi = v_range
    lo = Defaults.TAIL_FLOOR_STEPS * grid_step * max(1.0, v_hi / (1.0 - v_hi))
    hi = Defaults.TAIL_CEILING_FRACTION * window_edge * min(1.0, v_lo / (1.0 - v_lo))
    return lo, hi


def u_marginal_tail_exponent(point_clouds, v_range=Defaults.TAIL_V_RANGE, u_window=None,
                             min_points=Defaults.MIN_TAIL_POINTS, n_bins=20):
    """
    Estimate the survival exponent of the u-marginal.

    Uncensored maxima with centre in [0, 1) and v inside v_range are used.
    The exponent is read off the log-binned density of u, whose slope is
    -(exponent + 1), in place of a log-log fit of the empirical survival
    curve: dropping censored points thins the survival curve at large u,
    while the density inside the fit window is unaffected by them.

    Args:
        point_clouds: Per-replicate LocalMaxCloud objects or point lists
        v_range: Range of v = l / (l + r) kept
        u_window: (lo, hi) fit window; derived from the grid if None
        min_points: Minimum number of points inside the window
        n_bins: Log-spaced bins across the window

    Returns:
        Estimated survival exponent (about 1 for ss,si processes)
    """
    clouds = [_to_cloud(c) for c in point_clouds]
    if not clouds:
        raise InsufficientDataError("no point clouds")
    u_parts = []
    for cloud in clouds:
        kept = cloud.in_range(UNIT_RANGE)
        kept = kept.subset(kept.uncensored)
        v = kept.l / (kept.l + kept.r)
        inside = (v >= v_range[0]) & (v <= v_range[1])
        u_parts.append(kept.l[inside])
    u = np.concatenate(u_parts) if u_parts else np.empty(0)

    if u_window is None:
        step = clouds[0].grid_step
        edge = min(-clouds[0].window[0], clouds[0].window[1] - 1.0)
        if not (step > 0.0 and np.isfinite(edge) and edge > 0.0):
            raise DomainError("u_window is required for clouds without a finite window")
        u_window = default_u_window(step, edge, v_range)
    lo, hi = u_window
    in_window = u[(u >= lo) & (u <= hi)]
    if in_window.size < min_points:
        raise InsufficientDataError(
            f"{in_window.size} points in the u window [{lo:g}, {hi:g}], need {min_points}"
        )
    slope, _, used = log_binned_slope(in_window, lo, hi, n_bins)
    exponent = -slope - 1.0
    logger.info("u-tail exponent %.4f from %d points on [%g, %g]", exponent, used, lo, hi)
    return exponent
