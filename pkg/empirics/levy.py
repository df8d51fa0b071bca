"""
Product-form check of the local-maxima measure for Levy processes.

For a Levy process nu((l, inf) x (r, inf)) = C l^-c1 r^-c2 with
c1 + c2 = 1, and the supremum location is Beta(1 - c1, 1 - c2).
"""

import logging

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError, InsufficientDataError
from .beta_law import BetaLaw
from .nu import UNIT_RANGE, _to_cloud, estimate_nu, threshold_grid

logger = logging.getLogger(__name__)

MIN_CELL_COUNT = 10


class LevyFactorizationReport:
    """Exponents of the joint power-law fit and product-form diagnostics."""

    def __init__(self, c1, c2, log_scale, max_relative_error, mean_relative_error,
                 max_interaction, cells_used, n_points, marginal_c1, marginal_c2):
        self.c1 = c1
        self.c2 = c2
        self.log_scale = log_scale
        self.max_relative_error = max_relative_error
        self.mean_relative_error = mean_relative_error
        self.max_interaction = max_interaction
        self.cells_used = cells_used
        self.n_points = n_points
        self.marginal_c1 = marginal_c1
        self.marginal_c2 = marginal_c2

    @property
    def exponent_sum(self):
        return self.c1 + self.c2

    def predicted_law(self):
        """Beta(1 - c1, 1 - c2) implied by the exponents."""
        return BetaLaw(1.0 - self.c1, 1.0 - self.c2)

    def to_dict(self):
        return {
            'c1': self.c1,
            'c2': self.c2,
            'exponent_sum': self.exponent_sum,
            'marginal_c1': self.marginal_c1,
            'marginal_c2': self.marginal_c2,
            'max_relative_error': self.max_relative_error,
            'mean_relative_error': self.mean_relative_error,
            'max_interaction': self.max_interaction,
            'cells_used': self.cells_used,
            'n_points': self.n_points,
        }

    def __repr__(self):
        return f"LevyFactorizationReport(c1={self.c1:.4f}, c2={self.c2:.4f}, cells={self.cells_used})"


def _default_window(cloud):
    edge = min(-cloud.window[0], cloud.window[1] - 1.0)
    if not (cloud.grid_step > 0.0 and np.isfinite(edge) and edge > 0.0):
        raise DomainError("threshold windows are required for clouds without a finite window")
    return (Defaults.TAIL_FLOOR_STEPS * cloud.grid_step, Defaults.TAIL_CEILING_FRACTION * edge)


def _marginal_slope(log_x, log_y, mask):
    if np.count_nonzero(mask) < 2:
        return float('nan')
    return float(-np.polyfit(log_x[mask], log_y[mask], 1)[0])


def levy_factorization_check(point_clouds, l_window=None, r_window=None, n_grid=8,
                             min_points=Defaults.MIN_LEVY_POINTS):
    """
    Fit nu((l, inf) x (r, inf)) = C l^-c1 r^-c2 on a log-spaced threshold grid.

    Args:
        point_clouds: Per-replicate LocalMaxCloud objects or point lists
        l_window, r_window: Threshold ranges; grid floor to a quarter of the
                            window edge if None
        n_grid: Thresholds per axis
        min_points: Minimum number of uncensored points with centre in [0, 1)

    Returns:
        LevyFactorizationReport
    """
    clouds = [_to_cloud(c) for c in point_clouds]
    if not clouds:
        raise InsufficientDataError("no point clouds")
    n_points = sum(int(np.count_nonzero(c.in_range(UNIT_RANGE).uncensored)) for c in clouds)
    if n_points < min_points:
        raise InsufficientDataError(f"{n_points} uncensored points, need {min_points}")
    if l_window is None or r_window is None:
        default = _default_window(clouds[0])
        l_window = l_window or default
        r_window = r_window or default

    l_grid = np.geomspace(l_window[0], l_window[1], n_grid)
    r_grid = np.geomspace(r_window[0], r_window[1], n_grid)
    nu = estimate_nu(clouds, threshold_grid(l_grid, r_grid))
    counts = nu.counts.reshape(n_grid, n_grid)
    values = nu.values.reshape(n_grid, n_grid)

    usable = counts >= MIN_CELL_COUNT
    if np.count_nonzero(usable) < 3:
        raise InsufficientDataError("fewer than three threshold cells with enough points")
    log_l, log_r = np.meshgrid(np.log(l_grid), np.log(r_grid), indexing='ij')
    weight = np.sqrt(counts[usable])
    design = np.column_stack([np.ones(weight.size), -log_l[usable], -log_r[usable]])
    target = np.log(values[usable])
    coef, *_ = np.linalg.lstsq(design * weight[:, None], target * weight, rcond=None)
    log_scale, c1, c2 = (float(x) for x in coef)

    fitted = np.exp(design @ coef)
    relative = np.abs(values[usable] - fitted) / values[usable]
    with np.errstate(divide='ignore', invalid='ignore'):
        interaction = values * values[0, 0] / (values[:, :1] * values[:1, :]) - 1.0
    if usable[0, 0]:
        interaction = np.abs(interaction[usable & usable[:, :1] & usable[:1, :]])
    else:
        interaction = np.empty(0)
    row, col = counts[:, 0] >= MIN_CELL_COUNT, counts[0, :] >= MIN_CELL_COUNT
    floor = np.finfo(float).tiny

    report = LevyFactorizationReport(
        c1=c1, c2=c2, log_scale=log_scale,
        max_relative_error=float(relative.max()),
        mean_relative_error=float(relative.mean()),
        max_interaction=float(interaction.max()) if interaction.size else 0.0,
        cells_used=int(np.count_nonzero(usable)),
        n_points=n_points,
        marginal_c1=_marginal_slope(np.log(l_grid), np.log(np.maximum(values[:, 0], floor)), row),
        marginal_c2=_marginal_slope(np.log(r_grid), np.log(np.maximum(values[0, :], floor)), col),
    )
    logger.info("levy factorization: %s, sum %.4f", report, report.exponent_sum)
    return report
