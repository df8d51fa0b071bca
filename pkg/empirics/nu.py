"""
Monte Carlo estimate of the local-maxima mean measure on survival rectangles.

nu([t, inf) x [r, inf)) is the mean number, per unit time, of local maxima
whose left return distance is at least t and right return distance at
least r. Counts are taken over centres s in [0, 1).
"""

import logging

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError, InsufficientDataError
from locations.local_max import LocalMaxCloud

logger = logging.getLogger(__name__)

UNIT_RANGE = (0.0, 1.0)


def threshold_grid(t_values, r_values):
    """All pairs (t, r) of a product grid, t varying slowest."""
    t, r = np.meshgrid(np.asarray(t_values, float), np.asarray(r_values, float), indexing='ij')
    return np.column_stack([t.ravel(), r.ravel()])


def frame_thresholds(t_values):
    """Pairs (t, 1 - t) for the frame identity."""
    t = np.asarray(t_values, dtype=float)
    return np.column_stack([t, 1.0 - t])


def _as_thresholds(thresholds):
    pairs = np.atleast_2d(np.asarray(thresholds, dtype=float))
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise DomainError("thresholds must be (t, r) pairs")
    if not np.all(np.isfinite(pairs)) or np.any(pairs <= 0.0):
        raise DomainError("thresholds must be positive and finite")
    return pairs


def _to_cloud(points):
    if isinstance(points, LocalMaxCloud):
        return points
    return LocalMaxCloud.from_points(points, 0.0, (-np.inf, np.inf))


def _side(value, censored, edge, threshold):
    """
    Per-coordinate status against thresholds: (surely >=, undecided).

    A censored coordinate is known to exceed its edge distance only.
    """
    value = value[:, None]
    edge = edge[:, None]
    censored = censored[:, None]
    above = np.where(censored, edge >= threshold, value >= threshold)
    undecided = censored & (edge < threshold)
    return above, undecided


def nu_counts(cloud, thresholds, s_range=UNIT_RANGE):
    """
    Rectangle counts of one replicate.

    Args:
        cloud: LocalMaxCloud or list of LocalMaxPoint
        thresholds: Array of (t, r) pairs
        s_range: Centres counted, half-open [lo, hi)

    Returns:
        Tuple (counts, dropped), one integer per threshold pair
    """
    pairs = _as_thresholds(thresholds)
    cloud = _to_cloud(cloud).in_range(s_range)
    t = pairs[None, :, 0]
    r = pairs[None, :, 1]
    l_above, l_open = _side(cloud.l, cloud.l_censored, cloud.w_l, t)
    r_above, r_open = _side(cloud.r, cloud.r_censored, cloud.w_r, r)
    counted = l_above & r_above
    ruled_out = (~l_above & ~l_open) | (~r_above & ~r_open)
    dropped = (l_open | r_open) & ~ruled_out
    return counted.sum(axis=0), dropped.sum(axis=0)


class EmpiricalNu:
    """
    Replicate-averaged rectangle counts; mergeable across workers.
    """

    def __init__(self, thresholds, counts=None, sum_sq=None, dropped=None,
                 n_replicates=0, unit_length=1.0):
        self.thresholds = _as_thresholds(thresholds)
        k = self.thresholds.shape[0]
        self.counts = np.zeros(k, dtype=np.int64) if counts is None else np.asarray(counts, np.int64)
        self.sum_sq = np.zeros(k, dtype=np.int64) if sum_sq is None else np.asarray(sum_sq, np.int64)
        self.dropped = np.zeros(k, dtype=np.int64) if dropped is None else np.asarray(dropped, np.int64)
        self.n_replicates = int(n_replicates)
        self.unit_length = float(unit_length)

    def add(self, counts, dropped):
        """Fold in the counts of one replicate."""
        counts = np.asarray(counts, dtype=np.int64)
        self.counts += counts
        self.sum_sq += counts * counts
        self.dropped += np.asarray(dropped, dtype=np.int64)
        self.n_replicates += 1
        return self

    def merge(self, other):
        """Combine two estimates over the same thresholds."""
        if not np.array_equal(self.thresholds, other.thresholds):
            raise DomainError("cannot merge estimates over different thresholds")
        return EmpiricalNu(
            self.thresholds, self.counts + other.counts, self.sum_sq + other.sum_sq,
            self.dropped + other.dropped, self.n_replicates + other.n_replicates,
            self.unit_length,
        )

    @property
    def values(self):
        """nu estimates, one per threshold pair."""
        if self.n_replicates == 0:
            raise InsufficientDataError("no replicates folded in")
        return self.counts / (self.n_replicates * self.unit_length)

    @property
    def standard_error(self):
        n = self.n_replicates
        if n < 2:
            return np.full(self.counts.shape, np.inf)
        mean = self.counts / n
        var = np.maximum(self.sum_sq / n - mean ** 2, 0.0) * n / (n - 1)
        return np.sqrt(var / n) / self.unit_length

    @property
    def drop_rate(self):
        """Dropped points per replicate, a bound on the censoring bias."""
        return self.dropped / max(self.n_replicates, 1)

    def index_of(self, t, r):
        """Position of a stored threshold pair."""
        hit = np.nonzero(np.isclose(self.thresholds[:, 0], t) & np.isclose(self.thresholds[:, 1], r))[0]
        if hit.size == 0:
            raise DomainError(f"threshold ({t}, {r}) not estimated")
        return int(hit[0])

    def value(self, t, r):
        """Estimate at a stored threshold pair."""
        return float(self.values[self.index_of(t, r)])

    def to_rows(self):
        """CSV rows (t, r, nu, se, dropped)."""
        return [
            (float(a), float(b), float(v), float(e), int(d))
            for (a, b), v, e, d in zip(self.thresholds, self.values, self.standard_error, self.dropped)
        ]

    def __repr__(self):
        return f"EmpiricalNu({self.thresholds.shape[0]} thresholds, replicates={self.n_replicates})"


def check_threshold_floor(thresholds, grid_step, floor_steps=Defaults.GRID_FLOOR_STEPS):
    """Reject thresholds within floor_steps grid steps of zero."""
    pairs = _as_thresholds(thresholds)
    floor = floor_steps * grid_step
    if grid_step > 0.0 and pairs.min() < floor * (1.0 - 1e-9):
        raise DomainError(
            f"thresholds must be at least {floor_steps} grid steps ({floor:g}), got {pairs.min():g}"
        )
    return pairs


def estimate_nu(point_clouds, thresholds, s_range=UNIT_RANGE):
    """
    Estimate nu on survival rectangles from per-replicate point clouds.

    Args:
        point_clouds: One LocalMaxCloud (or LocalMaxPoint list) per replicate,
                      all from the same window
        thresholds: Array of (t, r) pairs, at least two grid steps each
        s_range: Centres counted, half-open; its length is the time unit

    Returns:
        EmpiricalNu
    """
    clouds = [_to_cloud(c) for c in point_clouds]
    if not clouds:
        raise InsufficientDataError("no point clouds")
    steps = {c.grid_step for c in clouds}
    windows = {c.window for c in clouds}
    if len(steps) > 1 or len(windows) > 1:
        raise DomainError("point clouds come from different windows")
    pairs = check_threshold_floor(thresholds, steps.pop())
    estimate = EmpiricalNu(pairs, unit_length=s_range[1] - s_range[0])
    for cloud in clouds:
        estimate.add(*nu_counts(cloud, pairs, s_range))
    if estimate.dropped.any():
        logger.warning("censoring dropped %d point-rectangle pairs", int(estimate.dropped.sum()))
    return estimate
