"""
Per-replicate tasks for the worker pool.

Each task maps one PathGrid to a small, picklable result so that only
counts and samples travel back from the workers.
"""

from locations.extractors import LOCATORS
from locations.local_max import scan_local_maxima
from .nu import UNIT_RANGE, nu_counts


class LocationTask:
    """Location of the supremum, largest jump or largest drawdown over [a, b]."""

    def __init__(self, kind='supremum', sub_interval=None):
        self.kind = kind
        self.sub_interval = sub_interval

    def __call__(self, path):
        return LOCATORS[self.kind](path, self.sub_interval)


class NuTask:
    """Rectangle counts over s in [0, 1) plus the supremum location on [0, 1]."""

    def __init__(self, thresholds):
        self.thresholds = thresholds

    def __call__(self, path):
        cloud = scan_local_maxima(path, UNIT_RANGE)
        counts, dropped = nu_counts(cloud, self.thresholds)
        return counts, dropped, LOCATORS['supremum'](path, UNIT_RANGE)


class CloudTask:
    """Local maxima with centres in [0, 1)."""

    def __call__(self, path):
        return scan_local_maxima(path, UNIT_RANGE)
