"""
Strict local maxima with left/right return distances.

For a local maximum s, l(s) is the distance back to the first point at or
above X(s) and r(s) the distance forward. Where the finite window ends
before such a point, the distance is censored at the edge distance scanned.
"""

import numpy as np

from utils.errors import CensoredPointError
from .return_scan import SparseMax


class LocalMaxPoint:
    """A local maximum s with its return distances (l, r)."""

    def __init__(self, s, l, r, l_censored=False, r_censored=False, w_l=None, w_r=None):
        """
        Initialize a point.

        Args:
            s: Location of the maximum (window time)
            l: Left return distance, or the scanned edge distance if censored
            r: Right return distance, or the scanned edge distance if censored
            l_censored: True if no return point exists to the left in the window
            r_censored: True if no return point exists to the right in the window
            w_l: Distance from s to the left window edge
            w_r: Distance from s to the right window edge
        """
        self.s = float(s)
        self.l = float(l)
        self.r = float(r)
        self.l_censored = bool(l_censored)
        self.r_censored = bool(r_censored)
        self.w_l = self.l if w_l is None else float(w_l)
        self.w_r = self.r if w_r is None else float(w_r)

    @property
    def censored(self):
        return self.l_censored or self.r_censored

    def to_row(self):
        """CSV row (s, l, l_censored, r, r_censored)."""
        return (self.s, self.l, self.l_censored, self.r, self.r_censored)

    def __eq__(self, other):
        if not isinstance(other, LocalMaxPoint):
            return False
        return self.to_row() == other.to_row()

    def __repr__(self):
        l_txt = f"CENSORED({self.l:g})" if self.l_censored else f"{self.l:g}"
        r_txt = f"CENSORED({self.r:g})" if self.r_censored else f"{self.r:g}"
        return f"LocalMaxPoint(s={self.s:g}, l={l_txt}, r={r_txt})"


class LocalMaxCloud:
    """Array-backed collection of local maxima from one path."""

    COLUMNS = ('s', 'l', 'l_censored', 'r', 'r_censored')

    def __init__(self, s, l, r, l_censored, r_censored, w_l, w_r, grid_step, window):
        """
        Initialize a cloud.

        Args:
            s, l, r: Float arrays of locations and return distances
            l_censored, r_censored: Boolean arrays of censoring flags
            w_l, w_r: Float arrays of edge distances
            grid_step: Step of the grid the points were extracted on
            window: (t_start, t_end) of that grid
        """
        self.s = np.asarray(s, dtype=float)
        self.l = np.asarray(l, dtype=float)
        self.r = np.asarray(r, dtype=float)
        self.l_censored = np.asarray(l_censored, dtype=bool)
        self.r_censored = np.asarray(r_censored, dtype=bool)
        self.w_l = np.asarray(w_l, dtype=float)
        self.w_r = np.asarray(w_r, dtype=float)
        self.grid_step = float(grid_step)
        self.window = (float(window[0]), float(window[1]))

    @classmethod
    def from_points(cls, points, grid_step, window):
        """Build a cloud from LocalMaxPoint objects."""
        points = list(points)
        return cls(
            [p.s for p in points], [p.l for p in points], [p.r for p in points],
            [p.l_censored for p in points], [p.r_censored for p in points],
            [p.w_l for p in points], [p.w_r for p in points],
            grid_step, window,
        )

    @property
    def uncensored(self):
        return ~(self.l_censored | self.r_censored)

    def subset(self, mask):
        """Cloud restricted to the points where mask is True."""
        return LocalMaxCloud(
            self.s[mask], self.l[mask], self.r[mask],
            self.l_censored[mask], self.r_censored[mask],
            self.w_l[mask], self.w_r[mask], self.grid_step, self.window,
        )

    def in_range(self, s_range):
        """Points whose location lies in [s_lo, s_hi)."""
        lo, hi = s_range
        return self.subset((self.s >= lo) & (self.s < hi))

    def points(self):
        """The cloud as a list of LocalMaxPoint."""
        return [
            LocalMaxPoint(*fields) for fields in zip(
                self.s, self.l, self.r, self.l_censored, self.r_censored, self.w_l, self.w_r
            )
        ]

    def to_rows(self, replicate=None):
        """CSV rows in COLUMNS order, censor flags as 0/1, led by the replicate if given."""
        rows = zip(self.s.tolist(), self.l.tolist(), self.l_censored.astype(int).tolist(),
                   self.r.tolist(), self.r_censored.astype(int).tolist())
        if replicate is None:
            return list(rows)
        return [(replicate,) + row for row in rows]

    def __len__(self):
        return self.s.size

    def __iter__(self):
        return iter(self.points())

    def __repr__(self):
        return f"LocalMaxCloud({len(self)} points, step={self.grid_step:g}, window={self.window})"


def scan_local_maxima(path, s_range=None):
    """
    Strict local maxima of a path as a LocalMaxCloud.

    Args:
        path: PathGrid with at least 3 points
        s_range: Optional (lo, hi); only maxima with lo <= s < hi are scanned

    Returns:
        LocalMaxCloud
    """
    values = path.values
    grid = path.grid
    step = grid.step
    n = values.size
    window = (grid.t_start, grid.t_end)

    if n < 3:
        empty = np.empty(0)
        return LocalMaxCloud(empty, empty, empty, empty.astype(bool), empty.astype(bool),
                             empty, empty, step, window)

    interior = values[1:-1]
    idx = np.nonzero((interior > values[:-2]) & (interior > values[2:]))[0] + 1
    if s_range is not None:
        s_all = grid.t_start + idx * step
        idx = idx[(s_all >= s_range[0]) & (s_all < s_range[1])]

    table = SparseMax(values)
    left = table.left_return(idx)
    right = table.right_return(idx)

    w_l = idx * step
    w_r = (n - 1 - idx) * step
    l_censored = left < 0
    r_censored = right < 0
    l = np.where(l_censored, w_l, (idx - left) * step)
    r = np.where(r_censored, w_r, (right - idx) * step)
    s = grid.t_start + idx * step
    return LocalMaxCloud(s, l, r, l_censored, r_censored, w_l, w_r, step, window)


def extract_local_maxima(path):
    """
    All strict local maxima of a path with their return distances.

    Args:
        path: PathGrid

    Returns:
        List of LocalMaxPoint in increasing s
    """
    return scan_local_maxima(path).points()


def psi_transform(point):
    """
    Map (l, r) to (u, v) = (l, l / (l + r)).

    Args:
        point: Uncensored LocalMaxPoint

    Returns:
        Tuple (u, v) with v in (0, 1)
    """
    if point.censored:
        raise CensoredPointError(f"cannot transform censored point {point!r}")
    return point.l, point.l / (point.l + point.r)
