"""
Vectorised first-return scans on a sampled path.

For a batch of indices i, find the nearest j < i (or j > i) with
values[j] >= values[i]. A sparse table of block maxima lets every query
skip whole blocks that stay below its level, so a batch costs
O((n + q) log n) array operations.
"""

import numpy as np


class SparseMax:
    """Block maxima table: level k holds max(values[p : p + 2**k])."""

    def __init__(self, values):
        """
        Build the table.

        Args:
            values: 1-D array
        """
        values = np.asarray(values, dtype=float)
        self.n = values.size
        self.levels = [values]
        width = 1
        while 2 * width <= self.n:
            prev = self.levels[-1]
            self.levels.append(np.maximum(prev[:-width], prev[width:]))
            width *= 2

    def left_return(self, indices):
        """
        Nearest index j < i with values[j] >= values[i].

        Args:
            indices: Integer array of query positions

        Returns:
            Integer array, -1 where no such j exists
        """
        indices = np.asarray(indices, dtype=np.int64)
        level = self.levels[0][indices]
        pos = indices.copy()  # invariant: values[pos:i] < level
        for k in range(len(self.levels) - 1, -1, -1):
            width = 1 << k
            start = pos - width
            ok = start >= 0
            block = np.full(pos.shape, np.inf)
            block[ok] = self.levels[k][start[ok]]
            pos = np.where(block < level, start, pos)
        return pos - 1

    def right_return(self, indices):
        """
        Nearest index j > i with values[j] >= values[i].

        Args:
            indices: Integer array of query positions

        Returns:
            Integer array, -1 where no such j exists
        """
        indices = np.asarray(indices, dtype=np.int64)
        level = self.levels[0][indices]
        pos = indices + 1  # invariant: values[i+1:pos] < level
        for k in range(len(self.levels) - 1, -1, -1):
            width = 1 << k
            ok = pos + width <= self.n
            block = np.full(pos.shape, np.inf)
            block[ok] = self.levels[k][pos[ok]]
            pos = np.where(block < level, pos + width, pos)
        return np.where(pos < self.n, pos, -1)
