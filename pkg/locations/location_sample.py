"""
A random location rescaled to [0, 1].
"""

from utils.errors import DomainError

KINDS = ('supremum', 'largest_jump', 'largest_drawdown')


class LocationSample:
    """One observed location (tau, delta, ...) of a path over an interval."""

    def __init__(self, value, kind, at_zero=False, at_one=False):
        """
        Initialize a location sample.

        Args:
            value: Location rescaled to [0, 1]
            kind: One of KINDS
            at_zero: True if the location is the interval's first grid point
            at_one: True if the location is the interval's last grid point
        """
        if not 0.0 <= value <= 1.0:
            raise DomainError(f"location must lie in [0, 1], got {value}")
        if kind not in KINDS:
            raise DomainError(f"unknown location kind '{kind}'")
        self.value = float(value)
        self.kind = kind
        self.at_zero = bool(at_zero)
        self.at_one = bool(at_one)

    @property
    def at_boundary(self):
        """Flag pair (is 0, is 1)."""
        return (self.at_zero, self.at_one)

    @property
    def is_interior(self):
        return not (self.at_zero or self.at_one)

    def to_dict(self):
        return {'value': self.value, 'kind': self.kind,
                'at_zero': self.at_zero, 'at_one': self.at_one}

    @staticmethod
    def from_dict(data):
        return LocationSample(data['value'], data['kind'], data['at_zero'], data['at_one'])

    def __repr__(self):
        flag = " @0" if self.at_zero else (" @1" if self.at_one else "")
        return f"LocationSample({self.kind}, {self.value:.6f}{flag})"
