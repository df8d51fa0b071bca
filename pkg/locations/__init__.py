"""
Random locations and the local-maxima point process of sampled paths.
"""

from .location_sample import LocationSample, KINDS
from .extractors import (argmax_location, largest_jump_location,
                         largest_drawdown_location, LOCATORS)
from .local_max import (LocalMaxPoint, LocalMaxCloud, scan_local_maxima,
                        extract_local_maxima, psi_transform)
from .return_scan import SparseMax

__all__ = [
    'LocationSample', 'KINDS',
    'argmax_location', 'largest_jump_location', 'largest_drawdown_location', 'LOCATORS',
    'LocalMaxPoint', 'LocalMaxCloud', 'scan_local_maxima',
    'extract_local_maxima', 'psi_transform', 'SparseMax',
]
