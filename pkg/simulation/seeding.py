"""
Per-replicate seed derivation.

Each replicate draws from its own generator whose seed is a SplitMix64
finalizer applied to (master_seed, replicate_index), so a replicate's stream
does not depend on which worker runs it or in which order.
"""

import numpy as np

from utils.errors import DomainError

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z):
    """SplitMix64 finalizer."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def replicate_seed(master_seed, replicate_index):
    """
    Derive the 64-bit seed of one replicate.

    Args:
        master_seed: Experiment seed
        replicate_index: Non-negative replicate number

    Returns:
        Integer in [0, 2**64)
    """
    if replicate_index < 0:
        raise DomainError(f"replicate_index must be non-negative, got {replicate_index}")
    head = _mix64(int(master_seed) + _GOLDEN)
    return _mix64(head ^ ((int(replicate_index) + 1) * _GOLDEN))


def replicate_rng(master_seed, replicate_index):
    """Independent numpy Generator for one replicate."""
    return np.random.default_rng(replicate_seed(master_seed, replicate_index))
