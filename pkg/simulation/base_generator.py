"""
Base class for path generators.
"""

from abc import ABC, abstractmethod

from utils.errors import DomainError
from .seeding import replicate_rng


class BaseGenerator(ABC):
    """Abstract base class for ss,si path generators."""

    def __init__(self, family):
        """
        Initialize generator.

        Args:
            family: Family name this generator serves
        """
        self.family = family

    @abstractmethod
    def generate(self, spec, replicate_index):
        """
        Generate one replicate path.

        Args:
            spec: SimSpec of this generator's family
            replicate_index: Replicate number in [0, spec.replicates)

        Returns:
            PathGrid anchored at the window's left edge
        """
        pass

    def _rng_for(self, spec, replicate_index):
        """
        Check the request and return the replicate's generator.

        Args:
            spec: SimSpec
            replicate_index: Replicate number

        Returns:
            numpy Generator seeded from (master_seed, replicate_index)
        """
        if spec.family != self.family:
            raise DomainError(f"{type(self).__name__} cannot simulate family '{spec.family}'")
        if not 0 <= replicate_index < spec.replicates:
            raise DomainError(
                f"replicate_index {replicate_index} outside [0, {spec.replicates})"
            )
        return replicate_rng(spec.master_seed, replicate_index)
