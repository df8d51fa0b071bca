"""
Family dispatch for path generation.
"""

from utils.errors import DomainError
from .brownian_generator import BrownianGenerator
from .fbm_generator import FbmGenerator
from .stable_generator import StableLevyGenerator

GENERATORS = {
    'fbm': FbmGenerator(),
    'stable_levy': StableLevyGenerator(),
    'brownian': BrownianGenerator(),
}


def get_generator(family):
    """
    Look up the generator of a family.

    Args:
        family: Family name

    Returns:
        BaseGenerator instance
    """
    try:
        return GENERATORS[family]
    except KeyError:
        raise DomainError(f"no generator for family '{family}'") from None


def gen_path(spec, replicate_index):
    """
    Generate replicate `replicate_index` of `spec`.

    Args:
        spec: SimSpec
        replicate_index: Replicate number in [0, spec.replicates)

    Returns:
        PathGrid; a pure function of (spec, replicate_index)
    """
    return get_generator(spec.family).generate(spec, replicate_index)
