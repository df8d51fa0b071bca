"""
Path simulation for self-similar processes with stationary increments.
"""

from .grid import GridSpec, PathGrid
from .sim_spec import SimSpec, FAMILIES
from .seeding import replicate_seed, replicate_rng
from .base_generator import BaseGenerator
from .fbm_generator import FbmGenerator, fbm_cov, gen_fbm, increment_covariance
from .stable_generator import StableLevyGenerator, cms_standard, gen_stable_levy
from .brownian_generator import BrownianGenerator
from .sampler import gen_path, get_generator
from .monte_carlo import map_replicates, default_workers

__all__ = [
    'GridSpec', 'PathGrid', 'SimSpec', 'FAMILIES',
    'replicate_seed', 'replicate_rng',
    'BaseGenerator', 'FbmGenerator', 'StableLevyGenerator', 'BrownianGenerator',
    'fbm_cov', 'gen_fbm', 'increment_covariance', 'cms_standard', 'gen_stable_levy',
    'gen_path', 'get_generator', 'map_replicates', 'default_workers',
]
