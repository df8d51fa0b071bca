"""
Monte Carlo estimators and statistical verdicts.
"""

from .density import DensityEstimate, estimate_location_density, sample_arrays
from .nu import (
    EmpiricalNu,
    estimate_nu,
    frame_thresholds,
    nu_counts,
    threshold_grid,
)
from .tails import default_u_window, log_binned_slope, u_marginal_tail_exponent
from .beta_law import BetaLaw, beta_cdf, beta_from_moments, fit_beta_moments
from .ks import KsVerdict, ks_statistic, ks_test
from .levy import LevyFactorizationReport, levy_factorization_check
from .verdicts import Verdict, bound_compliance, frame_identity_check, reversibility_check
from .tasks import CloudTask, LocationTask, NuTask

__all__ = [
    'DensityEstimate', 'estimate_location_density', 'sample_arrays',
    'EmpiricalNu', 'estimate_nu', 'frame_thresholds', 'nu_counts', 'threshold_grid',
    'default_u_window', 'log_binned_slope', 'u_marginal_tail_exponent',
    'BetaLaw', 'beta_cdf', 'beta_from_moments', 'fit_beta_moments',
    'KsVerdict', 'ks_statistic', 'ks_test',
    'LevyFactorizationReport', 'levy_factorization_check',
    'Verdict', 'bound_compliance', 'frame_identity_check', 'reversibility_check',
    'CloudTask', 'LocationTask', 'NuTask',
]
