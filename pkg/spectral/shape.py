"""
Shape constraints every supremum-location density satisfies.

For s < t, f(t) (1 - t) <= f(s) (1 - s); for s > t, f(t) t <= f(s) s.
Together: f(t) <= f(s) max(s / t, (1 - s) / (1 - t)) for all pairs, with
the one-sided derivative bounds f'(t-) <= f(t) / (1 - t) and
f'(t+) >= -f(t) / t as the adjacent-point limits.
"""

import logging

import numpy as np

from utils.defaults import Defaults
from utils.errors import DomainError

logger = logging.getLogger(__name__)


class ShapeReport:
    """Worst-case margins (positive = violated) and violation counts."""

    def __init__(self, pairwise_margin, backward_margin, forward_margin,
                 pairwise_violations, backward_violations, forward_violations,
                 worst_pair=None, n_se=None):
        self.pairwise_margin = float(pairwise_margin)
        self.backward_margin = float(backward_margin)
        self.forward_margin = float(forward_margin)
        self.pairwise_violations = int(pairwise_violations)
        self.backward_violations = int(backward_violations)
        self.forward_violations = int(forward_violations)
        self.worst_pair = worst_pair
        self.n_se = n_se

    @property
    def violations(self):
        return self.pairwise_violations + self.backward_violations + self.forward_violations

    @property
    def passed(self):
        return self.violations == 0

    def to_dict(self):
        return {
            'passed': self.passed,
            'pairwise_margin': self.pairwise_margin,
            'backward_margin': self.backward_margin,
            'forward_margin': self.forward_margin,
            'pairwise_violations': self.pairwise_violations,
            'backward_violations': self.backward_violations,
            'forward_violations': self.forward_violations,
            'worst_pair': None if self.worst_pair is None else list(self.worst_pair),
            'n_se': self.n_se,
        }

    def __repr__(self):
        state = "passed" if self.passed else f"{self.violations} violations"
        return f"ShapeReport({state}, pairwise_margin={self.pairwise_margin:.3g})"


def _pair_factor(t):
    """M[s, t] = max(s / t, (1 - s) / (1 - t)) on the grid."""
    s = t[:, None]
    return np.maximum(s / t[None, :], (1.0 - s) / (1.0 - t[None, :]))


def check_shape_constraints(curve, n_se=None, shift_tolerance=None):
    """
    Check a density curve against the pairwise and derivative constraints.

    Exact curves are checked with a round-off tolerance only. Curves with
    standard errors may be checked with a slack of n_se combined errors,
    and by default then also forgive a pair when shifting s by one bin
    restores the inequality.

    Args:
        curve: DensityCurve on a uniform grid
        n_se: Number of standard errors of slack; needs curve.se
        shift_tolerance: Forgive one-bin shifts (default: on when n_se is set)

    Returns:
        ShapeReport
    """
    if not curve.is_uniform():
        raise DomainError("shape constraints are checked on a uniform grid")
    t = curve.t_grid
    f = curve.f_values
    if n_se is not None and curve.se is None:
        raise DomainError("n_se slack needs standard errors on the curve")
    if shift_tolerance is None:
        shift_tolerance = n_se is not None
    se = curve.se if n_se is not None else np.zeros_like(f)
    n_se = 0.0 if n_se is None else float(n_se)
    tol = Defaults.NUMERIC_TOL * max(float(f.max()), 1.0)

    factor = _pair_factor(t)
    rhs = f[:, None] * factor
    slack = n_se * np.sqrt(se[None, :] ** 2 + (factor * se[:, None]) ** 2)
    if shift_tolerance and f.size > 2:
        up = np.vstack([rhs[1:], rhs[-1:]])
        down = np.vstack([rhs[:1], rhs[:-1]])
        rhs = np.maximum(rhs, np.maximum(up, down))
    margin = f[None, :] - rhs * (1.0 + Defaults.NUMERIC_TOL) - slack
    np.fill_diagonal(margin, -np.inf)
    worst = np.unravel_index(np.argmax(margin), margin.shape) if f.size > 1 else None
    pairwise_margin = float(margin[worst]) if worst is not None else -np.inf
    pairwise_violations = int(np.count_nonzero(margin > tol))

    h = curve.step
    if f.size > 1:
        back_ratio = (1.0 - t[:-1]) / (1.0 - t[1:])
        back = f[1:] - f[:-1] * back_ratio
        back -= n_se * np.sqrt(se[1:] ** 2 + (back_ratio * se[:-1]) ** 2)
        fwd_ratio = t[1:] / t[:-1]
        fwd = f[:-1] - f[1:] * fwd_ratio
        fwd -= n_se * np.sqrt(se[:-1] ** 2 + (fwd_ratio * se[1:]) ** 2)
        backward_margin = float(back.max() / h)
        forward_margin = float(fwd.max() / h)
        backward_violations = int(np.count_nonzero(back > tol))
        forward_violations = int(np.count_nonzero(fwd > tol))
    else:
        backward_margin = forward_margin = -np.inf
        backward_violations = forward_violations = 0

    worst_pair = None if worst is None else (float(t[worst[0]]), float(t[worst[1]]))
    report = ShapeReport(
        pairwise_margin, backward_margin, forward_margin,
        pairwise_violations, backward_violations, forward_violations,
        worst_pair=worst_pair, n_se=n_se if n_se else None,
    )
    if not report.passed:
        logger.info("shape check: %s, worst pair (s, t) = %s", report, worst_pair)
    return report
