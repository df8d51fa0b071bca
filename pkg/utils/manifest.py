"""
Experiment manifests: everything needed to re-run an analysis.
"""

import json
import logging
import os

from utils.defaults import Defaults
from utils.errors import DomainError, UsageError
from simulation.grid import GridSpec
from simulation.sim_spec import SimSpec

logger = logging.getLogger(__name__)

VERSION = '1.0.0'

ANALYSES = ('simulate', 'tau', 'jump', 'nu', 'levy-check', 'spectral', 'fit', 'bound-check')

# Keys a manifest may carry, with their defaults.
FIELDS = {
    'family': 'brownian',
    'n': Defaults.STEPS_PER_UNIT,
    'reps': 1000,
    'seed': Defaults.MASTER_SEED,
    'hurst': None,
    'alpha': None,
    'beta': 0.0,
    'window': Defaults.WINDOW,
    'bins': Defaults.BINS,
    'workers': None,
    'out': None,
    'drawdown': False,
    'curve': 'basis',
    'v': 0.5,
    'points': 1000,
    'input': None,
    'atoms': Defaults.V_ATOMS,
    'mass_cap': 1.0,
    'damping': 0.0,
    'reversible': False,
    'clouds': True,
}


class ExperimentManifest:
    """An analysis selection with its parameters and tolerances."""

    def __init__(self, analysis, params=None, tolerances=None, timestamp=None, version=VERSION):
        """
        Initialize a manifest.

        Args:
            analysis: One of ANALYSES
            params: Dict of FIELDS values; missing keys take their defaults
            tolerances: Verdict tolerances overriding Defaults.TOLERANCES
            timestamp: Creation time, informational only
            version: Toolkit version that wrote the manifest
        """
        if analysis not in ANALYSES:
            raise UsageError(f"unknown analysis '{analysis}', expected one of {ANALYSES}")
        unknown = set(params or {}) - set(FIELDS)
        if unknown:
            raise UsageError(f"unknown manifest keys: {sorted(unknown)}")
        self.analysis = analysis
        self.params = dict(FIELDS)
        self.params.update(params or {})
        self.tolerances = dict(Defaults.TOLERANCES)
        self.tolerances.update(tolerances or {})
        self.timestamp = timestamp
        self.version = version

    def __getattr__(self, name):
        params = self.__dict__.get('params', {})
        if name in params:
            return params[name]
        raise AttributeError(name)

    def overridden(self, overrides):
        """Copy with the non-None entries of overrides applied."""
        params = dict(self.params)
        params.update({k: v for k, v in overrides.items() if v is not None and k in FIELDS})
        return ExperimentManifest(self.analysis, params, self.tolerances, self.timestamp, self.version)

    def grid(self, point_process=False):
        """Unit grid with n steps, or the window [-W, 1 + W] at n steps per unit."""
        if point_process:
            return GridSpec.window(self.window, self.n)
        return GridSpec.unit(self.n)

    def sim_spec(self, point_process=False):
        """SimSpec described by this manifest."""
        family = self.family
        try:
            return SimSpec(
                family, self.grid(point_process), self.seed, self.reps,
                hurst=self.hurst if family == 'fbm' else None,
                alpha=self.alpha if family == 'stable_levy' else None,
                beta=self.beta if family == 'stable_levy' else 0.0,
            )
        except DomainError as e:
            raise UsageError(str(e)) from e

    def to_dict(self):
        return {
            'analysis': self.analysis,
            'params': dict(self.params),
            'tolerances': dict(self.tolerances),
            'timestamp': self.timestamp,
            'version': self.version,
        }

    @staticmethod
    def from_dict(data):
        return ExperimentManifest(
            data['analysis'],
            data.get('params'),
            data.get('tolerances'),
            data.get('timestamp'),
            data.get('version', VERSION),
        )

    def save(self, filename):
        """Write the manifest as JSON."""
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f, indent=2, sort_keys=True)
            f.write('\n')
        logger.info("manifest saved to %s", filename)
        return filename

    @staticmethod
    def load(filename):
        """Read a manifest written by save()."""
        if not os.path.exists(filename):
            raise UsageError(f"manifest not found: {filename}")
        try:
            with open(filename, 'r') as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise UsageError(f"manifest {filename} is not valid JSON: {e}") from e
        if 'analysis' not in data:
            raise UsageError(f"manifest {filename} has no 'analysis'")
        return ExperimentManifest.from_dict(data)

    def __repr__(self):
        return f"ExperimentManifest({self.analysis}, family={self.family}, reps={self.reps})"
