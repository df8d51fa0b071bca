"""
Errors, defaults, manifests and artifact files.
"""

from .errors import (
    CensoredPointError,
    DomainError,
    InsufficientDataError,
    SolverError,
    SuplocError,
    UsageError,
)
from .defaults import Defaults
from .artifacts import read_csv, read_json, run_directory, write_csv, write_json

__all__ = [
    'SuplocError', 'DomainError', 'CensoredPointError', 'InsufficientDataError',
    'SolverError', 'UsageError', 'Defaults',
    'read_csv', 'read_json', 'run_directory', 'write_csv', 'write_json',
]
