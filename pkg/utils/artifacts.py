"""
CSV and JSON artifact files.

CSVs carry a header row, LF line endings and 17 significant digits so that
re-running a manifest reproduces them byte for byte.
"""

import json
import logging
import os
from datetime import datetime

import pandas as pd

from utils.defaults import Defaults

logger = logging.getLogger(__name__)

RUNS_DIR = 'runs'


def run_directory(out_dir=None, label='run'):
    """
    Create and return the output directory of a run.

    Args:
        out_dir: Directory to use, or None for a timestamped one under runs/
        label: Prefix of the generated directory name

    Returns:
        Path of the (existing) directory
    """
    if out_dir is None:
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        out_dir = os.path.join(RUNS_DIR, f'{label}_{timestamp}')
    os.makedirs(out_dir, exist_ok=True)
    return out_dir


def write_csv(rows, columns, path):
    """
    Write rows to a CSV file.

    Args:
        rows: Sequence of tuples, one per line
        columns: Header names
        path: Target file

    Returns:
        The path written
    """
    frame = pd.DataFrame(list(rows), columns=list(columns))
    frame.to_csv(path, index=False, float_format=Defaults.CSV_FLOAT_FORMAT, lineterminator='\n')
    logger.info("wrote %d rows to %s", len(frame), path)
    return path


def read_csv(path):
    """Load a CSV artifact as a DataFrame."""
    if not os.path.exists(path):
        raise FileNotFoundError(f"artifact not found: {path}")
    return pd.read_csv(path)


def write_json(data, path):
    """Write a JSON report with sorted keys."""
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True, default=_jsonable)
        f.write('\n')
    logger.info("wrote %s", path)
    return path


def read_json(path):
    with open(path, 'r') as f:
        return json.load(f)


def _jsonable(value):
    """Fallback for numpy scalars and arrays."""
    if hasattr(value, 'tolist'):
        return value.tolist()
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    raise TypeError(f"{type(value).__name__} is not JSON serialisable")
