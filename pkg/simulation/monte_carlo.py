"""
Replicate-parallel Monte Carlo over a bounded joblib worker pool.

Replicates are cut into contiguous chunks; every chunk regenerates its paths
from (master_seed, replicate_index), so results are identical for any worker
count and are returned in replicate order.
"""

import logging
import os

from joblib import Parallel, delayed

from utils.defaults import Defaults
from utils.errors import UsageError
from .sampler import gen_path

logger = logging.getLogger(__name__)


def default_workers():
    """Worker count from the environment, 1 when unset."""
    raw = os.environ.get(Defaults.WORKERS_ENV)
    if raw is None or raw == '':
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise UsageError(f"{Defaults.WORKERS_ENV} must be an integer, got '{raw}'") from None
    if workers < 1:
        raise UsageError(f"{Defaults.WORKERS_ENV} must be >= 1, got {workers}")
    return workers


def _chunks(indices, size):
    for start in range(0, len(indices), size):
        yield indices[start:start + size]


def _run_chunk(spec, task, indices):
    return [task(gen_path(spec, i)) for i in indices]


def map_replicates(spec, task, workers=None, indices=None, chunk_size=None):
    """
    Apply `task` to every replicate path of `spec`.

    Args:
        spec: SimSpec
        task: Picklable callable PathGrid -> result
        workers: Pool size; defaults to default_workers()
        indices: Replicate indices to run, default all
        chunk_size: Replicates per job

    Returns:
        List of task results in replicate order
    """
    workers = default_workers() if workers is None else int(workers)
    indices = list(range(spec.replicates)) if indices is None else list(indices)
    chunk_size = chunk_size or Defaults.CHUNK_SIZE
    logger.info("running %d replicates of %r on %d worker(s)", len(indices), spec, workers)

    chunks = list(_chunks(indices, chunk_size))
    if workers == 1:
        parts = [_run_chunk(spec, task, chunk) for chunk in chunks]
    else:
        parts = Parallel(n_jobs=workers)(
            delayed(_run_chunk)(spec, task, chunk) for chunk in chunks
        )
    return [result for part in parts for result in part]
