# solgraph -- solubility graphs of finite permutation groups
# See LICENSE.txt for copying details.

"""process pool shared by the heavy computations"""

import logging
import multiprocessing
import os

logger = logging.getLogger(__name__)


def default_jobs():
    return os.cpu_count() or 1


class Workers(object):
    """A handle on a lazily started process pool.

    `map` always returns results in input order, so nothing downstream can
    observe the number of jobs or the schedule.

    :param int jobs: Number of worker processes. ``None`` or values below 1
        use the machine's parallelism.
    """

    serial_threshold = 32
    """Batches smaller than this run in the calling process."""

    def __init__(self, jobs=None):
        if jobs is None or jobs < 1:
            jobs = default_jobs()
        self.jobs = jobs
        self._pool = None

    def __repr__(self):
        return '<Workers jobs={0}>'.format(self.jobs)

    def map(self, func, items, chunksize=None, serial_below=None):
        """Applies the picklable top-level callable ``func`` to every item.

        :param serial_below: Overrides `serial_threshold`, for batches of
            few but expensive items.
        """
        items = list(items)
        if serial_below is None:
            serial_below = self.serial_threshold
        if self.jobs == 1 or len(items) < serial_below:
            return [func(item) for item in items]
        if self._pool is None:
            logger.debug("starting a pool of %d workers", self.jobs)
            self._pool = multiprocessing.Pool(self.jobs)
        if chunksize is None:
            chunksize = max(1, len(items) // (self.jobs * 4))
        return self._pool.map(func, items, chunksize)

    def close(self):
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()

    def __getstate__(self):
        raise TypeError("Workers handles cannot be sent to other processes")


SERIAL = Workers(1)
"""A handle that never starts a pool."""
