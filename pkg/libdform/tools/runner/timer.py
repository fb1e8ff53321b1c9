# -*- coding: utf-8 -*-
# Wall clock timing of commands and table builds, reported through the logger.
# referring to https://github.com/open-mmlab/mmcv/blob/master/mmcv/utils/timer.py
import logging
from time import perf_counter

from .logger import print_log


class TimerError(Exception):

    def __init__(self, message):
        self.message = message
        super(TimerError, self).__init__(message)


class Timer(object):
    """Wall clock timer. Durations go to the log only, never into results.

    Example:
        >>> with Timer(print_tmpl='kusuoka table: {:.3f}s', logger='libdform'):
        ...     kusuoka_table(8)
    """

    def __init__(self, start=False, print_tmpl='{:.3f}s', logger=None, level=logging.DEBUG):
        self.print_tmpl = print_tmpl
        self.logger = logger
        self.level = level
        self._start = self._last = None
        if start:
            self.tic()

    @property
    def is_running(self):
        return self._start is not None

    def __enter__(self):
        self.tic()
        return self

    def __exit__(self, exc_type, exc, tb):
        total = self.toc()
        # failed blocks are timed too, the error itself is reported by the caller
        suffix = '' if exc_type is None else ' ({})'.format(exc_type.__name__)
        print_log(self.print_tmpl.format(total) + suffix, logger=self.logger, level=self.level)
        self._start = self._last = None

    def _check(self):
        if self._start is None:
            raise TimerError('timer is not running')

    def tic(self):
        self._start = self._last = perf_counter()

    def toc(self):
        """Seconds since tic()"""
        self._check()
        self._last = perf_counter()
        return self._last - self._start

    def since_last(self):
        """Seconds since the previous toc() or since_last() call"""
        self._check()
        now = perf_counter()
        elapsed, self._last = now - self._last, now
        return elapsed
