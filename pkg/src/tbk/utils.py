# -*- coding: utf-8 -*-
#############################################################################
#
# tbk, the tropical bundle kit, Copyright (C) 2026, the tbk developers.
#
# This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#############################################################################
from . import TConf
from fractions import Fraction
import logging
import os
import threading
import time
"""Module containing some utilities about threading, logging,
file checking and exact number formatting."""

CONFIGURATION = TConf()
LOGGER = logging.getLogger(__name__)


def alive_threads(t_dict):
    """Check how much threads are running and alive in a thread dictionary

    :type t_dict: dictionary
    :param t_dict: thread dictionary like  { key : thread_obj, ... }"""
    num = 0
    for thr in t_dict:
        if t_dict[thr].is_alive():
            num += 1
    return num


def parallel_map(func, items, threads=None):
    """Apply func to every item using at most ``threads`` worker threads.

    Results come back in the order of ``items``; the first exception raised
    by a worker (in item order) is raised again in the caller.

    :type func: callable
    :param func: the function to apply

    :type items: list
    :param items: the arguments, one call per item

    :type threads: integer
    :param threads: the maximum number of live threads (defaults to
        the THREADS configuration value)"""
    items = list(items)
    if threads is None:
        threads = CONFIGURATION.THREADS
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    results = {}
    errors = {}

    def _work(idx, item):
        try:
            results[idx] = func(item)
        except Exception as exc:
            errors[idx] = exc

    thrds = {}
    for idx, item in enumerate(items):
        while alive_threads(thrds) >= threads:
            time.sleep(0.001)
        thrds[idx] = threading.Thread(target=_work, args=(idx, item))
        thrds[idx].start()
    for thr in thrds.values():
        thr.join()
    if errors:
        raise errors[min(errors)]
    return [results[idx] for idx in range(len(items))]


def ensure_file_exists(filename):
    """Ensure file exists and is not empty, otherwise raise an IOError.

    :type filename: string
    :param filename: file to check"""
    if not os.path.exists(filename):
        raise IOError("File %s doesn't exist" % filename)
    if not (os.path.getsize(filename) > 0):
        raise IOError("File %s empty" % filename)


def humanize_time(secs):
    """Convert seconds into time format.

    :type secs: float
    :param secs: the time in seconds to represent in human readable format
           (hh:mm:ss,mmm)"""
    mins, secs = divmod(secs, 60)
    hours, mins = divmod(mins, 60)
    return '%02d:%02d:%02d,%s' % (hours, mins, int(secs),
                                  str(("%0.3f" % secs))[-3:])


def setup_logging():
    """Install the stderr handler of the tbk loggers following the
    QUIET_MODE and VERBOSE switches."""
    logger = logging.getLogger('tbk')
    if CONFIGURATION.VERBOSE:
        logger.setLevel(logging.DEBUG)
    elif CONFIGURATION.QUIET_MODE:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s %(name)s: %(message)s'))
        logger.addHandler(handler)
    return logger


class Timer(object):
    """Context manager logging the elapsed time of a computation."""

    def __init__(self, what, logger=LOGGER):
        self._what = what
        self._logger = logger
        self._start = None

    def __enter__(self):
        self._start = time.time()
        self._logger.debug("%s started", self._what)
        return self

    def __exit__(self, *exc_info):
        self._logger.info("%s done in %s", self._what,
                          humanize_time(time.time() - self._start))
        return False


def format_rational(value):
    """Render an exact number as an integer or a "p/q" string."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return '%d/%d' % (value.numerator, value.denominator)


def parse_vector(text):
    """Parse a comma separated list of integers like ``1,0,-2``."""
    text = text.strip()
    if not text:
        return ()
    return tuple(int(tok) for tok in text.split(','))
