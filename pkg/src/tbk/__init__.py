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
"""
tbk is an exact-arithmetic library for tropical toric vector bundles: a
matroid together with a piecewise-linear map from the fan of a smooth
complete toric variety to the Bergman fan of the matroid.

A bundle is given by its diagram, an integer matrix with one row per ray of
the fan and one column per element of the matroid; every row must be a point
of the Bergman fan and the rows of each maximal cone must share an apartment.
From the diagram the library computes Klyachko flats, the parliament of
polytopes, graded sections, equivariant Euler characteristics, Chern classes,
splittings over toric curves and the tautological bundles of matroids on the
permutahedral variety.

Here an example about how to use the library from a python script.

::

    from tbk.matroid import fano
    from tbk.polyfan import fan_p2
    from tbk.bundle import validate_bundle, h0_u, chern_class

    diagram = [[2, 0, 0, 1, 0, 0, 1],
               [0, 2, 0, 0, 1, 0, 1],
               [0, 0, 2, 0, 0, 1, 1]]

    # the bundle of the Fano plane over the projective plane
    bundle = validate_bundle(fano(), fan_p2(), diagram)

    # sections of degree (0, 1) form a flat of the matroid
    report = h0_u(bundle, (0, 1))
    print(report.get_flat_labels(), report.get_rank())

    # output

    ['y2', 'z2', 'w'] 2

    # equivariant Chern classes, one polynomial per maximal cone
    for cone, poly in chern_class(bundle, 2).items():
        print(cone, poly)

The same computations are available from the command line through the
``tbk`` script, see ``tbk --help``.
"""
import logging
import os
import sys

__version__ = '0.3'

LOGGER = logging.getLogger(__name__)


def _threads_from_env():
    """Read the parallelism degree from the TBK_THREADS variable."""
    value = os.environ.get('TBK_THREADS', '1')
    try:
        threads = int(value)
    except ValueError:
        LOGGER.warning("TBK_THREADS=%r is not an integer, using 1", value)
        return 1
    if threads < 1:
        LOGGER.warning("TBK_THREADS=%r must be positive, using 1", value)
        return 1
    return threads


def _examples_dir():
    """Locate the example files, installed or in the source tree."""
    installed = os.path.join(sys.prefix, 'share', 'tbk', 'examples')
    if os.path.isdir(installed):
        return installed
    return os.path.join(os.path.dirname(__file__), os.pardir, os.pardir,
                        'share', 'tbk', 'examples')


class TConf(object):
    """Configuration for tbk, implemented as singleton"""
    __instance = None

    def __new__(cls, *args, **kwargs):
        if not cls.__instance:
            cls.__instance = super(TConf, cls).__new__(cls)
            cls.__instance._loaded = False
        return cls.__instance

    def __init__(self):
        if self._loaded:
            return
        self.QUIET_MODE = False
        self.VERBOSE = False
        self.OUTPUT_FORMAT = 'json'
        self.MAX_FLAT_COEFF_ELEMENTS = 9
        self.MAX_TAUT_NEF_ELEMENTS = 6
        self.MAX_N0_SEARCH = 64
        self.BOX_MARGIN = 1
        self.reload()
        self._loaded = True

    def reload(self):
        """Re-read the values depending on the environment."""
        self.THREADS = _threads_from_env()
        self.EXAMPLES_DIR = os.path.normpath(_examples_dir())

    def __repr__(self):
        return ('TConf(threads=%d, verbose=%s, quiet=%s, format=%s)'
                % (self.THREADS, self.VERBOSE, self.QUIET_MODE,
                   self.OUTPUT_FORMAT))
