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
"""Module containing extensions of bundles along matroid extensions, the
bounded search for a split member of the extension class of a bundle over
the projective line, the submodular defect obstruction and the comparison
of Klyachko flat ranks between two representatives."""
import itertools
import logging
import random

from .bergman import bergman_projection, common_adapted_bases, flag_filtration
from .bundle import (klyachko_intersection, splits, validate_bundle,
                     _p1_rows)
from .errors import MatroidError, NotAnExtension
from .matroid import (ExtensionMap, is_extension, push_flag_point,
                      submodular_defect)
from .utils import Timer, parallel_map

LOGGER = logging.getLogger(__name__)


def _check_extension(phi, matroid):
    if phi.get_source() != matroid:
        raise NotAnExtension("%r is not sourced at the bundle matroid" % phi)
    try:
        ok = is_extension(phi)
    except MatroidError as exc:
        raise NotAnExtension("%s: %s" % (exc.get_name(), exc))
    if not ok:
        raise NotAnExtension("%r does not preserve bases" % phi)


def pushforward_bundle(phi, bundle):
    """The bundle phi o Phi over the target of an extension; the image of
    each certified basis is offered as certificate.

    :type phi: ExtensionMap
    :param phi: an extension sourced at the matroid of the bundle"""
    _check_extension(phi, bundle.get_matroid())
    rows = [push_flag_point(phi, row) for row in bundle.get_diagram()]
    certs = dict((cone, phi.image(bas))
                 for cone, bas in bundle.get_certificates().items())
    return validate_bundle(phi.get_target(), bundle.get_fan(), rows, certs)


class SplitWitness(object):
    """An extension whose pushforward splits, with the splitting."""

    def __init__(self, extension, split):
        self._extension = extension
        self._split = split

    def get_extension(self):
        return self._extension

    def get_split(self):
        return self._split

    def is_identity(self):
        phi = self._extension
        return phi.get_source() == phi.get_target() and \
            phi.get_mapping() == tuple(range(phi.get_source().get_size()))

    def to_dict(self):
        data = self._split.to_dict()
        data['target'] = list(self._extension.get_target().get_ground())
        data['identity'] = self.is_identity()
        return data


def equivalent_split_search(bundle, candidates):
    """Return a witness for the first extension (the identity first, then
    the candidates in order) whose pushforward splits, None when all fail.
    Exhausting the candidates proves nothing about other extensions."""
    _p1_rows(bundle)
    candidates = list(candidates)
    for phi in candidates:
        _check_extension(phi, bundle.get_matroid())
    found = splits(bundle)
    if found is not None:
        return SplitWitness(ExtensionMap.identity(bundle.get_matroid()),
                            found)

    def _try(phi):
        return splits(pushforward_bundle(phi, bundle))

    with Timer("split search over %d extensions" % len(candidates), LOGGER):
        results = parallel_map(_try, candidates)
    for phi, result in zip(candidates, results):
        if result is not None:
            return SplitWitness(phi, result)
    LOGGER.info("no split among %d candidate extensions", len(candidates))
    return None


def defect_obstruction(bundle):
    """Scan the pairs of flats of the two row flags of a bundle over the
    projective line for a positive submodular defect, which forbids a
    common adapted basis.

    :rtype: tuple or None
    :returns: (flat of the first row, flat of the second row, defect)"""
    mat = bundle.get_matroid()
    plus, minus = _p1_rows(bundle)
    for _, flat1 in flag_filtration(mat, plus):
        for _, flat2 in flag_filtration(mat, minus):
            if flat1 <= flat2 or flat2 <= flat1:
                continue
            defect = submodular_defect(mat, flat1, flat2)
            if defect > 0:
                return flat1, flat2, defect
    return None


def klyachko_rank_comparison(first, second, phi, window):
    """Compare the ranks of the Klyachko intersections of a bundle and of a
    bundle over an extension of its matroid, for every threshold tuple in
    the window.

    :type window: tuple
    :param window: the lowest and highest threshold

    :rtype: list
    :returns: (thresholds, first rank, second rank) where the ranks differ"""
    _check_extension(phi, first.get_matroid())
    lowest, highest = window
    nrays = len(first.get_fan().get_rays())
    diffs = []
    for thr in itertools.product(range(lowest, highest + 1), repeat=nrays):
        one = first.get_matroid().rank(klyachko_intersection(first, thr))
        two = second.get_matroid().rank(klyachko_intersection(second, thr))
        if one != two:
            diffs.append((thr, one, two))
    return diffs


def random_bergman_point(matroid, rng, low=-3, high=3):
    """The Bergman projection of a random integer vector."""
    return bergman_projection(matroid, [rng.randint(low, high)
                                        for _ in range(matroid.get_size())])


def modular_common_basis_trials(matroid, trials, seed=0):
    """Draw pairs of random Bergman points and count the pairs without a
    common adapted basis (none for a modular matroid)."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        rows = [random_bergman_point(matroid, rng),
                random_bergman_point(matroid, rng)]
        if not common_adapted_bases(matroid, rows):
            failures += 1
    return failures
