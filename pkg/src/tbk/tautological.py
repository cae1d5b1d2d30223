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
"""Module containing the tautological bundles of a matroid on the
permutahedral variety, their Cremona pullbacks, the nef check of their
restrictions to torus invariant curves, and bundles built from user
supplied piecewise linear data.

The permutahedral fan lives in the quotient lattice Z^m / Z(1,...,1), so
the row of the ray of S is the span indicator [e_i in span(S)] minus
[m in S]."""
import logging

from . import TConf
from .bergman import bergman_projection
from .bundle import pullback_linear, validate_bundle, wall_degrees
from .errors import LoopDetected, ScaleGuard, WrongFan
from .matroid import dual, greedy_basis
from .polyfan import PermutahedralFan, permutahedral_fan

CONFIGURATION = TConf()
LOGGER = logging.getLogger(__name__)

SUB_DUAL = 'sub-dual'
QUOTIENT = 'quotient'


class TautologicalSpec(object):
    """Which tautological bundle of a matroid to build: the bundle of the
    matroid itself ("sub-dual") or the Cremona pullback of the bundle of
    the dual matroid ("quotient")."""

    def __init__(self, matroid, which=SUB_DUAL):
        if which not in (SUB_DUAL, QUOTIENT):
            raise ValueError("unknown tautological bundle %r" % which)
        self._matroid = matroid
        self._which = which

    def get_matroid(self):
        return self._matroid

    def get_which(self):
        return self._which

    def build(self):
        if self._which == SUB_DUAL:
            return tautological_bundle(self._matroid)
        return tautological_quotient(self._matroid)


def tautological_rows(matroid, fan, raw=False):
    """The diagram of the tautological bundle on a permutahedral fan; with
    ``raw`` the span indicators without the quotient correction."""
    size = matroid.get_size()
    rows = []
    for subset in fan.get_subsets():
        span = matroid.closure(i - 1 for i in subset)
        corr = 0 if raw or size not in subset else 1
        rows.append([int(i in span) - corr for i in range(size)])
    return rows


def greedy_certificates(matroid, fan):
    """The greedy basis of every permutation cone, for weights decreasing
    along the permutation."""
    certs = {}
    size = matroid.get_size()
    for perm in fan.get_permutations():
        weights = [0] * size
        for pos, elem in enumerate(perm):
            weights[elem - 1] = size - pos
        certs[fan.cone_of_permutation(perm)] = greedy_basis(matroid, weights)
    return certs


def tautological_bundle(matroid):
    """The tautological bundle of a loop-free matroid on m >= 2 elements
    over the permutahedral fan of [m]; the certificate of every cone is its
    greedy basis."""
    if matroid.loops():
        raise LoopDetected("tautological bundles need a loop-free matroid")
    if matroid.get_size() < 2:
        raise WrongFan("the permutahedral fan needs m >= 2")
    fan = permutahedral_fan(matroid.get_size())
    certs = greedy_certificates(matroid, fan)
    bundle = validate_bundle(matroid, fan, tautological_rows(matroid, fan),
                             certs)
    if bundle.get_certificates() != certs:
        raise AssertionError("greedy bases are not adapted to %r" % matroid)
    return bundle


def cremona_pullback(bundle):
    """Pull back along the Cremona involution, the negation of the
    quotient lattice: the row of S becomes the row of its complement."""
    fan = bundle.get_fan()
    if not isinstance(fan, PermutahedralFan):
        raise WrongFan("Cremona pullbacks need a permutahedral fan, not %r"
                       % fan)
    dim = fan.get_dim()
    lam = [[-int(i == j) for j in range(dim)] for i in range(dim)]
    return pullback_linear(bundle, lam, fan)


def tautological_quotient(matroid):
    """The quotient tautological bundle: the Cremona pullback of the
    tautological bundle of the dual matroid."""
    return cremona_pullback(tautological_bundle(dual(matroid)))


def bundle_from_pl_data(matroid, fan, values):
    """Project every row of ray values onto the Bergman fan and validate;
    a cone without common apartment means the fan must be refined."""
    rows = [bergman_projection(matroid, row) for row in values]
    return validate_bundle(matroid, fan, rows)


class NefReport(object):
    """Splitting types of a tautological bundle over every wall."""

    def __init__(self, bundle, entries):
        self._bundle = bundle
        self._entries = list(entries)

    def get_entries(self):
        """(wall, splitting type or None) pairs."""
        return [(w, None if r is None else r.get_type())
                for w, r in self._entries]

    def get_types(self):
        return set(tuple(t) for _, t in self.get_entries() if t is not None)

    def is_nef(self):
        """True iff every wall splits with type {1,0,...,0} or {0,...,0}."""
        for _, kind in self.get_entries():
            if kind is None or any(d not in (0, 1) for d in kind) or \
                    sum(kind) > 1:
                return False
        return True

    def to_dict(self):
        labels = self._bundle.get_fan().get_ray_labels()
        return {'nef': self.is_nef(),
                'walls': [{'tau': [labels[r] for r in w.tau],
                           'type': kind}
                          for w, kind in self.get_entries()]}


def nef_certificate_tautological(matroid, allow_large=False):
    """Restrict the tautological bundle to every torus invariant curve and
    collect the splitting types.

    :type allow_large: boolean
    :param allow_large: accept up to seven elements (the Fano plane)"""
    limit = CONFIGURATION.MAX_TAUT_NEF_ELEMENTS
    if allow_large:
        limit = max(limit, 7)
    if matroid.get_size() > limit:
        raise ScaleGuard("nef sweeps are limited to %d elements" % limit)
    bundle = tautological_bundle(matroid)
    report = NefReport(bundle, wall_degrees(bundle))
    LOGGER.info("%d walls, splitting types %s", len(report.get_entries()),
                sorted(report.get_types()))
    return report
