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
"""Module containing the Bergman fan machinery: membership of integer
vectors, weighted flags of flats, apartments of bases, the canonical
projection onto the Bergman fan and the evaluation of symmetric functions
on Bergman points.

A vector w lies in the Bergman fan when the minimum of w over every circuit
is attained at least twice; equivalently its upper level sets
{i | w_i >= r} are flats."""
import itertools
import math
from fractions import Fraction

from .errors import (DimensionMismatch, NotABasis, NotBergman, NotNested)
from .matroid import greedy_basis


def _check_length(mat, vec):
    if len(vec) != mat.get_size():
        raise DimensionMismatch("vector of length %d for a matroid on %d "
                                "elements" % (len(vec), mat.get_size()))


def is_bergman_point(mat, vec):
    """Return True iff the minimum of vec over every circuit is attained
    at least twice.

    :type mat: Matroid
    :param mat: the matroid

    :type vec: list of integers
    :param vec: one value per element, in ground order"""
    _check_length(mat, vec)
    for circ in mat.circuits():
        low = min(vec[i] for i in circ)
        if sum(1 for i in circ if vec[i] == low) < 2:
            return False
    return True


def check_bergman(mat, vec):
    """Return vec as a tuple, raise NotBergman if it is not a Bergman
    point."""
    vec = tuple(vec)
    if not is_bergman_point(mat, vec):
        raise NotBergman("%s is not a Bergman point of %s" % (list(vec), mat))
    return vec


class WeightedFlag(object):
    """A decreasing filtration by flats: thresholds r1 > r2 > ... and flats
    F_r1 < F_r2 < ... ending with the whole ground set."""

    def __init__(self, steps):
        self._steps = tuple((t, frozenset(f)) for t, f in steps)

    def get_thresholds(self):
        return tuple(t for t, _ in self._steps)

    def get_flats(self):
        return tuple(f for _, f in self._steps)

    def get_steps(self):
        return self._steps

    def __iter__(self):
        return iter(self._steps)

    def __len__(self):
        return len(self._steps)

    def __eq__(self, other):
        return isinstance(other, WeightedFlag) and \
            self._steps == other._steps

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "WeightedFlag(%s)" % ", ".join(
            "%s:%s" % (t, sorted(f)) for t, f in self._steps)


def flag_filtration(mat, vec):
    """Return the weighted flag of the upper level sets of a Bergman point.

    :rtype: WeightedFlag"""
    vec = check_bergman(mat, vec)
    steps = []
    for thr in sorted(set(vec), reverse=True):
        steps.append((thr, frozenset(i for i, v in enumerate(vec)
                                     if v >= thr)))
    return WeightedFlag(steps)


def point_from_flag(mat, flag):
    """Read a Bergman point off a weighted flag: w_i is the largest
    threshold whose flat contains i.

    :type flag: WeightedFlag or list of (threshold, flat) pairs
    :param flag: flats as index sets, thresholds strictly decreasing"""
    steps = list(flag.get_steps() if isinstance(flag, WeightedFlag)
                 else flag)
    if not steps:
        raise NotNested("an empty flag has no point")
    prev_thr, prev_flat = None, None
    for thr, flat in steps:
        flat = mat.check_flat(flat)
        if prev_thr is not None and not (thr < prev_thr and
                                         prev_flat < flat):
            raise NotNested("flag steps %s and %s are not strictly nested"
                            % (mat.labels(prev_flat), mat.labels(flat)))
        prev_thr, prev_flat = thr, flat
    if len(prev_flat) != mat.get_size():
        raise NotNested("the last flat of a flag must be the ground set")
    vec = [None] * mat.get_size()
    for thr, flat in steps:
        for i in flat:
            if vec[i] is None:
                vec[i] = thr
    return tuple(vec)


def _check_basis(mat, basis):
    basis = frozenset(basis)
    if not mat.is_basis(basis):
        raise NotABasis("%s is not a basis" % mat.labels(basis))
    return basis


def project_B(mat, basis, vec):
    """The coordinates of vec on a basis, in index order."""
    return tuple(vec[b] for b in sorted(basis))


def phi_B(mat, basis, values):
    """Extend values on a basis to a point of its apartment: the value of
    a non-basis element is the minimum over its fundamental circuit.

    :type basis: iterable of integers
    :param basis: a basis of the matroid

    :type values: list or dict
    :param values: the values on the basis, in index order, or a dict
        keyed by basis index"""
    basis = _check_basis(mat, basis)
    if not isinstance(values, dict):
        values = dict(zip(sorted(basis), values))
    vec = []
    for elem in range(mat.get_size()):
        if elem in basis:
            vec.append(values[elem])
        else:
            circ = mat.fundamental_circuit(elem, basis)
            vec.append(min(values[b] for b in circ if b != elem))
    return tuple(vec)


def apartment_contains(mat, basis, vec):
    """Return True iff vec lies in the apartment of the basis."""
    _check_length(mat, vec)
    return phi_B(mat, basis, project_B(mat, basis, vec)) == tuple(vec)


def adapted_bases(mat, vec):
    """All bases whose apartment contains vec, in lexicographic order."""
    return [frozenset(b) for b in mat.get_bases()
            if apartment_contains(mat, b, vec)]


def adapted_to_flag(mat, basis, vec):
    """Return True iff the basis spans every flat of the flag of vec."""
    basis = frozenset(basis)
    for _, flat in flag_filtration(mat, vec):
        if mat.rank(basis & flat) != mat.rank(flat):
            return False
    return True


def common_adapted_bases(mat, rows):
    """Bases whose apartment contains every one of the given rows."""
    return [frozenset(b) for b in mat.get_bases()
            if all(apartment_contains(mat, b, row) for row in rows)]


def bergman_projection(mat, vec):
    """The canonical projection onto the Bergman fan:
    w'_i = max{k | i in span{j | w_j >= k}}."""
    _check_length(mat, vec)
    result = [None] * mat.get_size()
    for thr in sorted(set(vec), reverse=True):
        span = mat.closure(i for i, v in enumerate(vec) if v >= thr)
        for i in span:
            if result[i] is None:
                result[i] = thr
    return tuple(result)


def symmetric_evaluate(mat, vec, kind, degree):
    """Evaluate a universal symmetric function on a Bergman point, through
    the coordinates on an adapted basis.

    :type kind: string
    :param kind: "elementary", "power" or "exp" (exponential truncated at
        the given degree)

    :type degree: integer
    :param degree: the index of the elementary or power sum, or the
        truncation degree of the exponential

    :rtype: integer or Fraction"""
    vec = check_bergman(mat, vec)
    basis = greedy_basis(mat, vec)
    coords = project_B(mat, basis, vec)
    if kind == 'elementary':
        if not 0 <= degree <= mat.get_rank():
            raise ValueError("elementary index %d out of range" % degree)
        total = 0
        for comb in itertools.combinations(coords, degree):
            prod = 1
            for val in comb:
                prod *= val
            total += prod
        return total
    if kind == 'power':
        return sum(val ** degree for val in coords)
    if kind == 'exp':
        return sum(Fraction(sum(val ** k for val in coords),
                            math.factorial(k)) for k in range(degree + 1))
    raise ValueError("unknown symmetric function %r" % kind)
