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
"""Module containing the Matroid class and the exact matroid operations:
rank and closure oracles, circuits, flats, duality, restriction and
contraction by a flat, submodular defects, extensions and greedy bases.

A matroid is stored through its explicit family of bases, as frozensets of
ground indices; labels are only used at the boundary. The ground order given
at construction is the total order used for every tie-break."""
import itertools
import logging
import threading

from . import linalg
from .errors import (CircuitAxiomViolation, ElementInBasis, EmptyBases,
                     ExchangeAxiomViolation, FormatError, LoopDetected,
                     NotABasis, NotAFlat, NotAnExtension, NotInjective,
                     RankMismatch, UnknownMatroid)

LOGGER = logging.getLogger(__name__)


class Matroid(object):
    """A finite matroid given by its ground labels and its bases.

    :type ground: list of strings
    :param ground: the element labels, in the order used for tie-breaking

    :type bases: iterable of iterables of integers
    :param bases: the bases, as subsets of ground indices

    :type check: boolean
    :param check: validate the basis exchange axiom

    :type allow_loops: boolean
    :param allow_loops: accept elements lying in no basis (duals and
        restrictions may have them)"""

    def __init__(self, ground, bases, check=True, allow_loops=False):
        self._ground = tuple(str(lab) for lab in ground)
        if len(set(self._ground)) != len(self._ground):
            raise FormatError("duplicated labels in %s" % (self._ground,))
        self._index = dict((lab, i) for i, lab in enumerate(self._ground))
        self._bases = frozenset(frozenset(b) for b in bases)
        if not self._bases:
            raise EmptyBases("a matroid needs at least one basis")
        sizes = set(len(b) for b in self._bases)
        if len(sizes) != 1:
            raise ExchangeAxiomViolation("bases of different sizes %s"
                                         % sorted(sizes))
        self._rank = sizes.pop()
        for bas in self._bases:
            for i in bas:
                if not 0 <= i < len(self._ground):
                    raise FormatError("basis index %d out of range" % i)
        self._sorted_bases = tuple(sorted(tuple(sorted(b))
                                          for b in self._bases))
        self._lock = threading.Lock()
        self._rank_cache = {}
        self._circuits = None
        self._flats = None
        if check:
            self._check_exchange()
        if not allow_loops:
            loops = self.loops()
            if loops:
                raise LoopDetected("elements %s lie in no basis"
                                   % list(self.labels(loops)))

    def _check_exchange(self):
        for bas1 in self._bases:
            for bas2 in self._bases:
                for elem in bas1 - bas2:
                    rest = bas1 - set([elem])
                    if not any(rest | set([other]) in self._bases
                               for other in bas2 - bas1):
                        raise ExchangeAxiomViolation(
                            "no exchange for %s leaving %s towards %s"
                            % (self._ground[elem], self.labels(bas1),
                               self.labels(bas2)))

    def __eq__(self, other):
        return (isinstance(other, Matroid) and
                self._ground == other._ground and
                self._bases == other._bases)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._ground, self._bases))

    def __repr__(self):
        return "Matroid(rank=%d, ground=%s, %d bases)" % (
            self._rank, list(self._ground), len(self._bases))

    def get_ground(self):
        """Get the element labels."""
        return self._ground

    def get_size(self):
        """Get the number of elements."""
        return len(self._ground)

    def get_rank(self):
        """Get the rank of the matroid."""
        return self._rank

    def get_bases(self):
        """Get the bases as sorted index tuples, in lexicographic order."""
        return self._sorted_bases

    def index(self, label):
        """Return the index of an element label."""
        try:
            return self._index[str(label)]
        except KeyError:
            raise FormatError("unknown element %r" % (label,))

    def indices(self, labels):
        """Return the frozenset of indices of some labels."""
        return frozenset(self.index(lab) for lab in labels)

    def labels(self, subset):
        """Return the labels of a set of indices, in ground order."""
        return [self._ground[i] for i in sorted(subset)]

    def is_basis(self, subset):
        return frozenset(subset) in self._bases

    def loops(self):
        """Return the set of elements lying in no basis."""
        covered = frozenset().union(*self._bases)
        return frozenset(range(len(self._ground))) - covered

    def rank(self, subset):
        """Return the rank of a subset: the size of its largest independent
        subset.

        :type subset: iterable of integers
        :param subset: ground indices"""
        key = frozenset(subset)
        with self._lock:
            if key in self._rank_cache:
                return self._rank_cache[key]
        value = max(len(key & bas) for bas in self._bases)
        with self._lock:
            self._rank_cache[key] = value
        return value

    def is_independent(self, subset):
        subset = frozenset(subset)
        return self.rank(subset) == len(subset)

    def closure(self, subset):
        """Return the flat spanned by a subset."""
        subset = frozenset(subset)
        rnk = self.rank(subset)
        return frozenset(i for i in range(len(self._ground))
                         if i in subset or self.rank(subset | set([i])) == rnk)

    def is_flat(self, subset):
        subset = frozenset(subset)
        return self.closure(subset) == subset

    def check_flat(self, subset):
        """Return the subset as a frozenset, raise NotAFlat if it is not
        closed."""
        subset = frozenset(subset)
        if not self.is_flat(subset):
            raise NotAFlat("%s is not a flat, its closure is %s"
                           % (self.labels(subset),
                              self.labels(self.closure(subset))))
        return subset

    def circuits(self):
        """Return the minimal dependent sets, sorted by size then index."""
        with self._lock:
            if self._circuits is not None:
                return self._circuits
        found = []
        for size in range(1, self._rank + 2):
            for comb in itertools.combinations(range(len(self._ground)), size):
                cand = frozenset(comb)
                if self.rank(cand) != size - 1:
                    continue
                if all(self.rank(cand - set([e])) == size - 1 for e in cand):
                    found.append(cand)
        circuits = tuple(found)
        with self._lock:
            self._circuits = circuits
        return circuits

    def flats(self):
        """Return all the flats, sorted by rank then index."""
        with self._lock:
            if self._flats is not None:
                return self._flats
        found = set()
        for bas in self._sorted_bases:
            for size in range(len(bas) + 1):
                for comb in itertools.combinations(bas, size):
                    found.add(self.closure(comb))
        flats = tuple(sorted(found, key=lambda f: (self.rank(f), len(f),
                                                   sorted(f))))
        with self._lock:
            self._flats = flats
        return flats

    def flats_of_rank(self, k):
        return tuple(f for f in self.flats() if self.rank(f) == k)

    def fundamental_circuit(self, elem, basis):
        """Return the unique circuit contained in basis + elem.

        :type elem: integer
        :param elem: an element outside the basis

        :type basis: iterable of integers
        :param basis: a basis of the matroid"""
        basis = frozenset(basis)
        if basis not in self._bases:
            raise NotABasis("%s is not a basis" % self.labels(basis))
        if elem in basis:
            raise ElementInBasis("%s belongs to the basis %s"
                                 % (self._ground[elem], self.labels(basis)))
        return frozenset([elem]) | frozenset(
            b for b in basis if (basis - set([b])) | set([elem]) in self._bases)


def matroid_from_bases(ground, bases):
    """Build and validate a matroid from labels and bases given by labels.

    :type ground: list of strings
    :param ground: the element labels

    :type bases: iterable of label lists
    :param bases: the bases"""
    index = dict((str(lab), i) for i, lab in enumerate(ground))
    try:
        idx_bases = [frozenset(index[str(lab)] for lab in bas)
                     for bas in bases]
    except KeyError as exc:
        raise FormatError("basis references unknown element %s" % exc)
    return Matroid(ground, idx_bases)


def matroid_from_circuits(ground, circuits):
    """Build a matroid from its circuits; the independent sets are the
    subsets containing no circuit. The circuits of the result must be the
    given ones, otherwise CircuitAxiomViolation is raised."""
    index = dict((str(lab), i) for i, lab in enumerate(ground))
    try:
        circs = set(frozenset(index[str(lab)] for lab in circ)
                    for circ in circuits)
    except KeyError as exc:
        raise FormatError("circuit references unknown element %s" % exc)
    if frozenset() in circs:
        raise CircuitAxiomViolation("the empty set cannot be a circuit")
    size = len(ground)

    def _independent(subset):
        return not any(circ <= subset for circ in circs)

    bases = []
    for rnk in range(size, -1, -1):
        bases = [frozenset(c) for c in
                 itertools.combinations(range(size), rnk)
                 if _independent(frozenset(c))]
        if bases:
            break
    mat = Matroid(ground, bases)
    if set(mat.circuits()) != circs:
        raise CircuitAxiomViolation(
            "the given sets are not the circuits of a matroid")
    return mat


def uniform(rank, size):
    """The uniform matroid U_{rank,size} on labels e1..e<size>."""
    if not 0 <= rank <= size:
        raise UnknownMatroid("no uniform matroid U_%d,%d" % (rank, size))
    ground = ['e%d' % (i + 1) for i in range(size)]
    return Matroid(ground, itertools.combinations(range(size), rank))


FANO_LINES = (('y1', 'w', 'z1'), ('y2', 'w', 'z2'), ('y3', 'w', 'z3'),
              ('y3', 'y1', 'z2'), ('y1', 'y2', 'z3'), ('y2', 'y3', 'z1'),
              ('z1', 'z2', 'z3'))

VAMOS_PLANES = (('h1', 'h2', 'f1', 'f2'), ('h1', 'h2', 'e', 'p'),
                ('f1', 'f2', 'e', 'p'), ('h1', 'h2', 'g', 'q'),
                ('f1', 'f2', 'g', 'q'))


def _all_but(ground, rank, dependent):
    index = dict((lab, i) for i, lab in enumerate(ground))
    dep = set(frozenset(index[lab] for lab in d) for d in dependent)
    return Matroid(ground, [frozenset(c) for c in
                            itertools.combinations(range(len(ground)), rank)
                            if frozenset(c) not in dep])


def fano():
    """The Fano plane: the 3-subsets of its 7 points except the 7 lines."""
    return _all_but(('y1', 'y2', 'y3', 'z1', 'z2', 'z3', 'w'), 3, FANO_LINES)


def vamos():
    """The Vamos matroid: rank 4 on 8 elements, all 4-subsets are bases
    except the five dependent planes."""
    return _all_but(('h1', 'h2', 'f1', 'f2', 'e', 'p', 'g', 'q'), 4,
                    VAMOS_PLANES)


def linear_matroid(matrix, labels=None, prime=None):
    """The matroid of the columns of an integer matrix over QQ, or over
    GF(prime) when given.

    :type matrix: list of integer lists
    :param matrix: the matrix by rows, one column per element"""
    rows = [list(r) for r in matrix]
    size = len(rows[0]) if rows else 0
    if labels is None:
        labels = ['e%d' % (i + 1) for i in range(size)]
    full = linalg.rank(rows, prime)

    def _cols(comb):
        return [[row[j] for j in comb] for row in rows]

    bases = [frozenset(c) for c in itertools.combinations(range(size), full)
             if linalg.rank(_cols(c), prime) == full]
    return Matroid(labels, bases)


def matroid_by_name(name):
    """Return a named matroid: "uniform:r,m", "fano" or "vamos"."""
    name = name.strip().lower()
    if name == 'fano':
        return fano()
    if name == 'vamos':
        return vamos()
    if name.startswith('uniform:'):
        try:
            rank, size = [int(t) for t in name.split(':', 1)[1].split(',')]
        except ValueError:
            raise UnknownMatroid("bad uniform matroid name %r" % name)
        return uniform(rank, size)
    raise UnknownMatroid("unknown matroid %r" % name)


def dual(mat):
    """The dual matroid: bases are the complements of the bases."""
    full = frozenset(range(mat.get_size()))
    return Matroid(mat.get_ground(), [full - frozenset(b)
                                      for b in mat.get_bases()],
                   check=False, allow_loops=True)


def restriction(mat, subset):
    """The restriction of a matroid to a subset of its ground set, on the
    labels of the subset in ground order."""
    keep = sorted(frozenset(subset))
    pos = dict((old, new) for new, old in enumerate(keep))
    rnk = mat.rank(keep)
    bases = set()
    for bas in mat.get_bases():
        inter = frozenset(bas) & frozenset(keep)
        if len(inter) == rnk:
            bases.add(frozenset(pos[i] for i in inter))
    return Matroid([mat.get_ground()[i] for i in keep], bases,
                   check=False, allow_loops=True)


def quotient(mat, flat):
    """The contraction of a matroid by a flat, on the complement of the
    flat: S is a basis iff S together with a basis of the flat is a basis
    of the matroid."""
    flat = mat.check_flat(flat)
    rest = [i for i in range(mat.get_size()) if i not in flat]
    pos = dict((old, new) for new, old in enumerate(rest))
    rnk = mat.rank(flat)
    bases = set()
    for bas in mat.get_bases():
        bas = frozenset(bas)
        if len(bas & flat) == rnk:
            bases.add(frozenset(pos[i] for i in bas - flat))
    return Matroid([mat.get_ground()[i] for i in rest], bases, check=False)


def submodular_defect(mat, flat1, flat2):
    """Return rank F1 + rank F2 - rank span(F1 u F2) - rank(F1 n F2)."""
    flat1 = mat.check_flat(flat1)
    flat2 = mat.check_flat(flat2)
    return (mat.rank(flat1) + mat.rank(flat2) - mat.rank(flat1 | flat2) -
            mat.rank(flat1 & flat2))


def is_modular(mat):
    """A matroid is modular when every pair of flats has defect zero."""
    flats = mat.flats()
    for i, fl1 in enumerate(flats):
        for fl2 in flats[i + 1:]:
            if submodular_defect(mat, fl1, fl2):
                return False
    return True


class ExtensionMap(object):
    """An injective map between the ground sets of two matroids.

    :type source: Matroid
    :param source: the matroid being extended

    :type target: Matroid
    :param target: the extension

    :type mapping: list of integers
    :param mapping: the target index of every source index"""

    def __init__(self, source, target, mapping):
        self._source = source
        self._target = target
        self._mapping = tuple(mapping)
        if len(self._mapping) != source.get_size():
            raise NotInjective("the map must send every one of the %d "
                               "source elements" % source.get_size())

    def get_source(self):
        return self._source

    def get_target(self):
        return self._target

    def get_mapping(self):
        return self._mapping

    def image(self, subset):
        return frozenset(self._mapping[i] for i in subset)

    def __repr__(self):
        return "ExtensionMap(%s -> %s)" % (
            list(self._source.get_ground()),
            [self._target.get_ground()[j] for j in self._mapping])

    @classmethod
    def identity(cls, mat):
        return cls(mat, mat, range(mat.get_size()))


def is_extension(phi):
    """Test whether phi is a matroid extension: equal ranks, injective,
    and B is a basis of the source iff phi(B) is a basis of the target."""
    source, target = phi.get_source(), phi.get_target()
    if source.get_rank() != target.get_rank():
        raise RankMismatch("ranks %d and %d differ"
                           % (source.get_rank(), target.get_rank()))
    mapping = phi.get_mapping()
    if len(set(mapping)) != len(mapping) or \
            any(not 0 <= j < target.get_size() for j in mapping):
        raise NotInjective("map %s is not injective into %d elements"
                           % (list(mapping), target.get_size()))
    for comb in itertools.combinations(range(source.get_size()),
                                       source.get_rank()):
        if source.is_basis(comb) != target.is_basis(phi.image(comb)):
            return False
    return True


def principal_extension(mat, flat, label):
    """Add a new element placed freely on a flat of positive rank (the
    extension given by the modular cut generated by the flat).

    :rtype: ExtensionMap
    :returns: the inclusion of mat into the extended matroid"""
    flat = mat.check_flat(flat)
    if mat.rank(flat) == 0:
        raise NotAFlat("the flat of a principal extension needs positive rank")
    if str(label) in mat.get_ground():
        raise FormatError("label %r already used" % (label,))
    size, rnk = mat.get_size(), mat.get_rank()
    new = size
    bases = [frozenset(b) for b in mat.get_bases()]
    for comb in itertools.combinations(range(size), rnk - 1):
        comb = frozenset(comb)
        if mat.rank(comb) == rnk - 1 and mat.rank(comb | flat) > rnk - 1:
            bases.append(comb | set([new]))
    target = Matroid(list(mat.get_ground()) + [str(label)], bases,
                     check=False)
    return ExtensionMap(mat, target, range(size))


def fresh_label(mat, stem='p'):
    """The first of stem, stem1, stem2, ... not in the ground set."""
    ground = set(mat.get_ground())
    if stem not in ground:
        return stem
    for num in itertools.count(1):
        label = "%s%d" % (stem, num)
        if label not in ground:
            return label


def single_element_extensions(mat, label=None):
    """The bounded catalog of principal extensions, one per flat of
    positive rank, as a list of ExtensionMap. The new element is called
    label, or a fresh label when none is given."""
    if label is None:
        label = fresh_label(mat)
    return [principal_extension(mat, flat, label)
            for flat in mat.flats() if mat.rank(flat) > 0]


def _tie_position(mat, tie_order):
    if tie_order is None:
        return dict((i, i) for i in range(mat.get_size()))
    order = [mat.index(t) if not isinstance(t, int) else t
             for t in tie_order]
    return dict((elem, pos) for pos, elem in enumerate(order))


def greedy_basis(mat, weights, tie_order=None):
    """Build a basis by descending weight, adding an element whenever it
    increases the rank; ties follow tie_order (default: ground order).

    :type weights: list of numbers
    :param weights: one weight per element

    :rtype: frozenset
    :returns: the greedy basis"""
    pos = _tie_position(mat, tie_order)
    order = sorted(range(mat.get_size()), key=lambda i: (-weights[i], pos[i]))
    chosen = frozenset()
    for elem in order:
        if mat.rank(chosen | set([elem])) > len(chosen):
            chosen = chosen | set([elem])
        if len(chosen) == mat.get_rank():
            break
    return chosen


def max_weight_basis_bruteforce(mat, weights):
    """Enumerate all bases and return one of maximal total weight (the
    lexicographically first in index order among ties)."""
    best, best_weight = None, None
    for bas in mat.get_bases():
        total = sum(weights[i] for i in bas)
        if best_weight is None or total > best_weight:
            best, best_weight = bas, total
    return frozenset(best)


def initial_forms(mat, weights):
    """Return the elements that are strictly minimal in some circuit."""
    found = set()
    for circ in mat.circuits():
        low = min(weights[i] for i in circ)
        at_low = [i for i in circ if weights[i] == low]
        if len(at_low) == 1:
            found.add(at_low[0])
    return frozenset(found)


def lex_max_basis(mat, weights):
    """Return the basis whose weights, read in descending order, are
    lexicographically maximal."""
    return frozenset(max(mat.get_bases(), key=lambda b: sorted(
        (weights[i] for i in b), reverse=True)))


def initial_matroid(mat, weights):
    """The matroid of bases of maximal weight (the winners of the Groebner
    cone containing the weight vector)."""
    totals = dict((b, sum(weights[i] for i in b)) for b in mat.get_bases())
    top = max(totals.values())
    return Matroid(mat.get_ground(),
                   [b for b, tot in totals.items() if tot == top],
                   check=False, allow_loops=True)


def push_flag_point(phi, vec):
    """Apply phi_* to a Bergman point without checking phi: span the image
    of every flat of its flag in the target and read the point back."""
    from .bergman import flag_filtration, point_from_flag
    target = phi.get_target()
    steps = [(thr, target.closure(phi.image(flat)))
             for thr, flat in flag_filtration(phi.get_source(), vec)]
    return point_from_flag(target, steps)


def pushforward_point(phi, vec):
    """The image of a Bergman point of the source under the extension:
    every flat of its flag is replaced by the span of its image."""
    try:
        ok = is_extension(phi)
    except (RankMismatch, NotInjective) as exc:
        raise NotAnExtension("%r is not an extension: %s" % (phi, exc))
    if not ok:
        raise NotAnExtension("%r does not preserve bases" % phi)
    return push_flag_point(phi, vec)
