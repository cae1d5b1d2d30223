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
"""Module containing the TropicalBundle class: a matroid, a smooth complete
fan and a diagram (one Bergman point of the matroid per ray) whose rows of
every maximal cone share an apartment.

From the diagram the module computes Klyachko flats, the parliament of
polytopes, graded sections and equivariant Euler characteristics, the
equivariant K-class and Chern classes, twists and pullbacks, restrictions to
the torus invariant curves with their splitting types, and global
generation."""
import itertools
import logging
import math
from fractions import Fraction

import sympy as sp

from . import TConf
from .bergman import (apartment_contains, common_adapted_bases,
                      flag_filtration, is_bergman_point, phi_B)
from .errors import (ConeImageNotContained, DimensionMismatch,
                     NoCommonApartment, NotAmple, NotAWall, RowNotBergman,
                     TooLarge, UnboundedSupport, WrongFan)
from .matroid import restriction
from .polyfan import (Fan, LineBundle, Wall, box_points, fan_p1,
                      has_normal_fan, line_bundle_polytope,
                      maximal_cone_containing, polytope_from_column,
                      vertex_in_direction, virtual_vertices)
from .utils import Timer, parallel_map

CONFIGURATION = TConf()
LOGGER = logging.getLogger(__name__)

YES = 'yes'
NO = 'no'
UNSPLIT = 'unsplit-within-matroid'


class TropicalBundle(object):
    """A tropical toric vector bundle given by its diagram.

    Use :func:`validate_bundle` to build one: the constructor trusts its
    arguments.

    :type matroid: Matroid
    :param matroid: the matroid of the fibers

    :type fan: Fan
    :param fan: the fan of the base toric variety

    :type diagram: list of integer lists
    :param diagram: one row per ray, one column per element

    :type certificates: dictionary
    :param certificates: an adapted basis for every maximal cone"""

    def __init__(self, matroid, fan, diagram, certificates):
        self._matroid = matroid
        self._fan = fan
        self._diagram = tuple(tuple(int(v) for v in row) for row in diagram)
        self._certificates = dict(certificates)

    def __eq__(self, other):
        return isinstance(other, TropicalBundle) and \
            self._matroid == other._matroid and self._fan == other._fan and \
            self._diagram == other._diagram

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._diagram)

    def __repr__(self):
        return "TropicalBundle(rank %d over %r, %d x %d diagram)" % (
            self._matroid.get_rank(), self._fan, len(self._diagram),
            self._matroid.get_size())

    def get_matroid(self):
        return self._matroid

    def get_fan(self):
        return self._fan

    def get_diagram(self):
        return self._diagram

    def get_row(self, ray):
        return self._diagram[ray]

    def get_column(self, elem):
        return tuple(row[elem] for row in self._diagram)

    def get_rank(self):
        return self._matroid.get_rank()

    def get_certificate(self, cone):
        """The adapted basis certified for a maximal cone."""
        return self._certificates[tuple(sorted(cone))]

    def get_certificates(self):
        return dict(self._certificates)


class CurveBundle(TropicalBundle):
    """The restriction of a bundle to the torus invariant curve of a wall,
    a bundle over the projective line.

    The shift is the value of the bundle on the combination of the rays of
    the wall given by the wall relation; degrees of the splitting are
    row+ + row- - shift on a common adapted basis."""

    def __init__(self, matroid, diagram, certificates, shift, wall=None,
                 columns=None):
        TropicalBundle.__init__(self, matroid, fan_p1(), diagram,
                                certificates)
        self._shift = tuple(shift)
        self._wall = wall
        self._columns = columns

    def get_shift(self):
        return self._shift

    def get_wall(self):
        return self._wall

    def get_columns(self):
        """The element indices of the restricted bundle in the original
        matroid."""
        return self._columns


def _lex_smallest_common_basis(mat, rows):
    for bas in mat.get_bases():
        if all(apartment_contains(mat, bas, row) for row in rows):
            return frozenset(bas)
    return None


def validate_bundle(matroid, fan, diagram, certificates=None):
    """Check a diagram and return the bundle it defines.

    Every row must be a Bergman point and the rows of each maximal cone
    must lie in a common apartment; the certificate of a cone is the
    lexicographically smallest adapted basis unless one is supplied.

    :type certificates: dictionary
    :param certificates: optional adapted bases per maximal cone, checked

    :rtype: TropicalBundle"""
    rays = fan.get_rays()
    diagram = [tuple(int(v) for v in row) for row in diagram]
    if len(diagram) != len(rays):
        raise DimensionMismatch("diagram has %d rows for %d rays"
                                % (len(diagram), len(rays)))
    for idx, row in enumerate(diagram):
        if len(row) != matroid.get_size():
            raise DimensionMismatch("row %d has %d entries for %d elements"
                                    % (idx, len(row), matroid.get_size()))
        if not is_bergman_point(matroid, row):
            raise RowNotBergman(idx, row)

    def _certify(cone):
        rows = [diagram[r] for r in cone]
        if certificates is not None and cone in certificates:
            bas = frozenset(certificates[cone])
            if matroid.is_basis(bas) and \
                    all(apartment_contains(matroid, bas, row) for row in rows):
                return bas
        return _lex_smallest_common_basis(matroid, rows)

    cones = list(fan.get_max_cones())
    found = parallel_map(_certify, cones)
    certs = {}
    for cone, bas in zip(cones, found):
        if bas is None:
            raise NoCommonApartment(cone)
        certs[cone] = bas
    return TropicalBundle(matroid, fan, diagram, certs)


def klyachko_flat(bundle, ray, threshold):
    """The flat {e | D[ray, e] >= threshold}."""
    row = bundle.get_row(ray)
    return bundle.get_matroid().check_flat(
        i for i, v in enumerate(row) if v >= threshold)


def klyachko_intersection(bundle, thresholds, rays=None):
    """The intersection of the Klyachko flats F^rho_t over the given rays
    (all rays by default), the flat of a Cox summand."""
    if rays is None:
        rays = range(len(bundle.get_fan().get_rays()))
    rays = list(rays)
    if len(rays) != len(thresholds):
        raise DimensionMismatch("%d thresholds for %d rays"
                                % (len(thresholds), len(rays)))
    flat = frozenset(range(bundle.get_matroid().get_size()))
    for ray, thr in zip(rays, thresholds):
        flat &= klyachko_flat(bundle, ray, thr)
    return flat


def _exact(value):
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return value


def phi_at(bundle, point):
    """The Bergman point Phi(x) of a point of N: x is written on the rays
    of a maximal cone containing it and the basis values are extended by
    phi_B of the certified basis."""
    fan, mat = bundle.get_fan(), bundle.get_matroid()
    cone, coords = maximal_cone_containing(fan, point)
    basis = bundle.get_certificate(cone)
    values = dict((b, sum(c * bundle.get_row(r)[b]
                          for r, c in zip(cone, coords)))
                  for b in basis)
    return tuple(_exact(v) for v in phi_B(mat, basis, values))


def evaluate_v(bundle, elem, point):
    """The value of the piecewise linear function of an element."""
    return phi_at(bundle, point)[elem]


class SectionReport(object):
    """The flat of sections of a given character and its rank."""

    def __init__(self, matroid, character, flat):
        self._matroid = matroid
        self._character = tuple(character)
        self._flat = frozenset(flat)

    def get_character(self):
        return self._character

    def get_flat(self):
        return self._flat

    def get_flat_labels(self):
        return self._matroid.labels(self._flat)

    def get_rank(self):
        return self._matroid.rank(self._flat)

    def to_dict(self):
        return {'flat': sorted(self.get_flat_labels()),
                'rank': self.get_rank()}

    def __repr__(self):
        return "SectionReport(u=%s, flat=%s, rank=%d)" % (
            list(self._character), self.get_flat_labels(), self.get_rank())


def parliament(bundle):
    """The parliament of polytopes: element index -> Polyhedron built from
    the diagram column of the element."""
    fan = bundle.get_fan()
    return dict((e, polytope_from_column(fan, bundle.get_column(e)))
                for e in range(bundle.get_matroid().get_size()))


def _sections(bundle, character, rays):
    rays_vec = bundle.get_fan().get_rays()
    pairing = [sum(a * b for a, b in zip(character, rays_vec[r]))
               for r in rays]
    flat = frozenset(e for e in range(bundle.get_matroid().get_size())
                     if all(p <= bundle.get_row(r)[e]
                            for p, r in zip(pairing, rays)))
    bundle.get_matroid().check_flat(flat)
    return SectionReport(bundle.get_matroid(), character, flat)


def h0_u(bundle, character):
    """The global sections of degree u: the elements whose parliament
    member contains u."""
    if len(character) != bundle.get_fan().get_dim():
        raise DimensionMismatch("character %s has the wrong dimension"
                                % list(character))
    return _sections(bundle, character, range(len(bundle.get_fan().get_rays())))


def h0_u_sigma(bundle, cone, character):
    """The sections of degree u over the affine chart of a cone."""
    return _sections(bundle, character, sorted(cone))


def matroid_fiber(bundle, cone, character):
    """The matroid induced on the flat of sections of degree u over the
    chart of a cone."""
    report = h0_u_sigma(bundle, cone, character)
    return restriction(bundle.get_matroid(), report.get_flat())


def chi_u(bundle, character):
    """The equivariant Euler characteristic of degree u: the alternating
    sum over all cones, {0} included, of the ranks of the section flats."""
    fan = bundle.get_fan()
    return sum((-1) ** fan.codim(cone) *
               h0_u_sigma(bundle, cone, character).get_rank()
               for cone in fan.cones())


def flat_polytope(bundle, flat):
    """The polytope P_{D,F} of the row-wise minimum of the columns of F."""
    flat = sorted(flat)
    if not flat:
        raise ValueError("flat polytopes need a nonempty flat")
    column = [min(row[e] for e in flat) for row in bundle.get_diagram()]
    return polytope_from_column(bundle.get_fan(), column)


def _positive_flats(matroid):
    return [f for f in matroid.flats() if matroid.rank(f) > 0]


def support_box(bundle):
    """The integer box containing the actual and virtual vertices of every
    flat polytope of positive rank, with the configured margin.

    :rtype: tuple
    :returns: lows and highs"""
    fan = bundle.get_fan()
    points = []
    for flat in _positive_flats(bundle.get_matroid()):
        poly = flat_polytope(bundle, flat)
        if not poly.is_bounded():
            raise UnboundedSupport("P_{D,F} of flat %s is unbounded"
                                   % bundle.get_matroid().labels(flat))
        points.extend(virtual_vertices(fan, poly.get_bounds()))
    margin = CONFIGURATION.BOX_MARGIN
    dim = fan.get_dim()
    lows = [int(math.floor(min(p[i] for p in points))) - margin
            for i in range(dim)]
    highs = [int(math.ceil(max(p[i] for p in points))) + margin
             for i in range(dim)]
    return lows, highs


def _sum_over_box(bundle, func, what):
    lows, highs = support_box(bundle)
    points = list(box_points(lows, highs))
    chunks = max(1, CONFIGURATION.THREADS)
    with Timer("%s over %d characters" % (what, len(points)), LOGGER):
        parts = parallel_map(lambda chunk: sum(func(bundle, u)
                                               for u in chunk),
                             [points[i::chunks] for i in range(chunks)])
    return sum(parts)


def h0_total(bundle):
    """The dimension of the space of global sections."""
    return _sum_over_box(bundle, lambda b, u: h0_u(b, u).get_rank(), 'h0')


def chi_total(bundle):
    """The Euler characteristic, sum of chi_u over all characters."""
    return _sum_over_box(bundle, chi_u, 'chi')


def _moebius_coefficients(matroid):
    flats = matroid.flats()
    coeffs = {}
    for top in flats:
        below = sorted((f for f in flats if f <= top), key=len, reverse=True)
        # mu(G, top), from top downwards
        mu = {}
        for low in below:
            if low == top:
                mu[low] = 1
            else:
                mu[low] = -sum(mu[k] for k in mu if low < k)
        coeffs[top] = sum(mu[g] * matroid.rank(g) for g in below)
    return coeffs


def flat_coefficients(matroid, method='inclusion-exclusion'):
    """The coefficients c_F with rank(H) = sum_{F <= H} c_F for every flat
    H, so that h0_u = sum_F c_F I_{D,F}(u).

    The default method expands, rank level by rank level, the indicator
    that H contains some flat of that rank by inclusion-exclusion over the
    families of flats of the level; "moebius" inverts the rank function on
    the lattice of flats instead.

    :rtype: dictionary
    :returns: flat -> integer coefficient, over all flats"""
    if method == 'moebius':
        return _moebius_coefficients(matroid)
    if matroid.get_size() > CONFIGURATION.MAX_FLAT_COEFF_ELEMENTS:
        raise TooLarge("flat coefficients by inclusion-exclusion are "
                       "limited to %d elements"
                       % CONFIGURATION.MAX_FLAT_COEFF_ELEMENTS)
    coeffs = dict((f, 0) for f in matroid.flats())
    for level in range(1, matroid.get_rank() + 1):
        family = matroid.flats_of_rank(level)
        if len(family) > 16:
            raise TooLarge("%d flats of rank %d" % (len(family), level))
        for size in range(1, len(family) + 1):
            for comb in itertools.combinations(family, size):
                span = matroid.closure(frozenset().union(*comb))
                coeffs[span] += (-1) ** (size + 1)
    return coeffs


def h0_u_via_flats(bundle, character, coefficients=None):
    """The rank of the sections of degree u through the flat indicator
    decomposition sum_F c_F I_{D,F}(u)."""
    if coefficients is None:
        coefficients = flat_coefficients(bundle.get_matroid())
    total = 0
    for flat, coeff in coefficients.items():
        if coeff and flat and flat_polytope(bundle, flat).contains(character):
            total += coeff
    return total


class EquivariantClassData(object):
    """The characters of a bundle on every maximal cone."""

    def __init__(self, fan, characters):
        self._fan = fan
        self._characters = dict((c, tuple(sorted(v)))
                                for c, v in characters.items())

    def get_cones(self):
        return sorted(self._characters)

    def get_characters(self, cone):
        return self._characters[tuple(sorted(cone))]

    def restrict_to_wall(self, wall, cone):
        """The multiset of the restrictions of the characters of a cone
        adjacent to the wall to the span of the wall."""
        rays = self._fan.get_rays()
        return sorted(tuple(sum(a * b for a, b in zip(u, rays[r]))
                            for r in wall.tau)
                      for u in self._characters[cone])

    def incompatible_walls(self):
        """The walls across which the character multisets disagree."""
        return [wall for wall in self._fan.get_walls()
                if self.restrict_to_wall(wall, wall.sigma_plus) !=
                self.restrict_to_wall(wall, wall.sigma_minus)]

    def __eq__(self, other):
        return isinstance(other, EquivariantClassData) and \
            self._characters == other._characters

    def __ne__(self, other):
        return not self == other

    def to_dict(self):
        return dict((','.join(str(r) for r in cone),
                     [list(u) for u in self._characters[cone]])
                    for cone in self.get_cones())


def characters_on_cone(bundle, cone):
    """The characters of the certified basis of a maximal cone, solving
    <u_b, v(rho)> = D[rho, b] for the rays of the cone.

    :rtype: list
    :returns: (element index, character) pairs in index order"""
    cone = tuple(sorted(cone))
    fan = bundle.get_fan()
    basis = bundle.get_certificate(cone)
    return [(b, fan.solve_character(cone, [bundle.get_row(r)[b]
                                           for r in cone]))
            for b in sorted(basis)]


def k_class(bundle):
    """The equivariant K-class as the character multisets of the maximal
    cones."""
    return EquivariantClassData(bundle.get_fan(), dict(
        (cone, [u for _, u in characters_on_cone(bundle, cone)])
        for cone in bundle.get_fan().get_max_cones()))


def _variables(dim):
    return sp.symbols(' '.join('x%d' % (i + 1) for i in range(dim)) + ' ',
                      seq=True)


def _linear_forms(bundle, cone):
    xs = _variables(bundle.get_fan().get_dim())
    return [sum(c * x for c, x in zip(u, xs))
            for _, u in characters_on_cone(bundle, cone)]


def chern_class(bundle, index):
    """The equivariant Chern class c_i: on each maximal cone the i-th
    elementary symmetric polynomial of the linear forms of the characters.

    :rtype: dictionary
    :returns: maximal cone -> sympy polynomial expression"""
    result = {}
    tvar = sp.Symbol('t')
    for cone in bundle.get_fan().get_max_cones():
        gen = sp.expand(sp.prod([1 + tvar * f
                                 for f in _linear_forms(bundle, cone)]))
        result[cone] = sp.expand(gen.coeff(tvar, index))
    return result


def chern_character(bundle):
    """The equivariant Chern character truncated at the dimension of the
    fan: sum over k of the k-th power sum of the forms divided by k!."""
    dim = bundle.get_fan().get_dim()
    result = {}
    for cone in bundle.get_fan().get_max_cones():
        forms = _linear_forms(bundle, cone)
        result[cone] = sp.expand(sum(
            sp.Rational(1, math.factorial(k)) * sum(f ** k for f in forms)
            for k in range(dim + 1)))
    return result


def tensor_line_bundle(bundle, line_bundle):
    """Twist by a line bundle: add r_rho to the row of rho."""
    if not isinstance(line_bundle, LineBundle):
        line_bundle = LineBundle(line_bundle)
    if len(line_bundle) != len(bundle.get_diagram()):
        raise DimensionMismatch("line bundle of length %d for %d rays"
                                % (len(line_bundle), len(bundle.get_diagram())))
    diagram = [[v + shift for v in row]
               for row, shift in zip(bundle.get_diagram(),
                                     line_bundle.get_values())]
    return validate_bundle(bundle.get_matroid(), bundle.get_fan(), diagram,
                           bundle.get_certificates())


def _apply(lam, vec):
    return tuple(sum(a * b for a, b in zip(row, vec)) for row in lam)


def pullback_linear(bundle, lam, source_fan, certificates=None):
    """Pull back along a lattice map sending every cone of the source fan
    into a cone of the bundle's fan; the row of a source ray is Phi at the
    image of its generator.

    :type lam: list of integer lists
    :param lam: the matrix of the map, by rows"""
    fan = bundle.get_fan()
    for cone in source_fan.get_max_cones():
        images = [_apply(lam, source_fan.get_ray(r)) for r in cone]
        if not any(all(all(c >= 0 for c in fan.cone_coordinates(tgt, img))
                       for img in images)
                   for tgt in fan.get_max_cones()):
            raise ConeImageNotContained("image of cone %s lies in no cone"
                                        % list(cone))
    diagram = [phi_at(bundle, _apply(lam, ray))
               for ray in source_fan.get_rays()]
    return validate_bundle(bundle.get_matroid(), source_fan, diagram,
                           certificates)


def is_globally_generated(bundle):
    """Check global generation cone by cone: a maximal cone is accepted
    when some basis adapted to its rows has, for every element b, the
    character of b equal to the vertex of P_b in the direction of the cone.

    :rtype: tuple
    :returns: a boolean and the accepting basis (or None) per cone"""
    fan, mat = bundle.get_fan(), bundle.get_matroid()
    members = parliament(bundle)

    def _accept(cone):
        rows = [bundle.get_row(r) for r in cone]
        for bas in common_adapted_bases(mat, rows):
            if all(fan.solve_character(cone, [bundle.get_row(r)[b]
                                              for r in cone]) ==
                   vertex_in_direction(members[b], cone, fan)
                   for b in sorted(bas)):
                return bas
        return None

    cones = list(fan.get_max_cones())
    certs = dict(zip(cones, parallel_map(_accept, cones)))
    return all(v is not None for v in certs.values()), certs


def in_f_plus(bundle, shift=0, line_bundle=None):
    """Test whether every flat polytope of positive rank, twisted by
    shift times the line bundle, has outer normal fan the fan."""
    fan = bundle.get_fan()
    extra = [0] * len(fan.get_rays())
    if line_bundle is not None:
        extra = [shift * v for v in LineBundle(line_bundle).get_values()]
    for flat in _positive_flats(bundle.get_matroid()):
        column = [min(row[e] for e in flat) + add
                  for row, add in zip(bundle.get_diagram(), extra)]
        if not has_normal_fan(polytope_from_column(fan, column), fan):
            return False
    return True


def estimate_N0(bundle, line_bundle):
    """The smallest N >= 0 such that every flat polytope of positive rank
    of the twist by N L has outer normal fan the fan; from there on the
    Euler characteristic equals the sections degree by degree."""
    line_bundle = LineBundle(line_bundle)
    if not has_normal_fan(line_bundle_polytope(bundle.get_fan(),
                                               line_bundle),
                          bundle.get_fan()):
        raise NotAmple("%r is not ample on %r" % (line_bundle,
                                                  bundle.get_fan()))
    for shift in range(CONFIGURATION.MAX_N0_SEARCH + 1):
        if in_f_plus(bundle, shift, line_bundle):
            LOGGER.debug("N0 = %d", shift)
            return shift
    raise TooLarge("no N up to %d works" % CONFIGURATION.MAX_N0_SEARCH)


def h0_polynomial(bundle, line_bundle, start, count):
    """Interpolate N -> h0_total of the twist by N L on N = start ..
    start + d and check the remaining values up to start + count - 1.

    :rtype: tuple
    :returns: the sympy polynomial in N, the computed values, and whether
        every value is matched"""
    line_bundle = LineBundle(line_bundle)
    dim = bundle.get_fan().get_dim()
    values = [(n, h0_total(tensor_line_bundle(bundle, line_bundle * n)))
              for n in range(start, start + count)]
    var = sp.Symbol('N')
    poly = sp.expand(sp.interpolate(values[:dim + 1], var))
    exact = all(poly.subs(var, n) == v for n, v in values)
    return poly, values, exact


def u23_closed_form(diagram):
    """The section count of a rank two uniform bundle on three elements
    over the projective plane, for diagrams with ample flat polytopes."""
    cols = list(zip(*diagram))
    return (sum(math.comb(sum(col) + 2, 2) for col in cols) -
            math.comb(sum(min(row) for row in diagram) + 2, 2))


def _find_wall(fan, wall):
    walls = fan.get_walls()
    if isinstance(wall, Wall):
        for cand in walls:
            if cand.as_tuple() == wall.as_tuple():
                return cand
    elif isinstance(wall, int):
        if 0 <= wall < len(walls):
            return walls[wall]
    else:
        tau = tuple(sorted(wall))
        for cand in walls:
            if cand.tau == tau:
                return cand
    raise NotAWall("%r is not a wall of %r" % (wall, fan))


def _curve_bundle(bundle, wall, plus_basis, minus_basis):
    mat = bundle.get_matroid()
    columns = sorted(plus_basis | minus_basis)
    sub = restriction(mat, columns)
    rows = [[bundle.get_row(ray)[e] for e in columns]
            for ray in (wall.rho_plus, wall.rho_minus)]
    values = dict((b, sum(a * bundle.get_row(r)[b]
                          for r, a in wall.coefficients.items()))
                  for b in plus_basis)
    shift = phi_B(mat, plus_basis, values)
    pos = dict((old, new) for new, old in enumerate(columns))
    certs = {(0,): frozenset(pos[b] for b in plus_basis),
             (1,): frozenset(pos[b] for b in minus_basis)}
    return CurveBundle(sub, rows, certs, [shift[e] for e in columns],
                       wall, columns)


def restrict_to_curve(bundle, wall, all_choices=False):
    """Restrict to the curve of a wall: the matroid induced on the union of
    the adapted bases of the two adjacent maximal cones, with the rows of
    the two off-wall rays.

    :type wall: Wall, integer (index in the wall list) or ray tuple
    :param wall: the wall

    :type all_choices: boolean
    :param all_choices: return the restrictions for every pair of adapted
        bases instead of the certified one"""
    wall = _find_wall(bundle.get_fan(), wall)
    if not all_choices:
        return _curve_bundle(bundle, wall,
                             bundle.get_certificate(wall.sigma_plus),
                             bundle.get_certificate(wall.sigma_minus))
    mat = bundle.get_matroid()
    plus = common_adapted_bases(mat, [bundle.get_row(r)
                                      for r in wall.sigma_plus])
    minus = common_adapted_bases(mat, [bundle.get_row(r)
                                       for r in wall.sigma_minus])
    return [_curve_bundle(bundle, wall, bp, bm)
            for bp in plus for bm in minus]


class SplitResult(object):
    """A common adapted basis of a bundle over the projective line and the
    degrees of its line bundle summands."""

    def __init__(self, matroid, basis, degrees):
        self._matroid = matroid
        self._basis = frozenset(basis)
        self._degrees = dict(degrees)

    def get_basis(self):
        return self._basis

    def get_basis_labels(self):
        return self._matroid.labels(self._basis)

    def get_degrees(self):
        """The degree of every basis element."""
        return dict(self._degrees)

    def get_type(self):
        """The splitting type as a decreasing list of degrees."""
        return sorted(self._degrees.values(), reverse=True)

    def to_dict(self):
        return {'basis': self.get_basis_labels(),
                'degrees': [self._degrees[b] for b in sorted(self._basis)]}

    def __repr__(self):
        return "SplitResult(%s, type=%s)" % (self.get_basis_labels(),
                                             self.get_type())


def _p1_rows(bundle):
    fan = bundle.get_fan()
    rays = fan.get_rays()
    if fan.get_dim() != 1 or sorted(rays) != [(-1,), (1,)]:
        raise WrongFan("splitting is defined over the projective line, "
                       "not over %r" % fan)
    return bundle.get_row(rays.index((1,))), bundle.get_row(rays.index((-1,)))


def splits(bundle):
    """Search a basis adapted to both rows of a bundle over the projective
    line (and to the wall shift of a curve restriction).

    :rtype: SplitResult or None"""
    mat = bundle.get_matroid()
    plus, minus = _p1_rows(bundle)
    shift = getattr(bundle, 'get_shift', lambda: (0,) * mat.get_size())()
    flats = set()
    for row in (plus, minus, shift):
        flats.update(flag_filtration(mat, row).get_flats())
    for bas in mat.get_bases():
        bas = frozenset(bas)
        if all(mat.rank(bas & flat) == mat.rank(flat) for flat in flats):
            return SplitResult(mat, bas, dict(
                (b, plus[b] + minus[b] - shift[b]) for b in bas))
    return None


def wall_degrees(bundle):
    """Restrict to every wall and split.

    :rtype: list
    :returns: (wall, SplitResult or None) pairs in wall order"""
    walls = list(bundle.get_fan().get_walls())
    with Timer("splitting over %d walls" % len(walls), LOGGER):
        found = parallel_map(lambda w: splits(restrict_to_curve(bundle, w)),
                             walls)
    return list(zip(walls, found))


def _positivity(bundle, strict):
    verdict = YES
    for _, result in wall_degrees(bundle):
        if result is None:
            if verdict == YES:
                verdict = UNSPLIT
            continue
        low = min(result.get_type()) if result.get_type() else 0
        if low < 0 or (strict and low == 0):
            return NO
    return verdict


def is_nef(bundle):
    """yes if every curve restriction splits with degrees >= 0, no if some
    split restriction has a negative degree, unsplit-within-matroid
    otherwise."""
    return _positivity(bundle, False)


def is_ample(bundle):
    """As :func:`is_nef` with positive degrees."""
    return _positivity(bundle, True)
