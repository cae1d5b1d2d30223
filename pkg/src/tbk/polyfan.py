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
"""Module containing smooth complete fans, their walls and cones, rational
polyhedra in character space, lattice point enumeration and normal fan
tests.

Rays are primitive integer vectors of N = Z^d, maximal cones are sets of d
ray indices whose ray matrix is unimodular. A polyhedron is a system of
inequalities <u, a_k> <= b_k over the character space; the polyhedra built
from a fan keep one inequality per ray, in ray order."""
import itertools
import logging
import math
import threading
from fractions import Fraction

from . import linalg
from .errors import (NonMaximalCone, NotComplete, NotSmooth, PointNotCovered,
                     UnboundedPolyhedron, UnknownFan)

LOGGER = logging.getLogger(__name__)


class Wall(object):
    """A codimension one cone tau with its two adjacent maximal cones.

    The wall relation v(rho+) + v(rho-) = sum a_rho v(rho) over the rays
    of tau is stored in ``coefficients``."""

    def __init__(self, tau, sigma_plus, sigma_minus, rho_plus, rho_minus,
                 coefficients):
        self.tau = tuple(tau)
        self.sigma_plus = tuple(sigma_plus)
        self.sigma_minus = tuple(sigma_minus)
        self.rho_plus = rho_plus
        self.rho_minus = rho_minus
        self.coefficients = dict(coefficients)

    def as_tuple(self):
        return (self.tau, self.sigma_plus, self.sigma_minus,
                self.rho_plus, self.rho_minus)

    def __repr__(self):
        return "Wall(tau=%s, rho+=%d, rho-=%d)" % (list(self.tau),
                                                   self.rho_plus,
                                                   self.rho_minus)


class Fan(object):
    """A smooth complete fan.

    :type dim: integer
    :param dim: the rank d of the lattice N

    :type rays: list of integer tuples
    :param rays: the primitive ray generators

    :type max_cones: list of integer lists
    :param max_cones: the maximal cones as sets of d ray indices

    :type ray_labels: list of strings
    :param ray_labels: optional names of the rays, used in reports"""

    def __init__(self, dim, rays, max_cones, ray_labels=None, name=None):
        self._dim = int(dim)
        self._rays = tuple(tuple(int(c) for c in ray) for ray in rays)
        self._max_cones = tuple(tuple(sorted(c)) for c in max_cones)
        if ray_labels is None:
            ray_labels = [str(i) for i in range(len(self._rays))]
        self._ray_labels = tuple(str(lab) for lab in ray_labels)
        self._name = name
        self._lock = threading.Lock()
        self._inverses = {}
        self._walls = None
        self._cones = None
        self._check()

    def _check(self):
        if self._dim < 1:
            raise NotSmooth("fans of dimension %d are not supported"
                            % self._dim)
        for idx, ray in enumerate(self._rays):
            if len(ray) != self._dim:
                raise NotSmooth("ray %d has length %d" % (idx, len(ray)))
            gcd = 0
            for coord in ray:
                gcd = math.gcd(gcd, coord)
            if gcd != 1:
                raise NotSmooth("ray %d %s is not primitive" % (idx, ray))
        if not self._max_cones:
            raise NotComplete("a fan needs maximal cones")
        for cone in self._max_cones:
            if len(cone) != self._dim or len(set(cone)) != self._dim:
                raise NotSmooth("cone %s is not simplicial of dimension %d"
                                % (list(cone), self._dim))
            if any(not 0 <= i < len(self._rays) for i in cone):
                raise NotSmooth("cone %s references unknown rays"
                                % list(cone))
            if abs(linalg.determinant([self._rays[i] for i in cone])) != 1:
                raise NotSmooth("cone %s is not unimodular" % list(cone))
        self._walls = self._find_walls()

    def _find_walls(self):
        faces = {}
        for cone in self._max_cones:
            for face in itertools.combinations(cone, self._dim - 1):
                faces.setdefault(face, []).append(cone)
        order = dict((c, i) for i, c in enumerate(self._max_cones))
        walls = []
        for face in sorted(faces,
                           key=lambda f: min(order[c] for c in faces[f])):
            cones = faces[face]
            if len(cones) != 2:
                raise NotComplete("face %s lies in %d maximal cones"
                                  % (list(face), len(cones)))
            plus, minus = cones
            rho_p = [i for i in plus if i not in face][0]
            rho_m = [i for i in minus if i not in face][0]
            coords = self.cone_coordinates(plus, self._rays[rho_m])
            pos = dict((ray, c) for ray, c in zip(plus, coords))
            if pos[rho_p] != -1:
                raise NotComplete("cones %s and %s overlap across %s"
                                  % (list(plus), list(minus), list(face)))
            walls.append(Wall(face, plus, minus, rho_p, rho_m,
                              dict((r, int(pos[r])) for r in face)))
        # connected dual graph
        neighbours = {}
        for wall in walls:
            neighbours.setdefault(wall.sigma_plus, []).append(wall.sigma_minus)
            neighbours.setdefault(wall.sigma_minus, []).append(wall.sigma_plus)
        seen = set([self._max_cones[0]])
        todo = [self._max_cones[0]]
        while todo:
            for two in neighbours.get(todo.pop(), []):
                if two not in seen:
                    seen.add(two)
                    todo.append(two)
        if len(seen) != len(set(self._max_cones)):
            raise NotComplete("the dual graph of the fan is not connected")
        return tuple(walls)

    def __repr__(self):
        return "Fan(%s, dim=%d, %d rays, %d maximal cones)" % (
            self._name or 'custom', self._dim, len(self._rays),
            len(self._max_cones))

    def __eq__(self, other):
        return isinstance(other, Fan) and self._dim == other._dim and \
            self._rays == other._rays and \
            set(self._max_cones) == set(other._max_cones)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._dim, self._rays))

    def get_dim(self):
        return self._dim

    def get_rays(self):
        return self._rays

    def get_ray(self, idx):
        return self._rays[idx]

    def get_ray_labels(self):
        return self._ray_labels

    def get_name(self):
        return self._name

    def get_max_cones(self):
        return self._max_cones

    def get_walls(self):
        return self._walls

    def is_maximal(self, cone):
        return tuple(sorted(cone)) in self._max_cones

    def cones(self):
        """All the cones of the fan, {0} included, as sorted ray index
        tuples ordered by dimension."""
        with self._lock:
            if self._cones is not None:
                return self._cones
        found = set()
        for cone in self._max_cones:
            for size in range(self._dim + 1):
                found.update(itertools.combinations(cone, size))
        cones = tuple(sorted(found, key=lambda c: (len(c), c)))
        with self._lock:
            self._cones = cones
        return cones

    def codim(self, cone):
        return self._dim - len(cone)

    def _inverse(self, cone):
        cone = tuple(sorted(cone))
        if cone not in self._max_cones:
            raise NonMaximalCone("%s is not a maximal cone" % list(cone))
        with self._lock:
            if cone in self._inverses:
                return self._inverses[cone]
        inv = linalg.unimodular_inverse([self._rays[i] for i in cone])
        with self._lock:
            self._inverses[cone] = inv
        return inv

    def cone_coordinates(self, cone, point):
        """Write a point as sum c_rho v(rho) over the rays of a maximal
        cone; returns the coefficients in the sorted ray order."""
        inv = self._inverse(cone)
        return tuple(sum(Fraction(inv[i][j]) * point[i]
                         for i in range(self._dim))
                     for j in range(self._dim))

    def solve_character(self, cone, values):
        """Return the character u with <u, v(rho)> = values[k] for the k-th
        ray of the maximal cone (unimodular integral solve)."""
        inv = self._inverse(cone)
        return tuple(sum(inv[i][j] * values[j] for j in range(self._dim))
                     for i in range(self._dim))


class PermutahedralFan(Fan):
    """The permutahedral fan of [m] realized in Z^(m-1) through
    x -> (x_i - x_m). Rays are indexed by the proper nonempty subsets S,
    maximal cones by the permutations of [m]."""

    def __init__(self, size):
        if size < 2:
            raise UnknownFan("the permutahedral fan needs m >= 2")
        self._size = size
        subsets = []
        for card in range(1, size):
            subsets.extend(itertools.combinations(range(1, size + 1), card))
        self._subsets = tuple(frozenset(s) for s in subsets)
        pos = dict((s, i) for i, s in enumerate(self._subsets))
        rays = [self.project(dict((i, int(i in s))
                                  for i in range(1, size + 1)))
                for s in self._subsets]
        self._perms = tuple(itertools.permutations(range(1, size + 1)))
        cones = [[pos[frozenset(perm[:k])] for k in range(1, size)]
                 for perm in self._perms]
        labels = ['{%s}' % ','.join(str(i) for i in sorted(s))
                  for s in self._subsets]
        Fan.__init__(self, size - 1, rays, cones, labels, 'perm:%d' % size)

    def project(self, point):
        """Image of a point of Z^m (dict or sequence indexed from 1) in the
        quotient lattice Z^(m-1)."""
        if not isinstance(point, dict):
            point = dict((i + 1, v) for i, v in enumerate(point))
        return tuple(point[i] - point[self._size]
                     for i in range(1, self._size))

    def get_size(self):
        return self._size

    def get_subsets(self):
        return self._subsets

    def get_permutations(self):
        return self._perms

    def ray_of_subset(self, subset):
        return self._subsets.index(frozenset(subset))

    def cone_of_permutation(self, perm):
        return tuple(sorted(self.ray_of_subset(perm[:k])
                            for k in range(1, self._size)))

    def permutation_of_cone(self, cone):
        """The permutation whose chain of initial segments is the cone."""
        chain = sorted((self._subsets[i] for i in cone), key=len)
        perm, prev = [], frozenset()
        for subset in chain:
            perm.extend(sorted(subset - prev))
            prev = subset
        perm.extend(sorted(frozenset(range(1, self._size + 1)) - prev))
        return tuple(perm)


def fan_p1():
    return Fan(1, [(1,), (-1,)], [(0,), (1,)], name='p1')


def fan_p2():
    return Fan(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)],
               name='p2')


def fan_pn(dim):
    """The fan of projective space of dimension ``dim``."""
    if dim < 1:
        raise UnknownFan("projective spaces need n >= 1")
    rays = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays.append(tuple([-1] * dim))
    cones = itertools.combinations(range(dim + 1), dim)
    return Fan(dim, rays, cones, name='pn:%d' % dim)


def fan_p1xp1():
    return Fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)],
               [(0, 1), (1, 2), (2, 3), (0, 3)], name='p1xp1')


def permutahedral_fan(size):
    return PermutahedralFan(size)


def fan_by_name(name):
    """Return a built-in fan: "p1", "p2", "pn:n", "p1xp1" or "perm:m"."""
    name = name.strip().lower()
    try:
        if name == 'p1':
            return fan_p1()
        if name == 'p2':
            return fan_p2()
        if name == 'p1xp1':
            return fan_p1xp1()
        if name.startswith('pn:'):
            return fan_pn(int(name[3:]))
        if name.startswith('perm:'):
            return permutahedral_fan(int(name[5:]))
    except ValueError:
        pass
    raise UnknownFan("unknown fan %r" % name)


def cone_containing(fan, point):
    """Return the minimal cone of the fan containing a rational point.

    :rtype: tuple
    :returns: the sorted ray indices of the cone"""
    if len(point) != fan.get_dim():
        raise PointNotCovered("point %s has the wrong dimension"
                              % list(point))
    for cone in fan.get_max_cones():
        coords = fan.cone_coordinates(cone, point)
        if all(c >= 0 for c in coords):
            return tuple(r for r, c in zip(cone, coords) if c > 0)
    raise PointNotCovered("no cone contains %s" % list(point))


def maximal_cone_containing(fan, point):
    """Return a maximal cone containing the point together with the
    coordinates of the point on its rays."""
    for cone in fan.get_max_cones():
        coords = fan.cone_coordinates(cone, point)
        if all(c >= 0 for c in coords):
            return cone, coords
    raise PointNotCovered("no cone contains %s" % list(point))


def wall_list(fan):
    """The walls of the fan as (tau, sigma+, sigma-, rho+, rho-) tuples."""
    return [wall.as_tuple() for wall in fan.get_walls()]


class LineBundle(object):
    """A torus-linearized line bundle, given by one integer per ray."""

    def __init__(self, values):
        self._values = tuple(int(v) for v in values)

    def get_values(self):
        return self._values

    def __len__(self):
        return len(self._values)

    def __getitem__(self, idx):
        return self._values[idx]

    def __mul__(self, factor):
        return LineBundle(factor * v for v in self._values)

    __rmul__ = __mul__

    def __repr__(self):
        return "LineBundle(%s)" % list(self._values)


class Polyhedron(object):
    """The polyhedron {u | <u, a_k> <= b_k for every k}.

    :type inequalities: list of (normal, bound) pairs
    :param inequalities: integer normals and rational bounds"""

    def __init__(self, inequalities, dim=None):
        self._ineqs = tuple((tuple(a), b) for a, b in inequalities)
        if dim is None:
            if not self._ineqs:
                raise ValueError("the dimension of an empty system is needed")
            dim = len(self._ineqs[0][0])
        self._dim = dim
        self._vertices = None

    def get_inequalities(self):
        return self._ineqs

    def get_dim(self):
        return self._dim

    def get_bounds(self):
        return tuple(b for _, b in self._ineqs)

    def __repr__(self):
        return "Polyhedron(%s)" % ", ".join(
            "<u,%s> <= %s" % (list(a), b) for a, b in self._ineqs)

    def __eq__(self, other):
        return isinstance(other, Polyhedron) and self._ineqs == other._ineqs

    def __ne__(self, other):
        return not self == other

    def contains(self, point):
        return all(sum(x * y for x, y in zip(a, point)) <= b
                   for a, b in self._ineqs)

    def restrict(self, keep):
        """The polyhedron keeping only the inequalities of the given
        indices (for a fan polyhedron: the rays of a cone)."""
        return Polyhedron([self._ineqs[k] for k in sorted(keep)], self._dim)

    def is_bounded(self):
        """A polyhedron is bounded iff its recession cone {y | Ay <= 0} is
        reduced to 0: the normals span and no extreme ray exists."""
        normals = [a for a, _ in self._ineqs]
        if linalg.rank(normals) < self._dim:
            return False
        for comb in itertools.combinations(normals, self._dim - 1):
            kernel = linalg.nullspace(list(comb), self._dim)
            if len(kernel) != 1:
                continue
            for sign in (1, -1):
                ray = [sign * c for c in kernel[0]]
                if all(sum(x * y for x, y in zip(a, ray)) <= 0
                       for a in normals):
                    return False
        return True

    def vertices(self):
        """The vertices, by brute force over the square subsystems."""
        if self._vertices is not None:
            return self._vertices
        found = set()
        for comb in itertools.combinations(self._ineqs, self._dim):
            sol = linalg.solve([a for a, _ in comb], [b for _, b in comb])
            if sol is not None and self.contains(sol):
                found.add(sol)
        self._vertices = tuple(sorted(found))
        return self._vertices

    def lattice_points(self):
        """All integer points, enumerated over the bounding box of the
        vertices.

        :rtype: list of integer tuples"""
        if not self.is_bounded():
            raise UnboundedPolyhedron("%r is unbounded" % self)
        verts = self.vertices()
        if not verts:
            return []
        lows = [int(math.ceil(min(v[i] for v in verts)))
                for i in range(self._dim)]
        highs = [int(math.floor(max(v[i] for v in verts)))
                 for i in range(self._dim)]
        return [pt for pt in box_points(lows, highs) if self.contains(pt)]

    def to_dict(self, with_vertices=False):
        from .utils import format_rational
        data = {'ineqs': [{'normal': list(a), 'bound': format_rational(b)}
                          for a, b in self._ineqs]}
        if with_vertices and self.is_bounded():
            data['vertices'] = [[format_rational(c) for c in v]
                                for v in self.vertices()]
        return data


def box_points(lows, highs):
    """All integer points of the box [lows, highs]."""
    return itertools.product(*[range(lo, hi + 1)
                               for lo, hi in zip(lows, highs)])


def polytope_from_column(fan, column):
    """The polyhedron <u, v(rho)> <= column[rho] over all rays."""
    if len(column) != len(fan.get_rays()):
        raise ValueError("a column needs one value per ray")
    return Polyhedron(list(zip(fan.get_rays(), column)), fan.get_dim())


def line_bundle_polytope(fan, line_bundle):
    return polytope_from_column(fan, line_bundle.get_values())


def contains(poly, point):
    return poly.contains(point)


def lattice_points(poly):
    return poly.lattice_points()


def vertex_in_direction(poly, cone, fan):
    """Solve <u, v(rho)> = b_rho over the rays of a maximal cone; return u
    if it lies in the polyhedron, None otherwise."""
    cone = tuple(sorted(cone))
    if not fan.is_maximal(cone):
        raise NonMaximalCone("%s is not a maximal cone" % list(cone))
    bounds = poly.get_bounds()
    point = fan.solve_character(cone, [bounds[r] for r in cone])
    if poly.contains(point):
        return point
    return None


def virtual_vertices(fan, column):
    """The solutions of the cone systems of every maximal cone, whether
    they lie in the polyhedron or not."""
    return [fan.solve_character(cone, [column[r] for r in cone])
            for cone in fan.get_max_cones()]


def has_normal_fan(poly, fan):
    """Test whether the outer normal fan of a fan polyhedron is the fan:
    every maximal cone has its vertex and the support numbers are strictly
    convex across every wall."""
    verts = {}
    for cone in fan.get_max_cones():
        vert = vertex_in_direction(poly, cone, fan)
        if vert is None:
            return False
        verts[cone] = vert
    bounds = poly.get_bounds()
    rays = fan.get_rays()
    for wall in fan.get_walls():
        for cone, ray in ((wall.sigma_minus, wall.rho_plus),
                          (wall.sigma_plus, wall.rho_minus)):
            value = sum(x * y for x, y in zip(verts[cone], rays[ray]))
            if value >= bounds[ray]:
                return False
    return True


def brianchon_gram(poly, fan, point):
    """The alternating sum over all cones of the indicator functions of
    the polyhedra keeping only the inequalities of the cone."""
    total = 0
    for cone in fan.cones():
        if poly.restrict(cone).contains(point):
            total += (-1) ** fan.codim(cone)
    return total
