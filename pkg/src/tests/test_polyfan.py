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

from tbk import polyfan as pf
from tbk.errors import (NonMaximalCone, NotComplete, NotSmooth,
                        PointNotCovered, UnboundedPolyhedron, UnknownFan)
from fractions import Fraction
import itertools
import unittest


class FanTest(unittest.TestCase):
    """tbk.polyfan fan tests"""

    def test_p2(self):
        fan = pf.fan_p2()
        self.assertEqual(fan.get_rays(), ((1, 0), (0, 1), (-1, -1)))
        self.assertEqual(len(fan.get_max_cones()), 3)
        self.assertEqual(len(fan.get_walls()), 3)
        self.assertEqual(len(fan.cones()), 7)
        self.assertEqual(fan.codim(()), 2)

    def test_wall_relation(self):
        for fan in (pf.fan_p2(), pf.fan_p1xp1(), pf.fan_pn(3),
                    pf.permutahedral_fan(3), pf.permutahedral_fan(4)):
            for wall in fan.get_walls():
                rays = fan.get_rays()
                lhs = [a + b for a, b in zip(rays[wall.rho_plus],
                                             rays[wall.rho_minus])]
                rhs = [sum(c * rays[r][i]
                           for r, c in wall.coefficients.items())
                       for i in range(fan.get_dim())]
                self.assertEqual(lhs, rhs)
                self.assertEqual(set(wall.coefficients), set(wall.tau))

    def test_p2_wall_on_e1(self):
        fan = pf.fan_p2()
        wall = [w for w in fan.get_walls() if w.tau == (0,)][0]
        self.assertEqual(set([wall.rho_plus, wall.rho_minus]), set([1, 2]))
        self.assertEqual(wall.coefficients, {0: -1})

    def test_not_smooth(self):
        self.assertRaises(NotSmooth, pf.Fan, 2, [(1, 0), (1, 2), (-1, -1)],
                          [(0, 1), (1, 2), (0, 2)])
        self.assertRaises(NotSmooth, pf.Fan, 1, [(2,), (-1,)], [(0,), (1,)])

    def test_not_complete(self):
        self.assertRaises(NotComplete, pf.Fan, 2,
                          [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2)])

    def test_cone_containing(self):
        fan = pf.fan_p2()
        self.assertEqual(pf.cone_containing(fan, (2, 1)), (0, 1))
        self.assertEqual(pf.cone_containing(fan, (3, 0)), (0,))
        self.assertEqual(pf.cone_containing(fan, (0, 0)), ())
        cone, coords = pf.maximal_cone_containing(fan, (-1, -1))
        self.assertIn(2, cone)
        self.assertRaises(PointNotCovered, pf.cone_containing, fan, (1,))
        self.assertRaises(NonMaximalCone, fan.cone_coordinates, (0,),
                          (1, 0))

    def test_solve_character(self):
        fan = pf.fan_p2()
        self.assertEqual(fan.solve_character((0, 1), [2, 0]), (2, 0))
        self.assertEqual(fan.solve_character((1, 2), [0, 3]), (-3, 0))

    def test_permutahedral(self):
        fan = pf.permutahedral_fan(3)
        self.assertEqual(fan.get_dim(), 2)
        self.assertEqual(len(fan.get_rays()), 6)
        self.assertEqual(len(fan.get_max_cones()), 6)
        self.assertEqual(fan.get_ray(fan.ray_of_subset([1])), (1, 0))
        self.assertEqual(fan.get_ray(fan.ray_of_subset([3])), (-1, -1))
        self.assertEqual(fan.get_ray(fan.ray_of_subset([1, 2])), (1, 1))
        self.assertEqual(fan.get_ray_labels()[fan.ray_of_subset([1, 3])],
                         '{1,3}')
        for perm in itertools.permutations([1, 2, 3, 4]):
            fan4 = pf.permutahedral_fan(4)
            self.assertEqual(
                fan4.permutation_of_cone(fan4.cone_of_permutation(perm)),
                perm)
        self.assertEqual(pf.permutahedral_fan(2), pf.fan_p1())

    def test_by_name(self):
        self.assertEqual(pf.fan_by_name('p2'), pf.fan_p2())
        self.assertEqual(pf.fan_by_name('pn:3').get_dim(), 3)
        self.assertEqual(len(pf.fan_by_name('perm:4').get_max_cones()), 24)
        self.assertRaises(UnknownFan, pf.fan_by_name, 'p7x')
        self.assertRaises(UnknownFan, pf.fan_by_name, 'perm:1')


class PolyhedronTest(unittest.TestCase):
    """tbk.polyfan polyhedron tests"""

    def setUp(self):
        self.fan = pf.fan_p2()
        self.poly = pf.line_bundle_polytope(self.fan,
                                            pf.LineBundle([1, 1, 1]))

    def test_vertices(self):
        self.assertTrue(self.poly.is_bounded())
        self.assertEqual(set(self.poly.vertices()),
                         set([(1, 1), (1, -2), (-2, 1)]))
        self.assertEqual(len(self.poly.lattice_points()), 10)
        self.assertEqual(pf.vertex_in_direction(self.poly, (0, 1), self.fan),
                         (1, 1))
        self.assertTrue(pf.has_normal_fan(self.poly, self.fan))

    def test_point_polytope(self):
        point = pf.polytope_from_column(self.fan, [0, 0, 0])
        self.assertEqual(point.vertices(), ((0, 0),))
        self.assertEqual(point.lattice_points(), [(0, 0)])
        self.assertFalse(pf.has_normal_fan(point, self.fan))

    def test_empty_polytope(self):
        empty = pf.polytope_from_column(self.fan, [0, 0, -1])
        self.assertEqual(empty.vertices(), ())
        self.assertEqual(empty.lattice_points(), [])
        self.assertEqual(pf.vertex_in_direction(empty, (0, 1), self.fan),
                         None)
        self.assertEqual(sorted(pf.virtual_vertices(self.fan, [0, 0, -1])),
                         [(0, 0), (0, 1), (1, 0)])

    def test_unbounded(self):
        quadrant = pf.Polyhedron([((1, 0), 0), ((0, 1), 0)])
        self.assertFalse(quadrant.is_bounded())
        self.assertRaises(UnboundedPolyhedron, quadrant.lattice_points)
        strip = pf.Polyhedron([((1, 0), 1), ((-1, 0), 1)])
        self.assertFalse(strip.is_bounded())

    def test_rational_vertex(self):
        tri = pf.Polyhedron([((2, 1), 1), ((-1, 0), 0), ((0, -1), 0)])
        self.assertIn((Fraction(1, 2), 0), tri.vertices())
        self.assertEqual(sorted(tri.lattice_points()), [(0, 0), (0, 1)])

    def test_brianchon_gram(self):
        for point in pf.box_points([-4, -4], [4, 4]):
            self.assertEqual(pf.brianchon_gram(self.poly, self.fan, point),
                             int(self.poly.contains(point)))

    def test_line_bundle_scaling(self):
        line = pf.LineBundle([1, 0, 2])
        self.assertEqual((line * 3).get_values(), (3, 0, 6))
        self.assertEqual((2 * line).get_values(), (2, 0, 4))


if __name__ == "__main__":
    for case in (FanTest, PolyhedronTest):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
