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

from tests import FANO_DIAGRAM
from tbk import bundle as bdl
from tbk.bergman import bergman_projection
from tbk.errors import (ConeImageNotContained, DimensionMismatch,
                        NoCommonApartment, NotAmple, RowNotBergman, TooLarge)
from tbk.matroid import fano, uniform, vamos
from tbk.polyfan import box_points, fan_p1, fan_p1xp1, fan_p2
from tbk.tautological import tautological_bundle, tautological_quotient
import random
import sympy as sp
import unittest

# the tangent bundle of the projective plane
TANGENT = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def widened_box(bundle, margin=2):
    lows, highs = bdl.support_box(bundle)
    return box_points([lo - margin for lo in lows],
                      [hi + margin for hi in highs])


def random_bundles(matroid, fan, count, rng, low, high):
    """Random diagrams of Bergman rows, keeping those with a common
    apartment on every cone."""
    size = matroid.get_size()
    found = []
    while len(found) < count:
        rows = [bergman_projection(matroid, [rng.randint(low, high)
                                             for _ in range(size)])
                for _ in fan.get_rays()]
        try:
            found.append(bdl.validate_bundle(matroid, fan, rows))
        except NoCommonApartment:
            continue
    return found


class ValidateTest(unittest.TestCase):
    """tbk.bundle validation tests"""

    def test_fano(self):
        bun = bdl.validate_bundle(fano(), fan_p2(), FANO_DIAGRAM)
        self.assertEqual(bun.get_certificate((0, 1)),
                         fano().indices(['y1', 'y2', 'w']))
        self.assertEqual(bun.get_rank(), 3)
        self.assertEqual(bun.get_column(6), (1, 1, 1))

    def test_row_not_bergman(self):
        try:
            bdl.validate_bundle(uniform(2, 3), fan_p2(),
                                [[0, 0, 0], [0, 1, 1], [0, 0, 0]])
        except RowNotBergman as exc:
            self.assertEqual(exc.ray, 1)
        else:
            self.fail("RowNotBergman not raised")

    def test_no_common_apartment(self):
        vam = vamos()
        f_row = [int(lab in ('f1', 'f2')) for lab in vam.get_ground()]
        h_row = [int(lab in ('h1', 'h2')) for lab in vam.get_ground()]
        zero = [0] * 8
        try:
            bdl.validate_bundle(vam, fan_p1xp1(), [f_row, h_row, zero, zero])
        except NoCommonApartment as exc:
            self.assertEqual(exc.cone, (0, 1))
        else:
            self.fail("NoCommonApartment not raised")
        # a single ray per cone over the projective line
        bun = bdl.validate_bundle(vam, fan_p1(), [f_row, h_row])
        self.assertEqual(len(bun.get_certificates()), 2)

    def test_shape(self):
        self.assertRaises(DimensionMismatch, bdl.validate_bundle,
                          uniform(2, 3), fan_p2(), TANGENT[:2])
        self.assertRaises(DimensionMismatch, bdl.validate_bundle,
                          uniform(2, 3), fan_p2(), [[0, 0]] * 3)


class SectionsTest(unittest.TestCase):
    """tbk.bundle Klyachko flats and sections tests"""

    def setUp(self):
        self.mat = fano()
        self.bun = bdl.validate_bundle(self.mat, fan_p2(), FANO_DIAGRAM)
        self.tangent = bdl.validate_bundle(uniform(2, 3), fan_p2(), TANGENT)

    def test_klyachko(self):
        idx = self.mat.indices
        self.assertEqual(bdl.klyachko_flat(self.bun, 0, 1),
                         idx(['y1', 'z1', 'w']))
        self.assertEqual(bdl.klyachko_flat(self.bun, 0, 2), idx(['y1']))
        self.assertEqual(bdl.klyachko_flat(self.bun, 0, 3), frozenset())
        self.assertEqual(bdl.klyachko_intersection(self.bun, (1, 1, 0)),
                         idx(['w']))

    def test_phi(self):
        self.assertEqual(bdl.phi_at(self.bun, (1, 0)), tuple(FANO_DIAGRAM[0]))
        point = bdl.phi_at(self.bun, (1, 1))
        self.assertEqual(point, (2,) * 7)
        self.assertEqual(bdl.evaluate_v(self.bun, 6, (1, 1)), 2)

    def test_sections(self):
        report = bdl.h0_u(self.bun, (0, 1))
        self.assertEqual(report.get_flat_labels(), ['y2', 'z2', 'w'])
        self.assertEqual(report.get_rank(), 2)
        self.assertEqual(report.to_dict(), {'flat': ['w', 'y2', 'z2'],
                                            'rank': 2})
        self.assertEqual(bdl.h0_u(self.bun, (5, 5)).get_rank(), 0)
        self.assertRaises(DimensionMismatch, bdl.h0_u, self.bun, (1,))

    def test_matroid_fiber(self):
        self.assertEqual(bdl.matroid_fiber(self.bun, (), (3, 3)), self.mat)
        fiber = bdl.matroid_fiber(self.bun, (0, 1), (1, 1))
        self.assertEqual(fiber.get_ground(), ('w',))

    def test_parliament(self):
        members = bdl.parliament(self.bun)
        self.assertEqual(len(members), 7)
        self.assertEqual(set(members[0].vertices()),
                         set([(2, 0), (0, 0), (2, -2)]))

    def test_tangent_totals(self):
        self.assertEqual(bdl.h0_total(self.tangent), 8)
        self.assertEqual(bdl.chi_total(self.tangent), 8)
        self.assertEqual(bdl.u23_closed_form(TANGENT), 8)
        for u in box_points([-2, -2], [2, 2]):
            self.assertEqual(bdl.chi_u(self.tangent, u),
                             bdl.h0_u(self.tangent, u).get_rank())

    def test_u23_closed_form(self):
        rng = random.Random(11)
        mat = uniform(2, 3)
        checked = 0
        while checked < 20:
            bun = random_bundles(mat, fan_p2(), 1, rng, 0, 5)[0]
            if not bdl.in_f_plus(bun):
                continue
            checked += 1
            self.assertEqual(bdl.h0_total(bun),
                             bdl.u23_closed_form(bun.get_diagram()))
            for u in box_points(*bdl.support_box(bun)):
                self.assertEqual(bdl.chi_u(bun, u),
                                 bdl.h0_u(bun, u).get_rank())

    def test_fano_totals(self):
        self.assertEqual(bdl.chi_total(self.bun), bdl.h0_total(self.bun))
        shift = bdl.estimate_N0(self.bun, (1, 1, 1))
        twisted = bdl.tensor_line_bundle(self.bun, [shift] * 3)
        self.assertTrue(bdl.in_f_plus(twisted))
        for u in box_points(*bdl.support_box(twisted)):
            self.assertEqual(bdl.chi_u(twisted, u),
                             bdl.h0_u(twisted, u).get_rank())

    def test_trivial_totals(self):
        trivial = bdl.validate_bundle(uniform(2, 3), fan_p2(), [[0] * 3] * 3)
        self.assertEqual(bdl.h0_total(trivial), 2)
        self.assertEqual(bdl.chi_total(trivial), 2)
        self.assertEqual(bdl.chi_u(trivial, (0, 0)), 2)
        self.assertEqual(bdl.u23_closed_form([[0] * 3] * 3), 2)

    def test_flat_decomposition(self):
        for bun in (self.bun, self.tangent):
            mat = bun.get_matroid()
            coeffs = bdl.flat_coefficients(mat)
            self.assertEqual(coeffs, bdl.flat_coefficients(mat, 'moebius'))
            for u in box_points([-4, -4], [4, 4]):
                self.assertEqual(bdl.h0_u_via_flats(bun, u, coeffs),
                                 bdl.h0_u(bun, u).get_rank())
        u24 = uniform(2, 4)
        for bun in (self.bun, tautological_bundle(u24)):
            coeffs = bdl.flat_coefficients(bun.get_matroid())
            for u in widened_box(bun):
                self.assertEqual(bdl.h0_u_via_flats(bun, u, coeffs),
                                 bdl.h0_u(bun, u).get_rank())
        self.assertEqual(bdl.flat_coefficients(u24),
                         bdl.flat_coefficients(u24, 'moebius'))
        self.assertRaises(TooLarge, bdl.flat_coefficients, vamos())
        self.assertEqual(len(bdl.flat_coefficients(vamos(), 'moebius')),
                         len(vamos().flats()))


class ClassesTest(unittest.TestCase):
    """tbk.bundle equivariant classes tests"""

    def setUp(self):
        self.bun = bdl.validate_bundle(fano(), fan_p2(), FANO_DIAGRAM)
        self.x1, self.x2 = sp.symbols('x1 x2')

    def test_characters(self):
        chars = dict(bdl.characters_on_cone(self.bun, (0, 1)))
        self.assertEqual(chars, {0: (2, 0), 1: (0, 2), 6: (1, 1)})
        kclass = bdl.k_class(self.bun)
        self.assertEqual(kclass.get_characters((0, 1)),
                         ((0, 2), (1, 1), (2, 0)))
        self.assertEqual(kclass.incompatible_walls(), [])
        self.assertEqual(kclass.to_dict()['0,1'], [[0, 2], [1, 1], [2, 0]])

    def test_wall_compatibility(self):
        rng = random.Random(5)
        bundles = [self.bun,
                   bdl.validate_bundle(uniform(2, 3), fan_p2(), TANGENT),
                   tautological_bundle(uniform(2, 4)),
                   tautological_bundle(uniform(3, 4)),
                   tautological_quotient(uniform(2, 4))]
        bundles += random_bundles(uniform(2, 3), fan_p1xp1(), 10, rng, -2, 2)
        bundles += random_bundles(fano(), fan_p1xp1(), 10, rng, -2, 2)
        for bun in bundles:
            self.assertEqual(bdl.k_class(bun).incompatible_walls(), [])

    def test_chern(self):
        x1, x2 = self.x1, self.x2
        self.assertEqual(sp.expand(bdl.chern_class(self.bun, 1)[(0, 1)] -
                                   (3 * x1 + 3 * x2)), 0)
        self.assertEqual(sp.expand(bdl.chern_class(self.bun, 2)[(0, 1)] -
                                   (2 * x1 ** 2 + 8 * x1 * x2 +
                                    2 * x2 ** 2)), 0)
        self.assertEqual(bdl.chern_class(self.bun, 0)[(0, 1)], 1)
        self.assertEqual(bdl.chern_class(self.bun, 4)[(0, 1)], 0)

    def test_chern_character(self):
        x1, x2 = self.x1, self.x2
        forms = [2 * x1, 2 * x2, x1 + x2]
        expected = 3 + sum(forms) + sum(f ** 2 for f in forms) / 2
        self.assertEqual(sp.expand(bdl.chern_character(self.bun)[(0, 1)] -
                                   expected), 0)


class PositivityTest(unittest.TestCase):
    """tbk.bundle twists, curves and positivity tests"""

    def setUp(self):
        self.mat = fano()
        self.bun = bdl.validate_bundle(self.mat, fan_p2(), FANO_DIAGRAM)
        self.tangent = bdl.validate_bundle(uniform(2, 3), fan_p2(), TANGENT)

    def test_twist(self):
        twisted = bdl.tensor_line_bundle(self.tangent, (1, 0, 0))
        self.assertEqual(twisted.get_diagram(),
                         ((2, 1, 1), (0, 1, 0), (0, 0, 1)))
        self.assertRaises(DimensionMismatch, bdl.tensor_line_bundle,
                          self.tangent, (1, 0))

    def test_pullback(self):
        pulled = bdl.pullback_linear(self.tangent, [[1], [0]], fan_p1())
        self.assertEqual(pulled.get_diagram(), ((1, 0, 0), (1, 1, 1)))
        self.assertEqual(bdl.splits(pulled).get_type(), [2, 1])
        self.assertRaises(ConeImageNotContained, bdl.pullback_linear,
                          self.tangent, [[1, 0], [0, 1]], fan_p1xp1())

    def test_global_generation(self):
        for bun in (self.bun, self.tangent):
            ok, certs = bdl.is_globally_generated(bun)
            self.assertTrue(ok)
            self.assertTrue(all(b is not None for b in certs.values()))
        negative = bdl.validate_bundle(uniform(1, 1), fan_p2(),
                                       [[-1], [0], [0]])
        self.assertFalse(bdl.is_globally_generated(negative)[0])

    def test_restrict_fano(self):
        curve = bdl.restrict_to_curve(self.bun, (1,))
        self.assertEqual(curve.get_matroid().get_ground(),
                         ('y1', 'y2', 'y3', 'w'))
        self.assertEqual(curve.get_diagram(), ((2, 0, 0, 1), (0, 0, 2, 1)))
        self.assertEqual(curve.get_shift(), (0, -2, -2, -1))
        result = bdl.splits(curve)
        self.assertEqual(result.get_basis_labels(), ['y1', 'y3', 'w'])
        self.assertEqual(result.get_type(), [4, 3, 2])

    def test_restrict_tangent(self):
        for wall, result in bdl.wall_degrees(self.tangent):
            self.assertEqual(result.get_type(), [2, 1])
        choices = bdl.restrict_to_curve(self.tangent, 0, all_choices=True)
        self.assertTrue(choices)
        for curve in choices:
            self.assertEqual(bdl.splits(curve).get_type(), [2, 1])

    def test_nef(self):
        self.assertEqual(bdl.is_nef(self.bun), bdl.YES)
        self.assertEqual(bdl.is_ample(self.bun), bdl.YES)
        trivial = bdl.validate_bundle(uniform(2, 3), fan_p2(), [[0] * 3] * 3)
        self.assertEqual(bdl.is_nef(trivial), bdl.YES)
        self.assertEqual(bdl.is_ample(trivial), bdl.NO)
        negative = bdl.tensor_line_bundle(trivial, (-1, 0, 0))
        self.assertEqual(bdl.is_nef(negative), bdl.NO)

    def test_p1_split(self):
        bun = bdl.validate_bundle(uniform(2, 3), fan_p1(),
                                  [[1, 0, 0], [0, 2, 0]])
        result = bdl.splits(bun)
        self.assertEqual(result.get_basis(), frozenset([0, 1]))
        self.assertEqual(result.get_type(), [2, 1])
        self.assertEqual(result.to_dict(), {'basis': ['e1', 'e2'],
                                            'degrees': [1, 2]})

    def test_n0(self):
        self.assertEqual(bdl.estimate_N0(self.bun, (1, 1, 1)), 1)
        self.assertFalse(bdl.in_f_plus(self.bun))
        self.assertTrue(bdl.in_f_plus(self.bun, 1, (1, 1, 1)))
        self.assertRaises(NotAmple, bdl.estimate_N0, self.bun, (1, 0, -1))

    def test_h0_polynomial(self):
        poly, values, exact = bdl.h0_polynomial(self.tangent, (1, 0, 0),
                                                0, 4)
        nvar = sp.Symbol('N')
        self.assertEqual(sp.expand(poly - (nvar ** 2 + 6 * nvar + 8)), 0)
        self.assertTrue(exact)
        self.assertEqual(values[0], (0, 8))

    def test_fano_h0_polynomial(self):
        poly, values, exact = bdl.h0_polynomial(self.bun, (1, 1, 1), 1, 5)
        self.assertTrue(exact)
        self.assertEqual([n for n, _ in values], [1, 2, 3, 4, 5])
        # leading coefficient: rank times the area of the triangle of L
        poly = sp.Poly(poly, sp.Symbol('N'))
        self.assertEqual(poly.degree(), 2)
        self.assertEqual(poly.LC(), sp.Rational(27, 2))


if __name__ == "__main__":
    for case in (ValidateTest, SectionsTest, ClassesTest, PositivityTest):
        suite = unittest.TestLoader().loadTestsFromTestCase(case)
        unittest.TextTestRunner(verbosity=2).run(suite)
