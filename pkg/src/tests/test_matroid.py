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

from tbk import matroid as mt
from tbk.errors import (CircuitAxiomViolation, ElementInBasis, EmptyBases,
                        ExchangeAxiomViolation, LoopDetected, NotABasis,
                        NotAFlat, NotAnExtension, NotInjective, RankMismatch,
                        UnknownMatroid)
import itertools
import random
import unittest


class MatroidTest(unittest.TestCase):
    """tbk.matroid tests"""

    def setUp(self):
        self.fano = mt.fano()
        self.idx = self.fano.indices

    def test_fano(self):
        self.assertEqual(self.fano.get_rank(), 3)
        self.assertEqual(len(self.fano.get_bases()), 28)
        self.assertEqual(self.fano.rank(self.idx(['y1', 'z1', 'w'])), 2)
        self.assertEqual(self.fano.closure(self.idx(['y1', 'w'])),
                         self.idx(['y1', 'z1', 'w']))
        self.assertEqual(len(self.fano.flats()), 16)
        self.assertEqual(len(self.fano.flats_of_rank(2)), 7)

    def test_uniform(self):
        u23 = mt.uniform(2, 3)
        self.assertEqual(u23.get_ground(), ('e1', 'e2', 'e3'))
        self.assertEqual(len(u23.get_bases()), 3)
        self.assertEqual(u23.circuits(), (frozenset([0, 1, 2]),))
        self.assertEqual(len(u23.flats()), 5)
        self.assertRaises(UnknownMatroid, mt.uniform, 4, 3)

    def test_exchange_violation(self):
        self.assertRaises(ExchangeAxiomViolation, mt.matroid_from_bases,
                          ['a', 'b', 'c', 'd'], [['a', 'b'], ['c', 'd']])
        self.assertRaises(ExchangeAxiomViolation, mt.matroid_from_bases,
                          ['a', 'b', 'c'], [['a', 'b'], ['c']])

    def test_loops_and_empty(self):
        self.assertRaises(LoopDetected, mt.matroid_from_bases,
                          ['a', 'b'], [['a']])
        self.assertRaises(EmptyBases, mt.matroid_from_bases, ['a', 'b'], [])

    def test_from_circuits(self):
        mat = mt.matroid_from_circuits(['e1', 'e2', 'e3'],
                                       [['e1', 'e2', 'e3']])
        self.assertEqual(mat, mt.uniform(2, 3))
        self.assertRaises(CircuitAxiomViolation, mt.matroid_from_circuits,
                          ['a', 'b', 'c'], [['a', 'b'], ['a', 'b', 'c']])

    def test_linear_matroid(self):
        cols = [c for c in itertools.product([0, 1], repeat=3) if any(c)]
        matrix = [[c[i] for c in cols] for i in range(3)]
        self.assertEqual(len(mt.linear_matroid(matrix, prime=2).get_bases()),
                         28)
        # over QQ the three sums of pairs are independent
        self.assertEqual(len(mt.linear_matroid(matrix).get_bases()), 29)
        self.assertEqual(mt.linear_matroid([[1, 0, 1], [0, 1, 1]]),
                         mt.uniform(2, 3))

    def test_fundamental_circuit(self):
        basis = self.idx(['y1', 'y2', 'w'])
        self.assertEqual(self.fano.fundamental_circuit(
            self.fano.index('z1'), basis), self.idx(['y1', 'z1', 'w']))
        self.assertEqual(self.fano.fundamental_circuit(
            self.fano.index('z3'), basis), self.idx(['y1', 'y2', 'z3']))
        self.assertRaises(NotABasis, self.fano.fundamental_circuit,
                          self.fano.index('y2'), self.idx(['y1', 'z1', 'w']))
        self.assertRaises(ElementInBasis, self.fano.fundamental_circuit,
                          self.fano.index('w'), basis)

    def test_check_flat(self):
        self.assertRaises(NotAFlat, self.fano.check_flat,
                          self.idx(['y1', 'z1']))

    def test_dual(self):
        self.assertEqual(mt.dual(mt.uniform(2, 4)), mt.uniform(2, 4))
        self.assertEqual(mt.dual(mt.uniform(1, 3)), mt.uniform(2, 3))
        dual = mt.dual(mt.matroid_from_bases(['a', 'b', 'c'],
                                             [['a', 'b'], ['a', 'c']]))
        # the coloop a becomes a loop
        self.assertEqual(dual.loops(), frozenset([0]))

    def test_restriction_quotient(self):
        sub = mt.restriction(self.fano, self.idx(['y1', 'y2', 'y3', 'w']))
        self.assertEqual(sub.get_ground(), ('y1', 'y2', 'y3', 'w'))
        self.assertEqual(sub.get_rank(), 3)
        quo = mt.quotient(self.fano, self.idx(['w']))
        self.assertEqual(quo.get_rank(), 2)
        self.assertEqual(quo.get_size(), 6)
        # y_i and z_i are on a line through w
        self.assertFalse(quo.is_independent(quo.indices(['y1', 'z1'])))

    def test_modularity(self):
        self.assertTrue(mt.is_modular(self.fano))
        self.assertFalse(mt.is_modular(mt.vamos()))
        for size in range(1, 6):
            for rank in range(1, size + 1):
                self.assertEqual(mt.is_modular(mt.uniform(rank, size)),
                                 rank <= 2 or rank == size)

    def test_submodular_defect(self):
        vam = mt.vamos()
        self.assertEqual(mt.submodular_defect(vam, vam.indices(['f1', 'f2']),
                                              vam.indices(['h1', 'h2'])), 1)
        u34 = mt.uniform(3, 4)
        self.assertEqual(mt.submodular_defect(u34, [0, 1], [2, 3]), 1)

    def test_extensions(self):
        u23 = mt.uniform(2, 3)
        phi = mt.principal_extension(u23, range(3), 'p')
        self.assertTrue(mt.is_extension(phi))
        self.assertEqual(phi.get_target(),
                         mt.matroid_from_bases(
                             ['e1', 'e2', 'e3', 'p'],
                             itertools.combinations(['e1', 'e2', 'e3', 'p'],
                                                    2)))
        self.assertTrue(mt.is_extension(mt.ExtensionMap.identity(u23)))
        self.assertRaises(RankMismatch, mt.is_extension,
                          mt.ExtensionMap(u23, mt.uniform(3, 4), [0, 1, 2]))
        self.assertRaises(NotInjective, mt.is_extension,
                          mt.ExtensionMap(u23, mt.uniform(2, 4), [0, 0, 1]))
        broken = mt.ExtensionMap(u23, mt.matroid_from_bases(
            ['a', 'b', 'c'], [['a', 'b'], ['a', 'c']]), [0, 1, 2])
        self.assertFalse(mt.is_extension(broken))
        for phi in mt.single_element_extensions(self.fano):
            self.assertTrue(mt.is_extension(phi))
        self.assertEqual(len(mt.single_element_extensions(self.fano)), 15)

    def test_pushforward_point(self):
        u23 = mt.uniform(2, 3)
        phi = mt.principal_extension(u23, [0], 'p')
        # p is parallel to e1
        self.assertEqual(mt.pushforward_point(phi, (1, 0, 0)), (1, 0, 0, 1))
        self.assertEqual(mt.pushforward_point(phi, (0, 1, 0)), (0, 1, 0, 0))
        lifted = mt.ExtensionMap(u23, mt.uniform(3, 4), [0, 1, 2])
        self.assertRaises(NotAnExtension, mt.pushforward_point, lifted,
                          (1, 0, 0))
        broken = mt.ExtensionMap(u23, mt.matroid_from_bases(
            ['a', 'b', 'c'], [['a', 'b'], ['a', 'c']]), [0, 1, 2])
        self.assertRaises(NotAnExtension, mt.pushforward_point, broken,
                          (1, 0, 0))

    def test_fresh_label(self):
        vam = mt.vamos()
        self.assertTrue('p' in vam.get_ground())
        self.assertEqual(mt.fresh_label(vam), 'p1')
        self.assertEqual(mt.fresh_label(self.fano), 'p')
        phi = mt.principal_extension(vam, [0], 'p1')
        self.assertEqual(mt.fresh_label(phi.get_target()), 'p2')
        labels = set(ext.get_target().get_ground()[-1]
                     for ext in mt.single_element_extensions(vam))
        self.assertEqual(labels, set(['p1']))

    def test_greedy_generic(self):
        weights = [7, 6, 5, 4, 3, 2, 1]
        self.assertEqual(mt.greedy_basis(self.fano, weights),
                         self.idx(['y1', 'y2', 'y3']))

    def test_basis_characterizations(self):
        rng = random.Random(7)
        cases = [mt.uniform(r, m) for m in range(2, 7)
                 for r in range(1, m)] + [self.fano, mt.vamos()]
        for step in range(1000):
            mat = cases[step % len(cases)]
            weights = rng.sample(range(1000), mat.get_size())
            greedy = mt.greedy_basis(mat, weights)
            full = frozenset(range(mat.get_size()))
            self.assertEqual(greedy,
                             mt.max_weight_basis_bruteforce(mat, weights))
            self.assertEqual(greedy, mt.lex_max_basis(mat, weights))
            self.assertEqual(greedy, full - mt.initial_forms(mat, weights))
            self.assertEqual(mt.initial_matroid(mat, weights).get_bases(),
                             (tuple(sorted(greedy)),))

    def test_tie_order(self):
        u23 = mt.uniform(2, 3)
        self.assertEqual(mt.greedy_basis(u23, [0, 0, 0]), frozenset([0, 1]))
        self.assertEqual(mt.greedy_basis(u23, [0, 0, 0],
                                         ['e3', 'e2', 'e1']),
                         frozenset([1, 2]))

    def test_by_name(self):
        self.assertEqual(mt.matroid_by_name('fano'), self.fano)
        self.assertEqual(mt.matroid_by_name('uniform:2,4'), mt.uniform(2, 4))
        self.assertRaises(UnknownMatroid, mt.matroid_by_name, 'pappus')


if __name__ == "__main__":
    suite = unittest.TestLoader().loadTestsFromTestCase(MatroidTest)
    unittest.TextTestRunner(verbosity=2).run(suite)
