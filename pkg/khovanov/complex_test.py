#!/usr/bin/env python3
#
# Copyright 2026 The Chronological Khovanov Authors. All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import unittest

import complex as code_under_test
import diagram
from common import ConsistencyException
from complex import ChainComplex, Generator
from cube import build_cube
from homology import homology_table
from jones import jones_q
from ring import EVEN, ODD, LaurentPoly

LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"

A = Generator(0, "+", 0, 0)
B = Generator(1, "+", 1, 0)
C = Generator(3, "+", 2, 0)


def khovanov_complex(pd, spec=EVEN):
    return code_under_test.build_complex(build_cube(diagram.parse_pd(pd)), spec=spec)


def bigraded_ranks(complex_):
    return dict((key, complex_.dimension(*key)) for key in complex_.bigradings())


class BuildComplexTest(unittest.TestCase):
    def testTrefoilRanks(self):
        complex_ = khovanov_complex(LEFT_TREFOIL)
        self.assertEqual(complex_.ranks(), {-3: 8, -2: 12, -1: 6, 0: 4})
        self.assertEqual(complex_.ring, "Z")

    def testUniversalDifferentialSquaresToZero(self):
        for pd in (LEFT_TREFOIL, FIGURE_EIGHT, HOPF):
            complex_ = code_under_test.build_complex(build_cube(diagram.parse_pd(pd)))
            self.assertEqual(complex_.ring, "R_U")
            complex_.check_d_squared()

    def testSpecializingTheUniversalComplex(self):
        universal = code_under_test.build_complex(build_cube(diagram.parse_pd(LEFT_TREFOIL)))
        for spec in (EVEN, ODD):
            specialized = universal.specialized(spec)
            self.assertEqual(specialized.ring, "Z")
            specialized.check_d_squared()
            self.assertEqual(
                homology_table(specialized), homology_table(khovanov_complex(LEFT_TREFOIL, spec))
            )

    def testGeneratorDegrees(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        self.assertEqual(code_under_test.generator_degrees(d, 0, "+++"), (-3, -3))
        self.assertEqual(code_under_test.generator_degrees(d, 7, "--"), (0, -5))

    def testGradedEulerIsTheJonesPolynomial(self):
        for pd in (LEFT_TREFOIL, FIGURE_EIGHT, HOPF):
            d = diagram.parse_pd(pd)
            complex_ = code_under_test.build_complex(build_cube(d))
            self.assertEqual(complex_.graded_euler(), jones_q(d))

    def testUnknot(self):
        complex_ = khovanov_complex("")
        self.assertEqual(complex_.bigradings(), [(0, -1), (0, 1)])
        self.assertEqual(complex_.graded_euler(), LaurentPoly("q", {-1: 1, 1: 1}))

    def testJson(self):
        dump = khovanov_complex(HOPF).to_json()
        self.assertEqual(dump["ring"], "Z")
        self.assertEqual(sum(block["generators"] for block in dump["blocks"]), 12)


class ConeTest(unittest.TestCase):
    def testSkeinDecompositionRebuildsTheComplex(self):
        full = khovanov_complex(FIGURE_EIGHT)
        for crossing in range(4):
            c0, c1, f = code_under_test.skein_decomposition(full, crossing)
            rebuilt = code_under_test.untag(code_under_test.cone(c0, c1, f))
            self.assertEqual(rebuilt.entries(), full.entries())
            self.assertEqual(homology_table(rebuilt), homology_table(full))

    def testSkeinConeOfIndependentSmoothings(self):
        for pd in (LEFT_TREFOIL, FIGURE_EIGHT, HOPF):
            d = diagram.parse_pd(pd)
            for spec in (EVEN, ODD):
                full = khovanov_complex(pd, spec)
                for crossing in range(d.n):
                    c0, c1, f = code_under_test.skein_cone(d, crossing, spec)
                    rebuilt = code_under_test.cone(c0, c1, f)
                    self.assertEqual(bigraded_ranks(rebuilt), bigraded_ranks(full), msg=pd)
                    self.assertEqual(
                        homology_table(rebuilt), homology_table(full), msg=(pd, crossing)
                    )

    def testSkeinConeOverTheUniversalRing(self):
        d = diagram.parse_pd(FIGURE_EIGHT)
        c0, c1, f = code_under_test.skein_cone(d, 2)
        self.assertEqual(code_under_test.check_chain_map(c0, c1, f), None)
        self.assertEqual(c0.ring, "R_U")
        self.assertEqual(code_under_test.cone(c0, c1, f).graded_euler(), jones_q(d))

    def testNotAChainMap(self):
        c0 = ChainComplex.from_entries([A], {})
        c1 = ChainComplex.from_entries([A, B], {(A, B): 1})
        with self.assertRaises(code_under_test.NotChainMap):
            code_under_test.cone(c0, c1, {(0, 0): {0: {0: 1}}})
        self.assertEqual(code_under_test.check_chain_map(c0, c1, {}), None)

    def testShiftAndNegate(self):
        complex_ = khovanov_complex(HOPF)
        shifted = complex_.shift(1, 2)
        self.assertEqual(shifted.graded_euler(), complex_.graded_euler().shift(2) * -1)
        self.assertEqual(homology_table(complex_.negated()), homology_table(complex_))


class ChainComplexTest(unittest.TestCase):
    def testDSquaredNonzero(self):
        complex_ = ChainComplex.from_entries([A, B, C], {(A, B): 1, (B, C): 1})
        with self.assertRaises(code_under_test.DSquaredNonzero):
            complex_.check_d_squared()

    def testWrongBidegree(self):
        with self.assertRaises(ConsistencyException):
            ChainComplex.from_entries([A, B, C], {(A, C): 1})

    def testCompose(self):
        first = {0: {0: 2, 1: 1}}
        second = {0: {0: 1}, 1: {0: -2}}
        self.assertEqual(code_under_test.compose(second, first), {})
        self.assertEqual(code_under_test.compose({0: {3: 5}}, first), {0: {3: 10}})


if __name__ == "__main__":
    unittest.main()
