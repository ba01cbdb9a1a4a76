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

import diagram
import jones as code_under_test
from common import ConsistencyException
from complex import build_complex
from cube import build_cube
from ring import FractionalExponent, LaurentPoly

LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
FIGURE_EIGHT = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"


def unlink(n):
    d = diagram.unknot()
    for _ in range(n - 1):
        d = diagram.add_unknot(d)
    return d


class BracketTest(unittest.TestCase):
    def testLeftTrefoil(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        self.assertEqual(
            code_under_test.kauffman_bracket(d), LaurentPoly("A", {7: 1, 3: -1, -5: -1})
        )

    def testRightTrefoil(self):
        d = diagram.parse_pd("X(2,4,3,1) X(4,6,5,3) X(6,2,1,5)")
        self.assertEqual(
            code_under_test.kauffman_bracket(d), LaurentPoly("A", {-7: 1, -3: -1, 5: -1})
        )

    def testMirrorInvertsA(self):
        for pd in (LEFT_TREFOIL, FIGURE_EIGHT, HOPF):
            d = diagram.parse_pd(pd)
            self.assertEqual(
                code_under_test.kauffman_bracket(diagram.mirror(d)),
                code_under_test.kauffman_bracket(d).mirror(),
                msg=pd,
            )

    def testHopf(self):
        d = diagram.parse_pd(HOPF)
        self.assertEqual(code_under_test.kauffman_bracket(d), LaurentPoly("A", {-4: -1, 4: -1}))

    def testUnlinks(self):
        self.assertEqual(code_under_test.kauffman_bracket(unlink(1)), 1)
        self.assertEqual(
            code_under_test.kauffman_bracket(unlink(2)), LaurentPoly("A", {-2: -1, 2: -1})
        )

    def testEnhancedStatesAgree(self):
        for name, d in diagram.load_table().items():
            if d.n > 6:
                continue
            self.assertEqual(
                code_under_test.kauffman_bracket_enhanced(d),
                code_under_test.kauffman_bracket(d),
                msg=name,
            )

    def testStates(self):
        states = list(code_under_test.kauffman_states(diagram.parse_pd(LEFT_TREFOIL)))
        self.assertEqual(len(states), 8)
        self.assertEqual(states[0], code_under_test.KauffmanState(0, 3, 3))
        self.assertEqual(states[-1], code_under_test.KauffmanState(7, 2, -3))


class JonesTest(unittest.TestCase):

    _DATA = {
        LEFT_TREFOIL: {-8: -1, -6: 1, -2: 1},
        "X(2,4,3,1) X(4,6,5,3) X(6,2,1,5)": {8: -1, 6: 1, 2: 1},
        FIGURE_EIGHT: {-4: 1, -2: -1, 0: 1, 2: -1, 4: 1},
        HOPF: {1: -1, 5: -1},
        "": {0: 1},
    }

    def testKnownPolynomials(self):
        for pd, coefficients in self._DATA.items():
            self.assertEqual(
                code_under_test.jones_polynomial(diagram.parse_pd(pd)),
                LaurentPoly("s", coefficients),
                msg=pd,
            )

    def testInT(self):
        v = code_under_test.jones_polynomial(diagram.parse_pd(LEFT_TREFOIL))
        self.assertEqual(str(code_under_test.jones_in_t(v)), "-t^-4 + t^-3 + t^-1")
        with self.assertRaises(FractionalExponent):
            code_under_test.jones_in_t(code_under_test.jones_polynomial(diagram.parse_pd(HOPF)))

    def testUnlinks(self):
        loop = LaurentPoly("s", {-1: -1, 1: -1})
        for n in (1, 2, 3):
            self.assertEqual(code_under_test.jones_polynomial(unlink(n)), loop ** (n - 1))
            self.assertEqual(
                code_under_test.q_bracket(unlink(n)), LaurentPoly("q", {-1: 1, 1: 1}) ** n
            )

    def testMirror(self):
        for pd in (LEFT_TREFOIL, HOPF):
            d = diagram.parse_pd(pd)
            self.assertEqual(
                code_under_test.jones_polynomial(diagram.mirror(d)),
                code_under_test.jones_polynomial(d).mirror(),
            )
            self.assertEqual(
                code_under_test.jones_q(diagram.mirror(d)), code_under_test.jones_q(d).mirror()
            )

    def testReidemeisterMoves(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        v = code_under_test.jones_polynomial(d)
        for variant in range(4):
            self.assertEqual(code_under_test.jones_polynomial(diagram.add_kink(d, 3, variant)), v)
        self.assertEqual(
            code_under_test.jones_polynomial(diagram.hook_circle(d, 2)),
            code_under_test.jones_polynomial(diagram.add_unknot(d)),
        )
        for i in range(d.n):
            for pushed in (False, True):
                self.assertEqual(
                    code_under_test.jones_polynomial(diagram.encircle_crossing(d, i, pushed)),
                    code_under_test.jones_polynomial(diagram.add_unknot(d)),
                    msg=(i, pushed),
                )

    def testConwayDiagrams(self):
        figure_eight = LaurentPoly("s", self._DATA[FIGURE_EIGHT])
        self.assertEqual(
            code_under_test.jones_polynomial(diagram.parse_entry("CONWAY(22)")), figure_eight
        )
        trefoil = LaurentPoly("s", self._DATA[LEFT_TREFOIL])
        self.assertIn(
            code_under_test.jones_polynomial(diagram.parse_entry("CONWAY(3)")),
            (trefoil, trefoil.mirror()),
        )
        # 5_2: t - t^2 + 2t^3 - t^4 + t^5 - t^6 up to mirror image.
        five_two = LaurentPoly("s", {2: 1, 4: -1, 6: 2, 8: -1, 10: 1, 12: -1})
        self.assertIn(
            code_under_test.jones_polynomial(diagram.lookup("5_2")), (five_two, five_two.mirror())
        )


class QuantumJonesTest(unittest.TestCase):
    def testKnownPolynomials(self):
        self.assertEqual(
            code_under_test.jones_q(diagram.parse_pd(LEFT_TREFOIL)),
            LaurentPoly("q", {-1: 1, -3: 1, -5: 1, -9: -1}),
        )
        self.assertEqual(
            code_under_test.jones_q(diagram.parse_pd(HOPF)),
            LaurentPoly("q", {0: 1, 2: 1, 4: 1, 6: 1}),
        )

    def testRecoversJones(self):
        for name, d in diagram.load_table().items():
            if d.n > 6:
                continue
            self.assertEqual(
                code_under_test.jones_from_q(code_under_test.jones_q(d)),
                code_under_test.jones_polynomial(d),
                msg=name,
            )

    def testSkeinRelations(self):
        for pd in (LEFT_TREFOIL, FIGURE_EIGHT, HOPF):
            d = diagram.parse_pd(pd)
            for i in range(d.n):
                self.assertEqual(code_under_test.jones_skein_residual(d, i), 0, msg=pd)
                self.assertEqual(code_under_test.q_skein_residual(d, i), 0, msg=pd)

    def testSkeinTriple(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        plus, minus, zero = code_under_test.skein_triple(d, 1)
        self.assertEqual(plus.signs, (-1, 1, -1))
        self.assertIs(minus, d)
        self.assertEqual(zero.n, 2)


class CategorificationTest(unittest.TestCase):
    def testEulerCharacteristicMatches(self):
        d = diagram.parse_pd(FIGURE_EIGHT)
        complex_ = build_complex(build_cube(d))
        self.assertEqual(
            code_under_test.categorification_check(d, complex_), code_under_test.jones_q(d)
        )

    def testMismatchIsReported(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        other = build_complex(build_cube(diagram.mirror(d)))
        with self.assertRaises(ConsistencyException) as context:
            code_under_test.categorification_check(d, other)
        self.assertIn("euler", context.exception.dump)


if __name__ == "__main__":
    unittest.main()
