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

import random
import unittest

import tqft as code_under_test
from cube import MERGE, SPLIT, SaddleInfo
from ring import EVEN, ODD, ONE, X, Y, Z, RingElem, Specialization, UnitMonomial


class FrobeniusDataTest(unittest.TestCase):

    _BRAIDING = {
        "++": X,
        "+-": Z ** -1,
        "-+": Z,
        "--": Y,
    }

    def testBraiding(self):
        for word, unit in self._BRAIDING.items():
            self.assertEqual(
                code_under_test.apply_braiding(word, 1), {word[::-1]: unit}, msg=word
            )

    def testStructureConstants(self):
        algebra = code_under_test.UNIVERSAL_ALGEBRA
        self.assertEqual(algebra.mult("-", "+"), ("-", X * Z))
        self.assertIsNone(algebra.mult("-", "-"))
        self.assertEqual(algebra.comult("+"), [(("-", "+"), ONE), (("+", "-"), Y * Z)])
        self.assertEqual(algebra.unit(), "+")
        self.assertIsNone(algebra.counit("+"))

    def testSpecialized(self):
        odd = code_under_test.FrobeniusData.specialized(ODD)
        self.assertEqual((odd.x, odd.y, odd.z), (ONE, UnitMonomial(-1), ONE))
        self.assertEqual(odd.braid("-", "-"), UnitMonomial(-1))

    def testWords(self):
        self.assertEqual(code_under_test.words(2), ["++", "+-", "-+", "--"])
        self.assertEqual(code_under_test.words(0), [""])
        self.assertEqual(code_under_test.word_degree("+--"), -1)

    def testBraidingPosition(self):
        with self.assertRaises(code_under_test.PositionOutOfRange):
            code_under_test.apply_braiding("+-", 2)
        with self.assertRaises(code_under_test.PositionOutOfRange):
            code_under_test.apply_braiding("+", 1)


class RouteTest(unittest.TestCase):
    def testStrategiesAgree(self):
        for strategy in code_under_test.ROUTING_STRATEGIES:
            word, unit = code_under_test.route("+-+", [2, 0, 1], strategy=strategy)
            self.assertEqual(word, "-++", msg=strategy)
            self.assertEqual(unit, X * Z ** -1, msg=strategy)

    def testIdentityRouteIsFree(self):
        self.assertEqual(code_under_test.route("-+-", [0, 1, 2]), ("-+-", ONE))

    def testUnknownStrategy(self):
        with self.assertRaises(ValueError):
            code_under_test.route("+-", [1, 0], strategy="random")


class SaddleTest(unittest.TestCase):
    def testMergeFollowsTheArrow(self):
        towards_second = SaddleInfo(0, 0, MERGE, (0, 1), (0,), 1, 2, 1)
        self.assertEqual(code_under_test.saddle_action(towards_second, "-+"), {"-": X * Z})
        towards_first = SaddleInfo(0, 0, MERGE, (0, 1), (0,), 0, 2, 1)
        self.assertEqual(code_under_test.saddle_action(towards_first, "-+"), {"-": Z})
        self.assertEqual(code_under_test.saddle_action(towards_first, "--"), {})

    def testSplit(self):
        saddle = SaddleInfo(0, 0, SPLIT, (0,), (0, 1), 1, 1, 2)
        self.assertEqual(
            code_under_test.saddle_action(saddle, "+"),
            {"-+": RingElem.coerce(ONE), "+-": RingElem.coerce(Y * Z)},
        )
        self.assertEqual(code_under_test.saddle_action(saddle, "-"), {"--": RingElem.coerce(ONE)})

    def testWrongWordLength(self):
        saddle = SaddleInfo(0, 0, SPLIT, (0,), (0, 1), 1, 1, 2)
        with self.assertRaises(code_under_test.InconsistentCircleMap):
            code_under_test.saddle_action(saddle, "++")

    def testLinearMap(self):
        split = code_under_test.apply_saddle(SaddleInfo(0, 0, SPLIT, (0,), (0, 1), 1, 1, 2))
        merge = code_under_test.apply_saddle(SaddleInfo(0, 0, MERGE, (0, 1), (0,), 1, 2, 1))
        torus = merge.compose(split)
        self.assertEqual(torus({"+": RingElem.coerce(ONE)}), {"-": X * Z + Y * Z})
        self.assertFalse(torus.is_zero())

    def testStrategiesAgreeOnRandomSaddles(self):
        rng = random.Random(3)
        for _ in range(40):
            n = rng.randint(2, 5)
            if rng.random() < 0.5:
                sources = tuple(rng.sample(range(n), 2))
                saddle = SaddleInfo(
                    0, 0, MERGE, sources, (rng.randrange(n - 1),), rng.choice(sources), n, n - 1
                )
            else:
                targets = tuple(rng.sample(range(n + 1), 2))
                saddle = SaddleInfo(
                    0, 0, SPLIT, (rng.randrange(n),), targets, rng.choice(targets), n, n + 1
                )
            bubble, selection = [
                code_under_test.apply_saddle(saddle, strategy=strategy)
                for strategy in code_under_test.ROUTING_STRATEGIES
            ]
            self.assertFalse(bubble.is_zero(), msg=str(saddle))
            self.assertEqual(bubble, selection, msg=str(saddle))


class RelationSuiteTest(unittest.TestCase):
    def testUniversalAlgebra(self):
        self.assertRelationsHold(code_under_test.UNIVERSAL_ALGEBRA)

    def testSpecializations(self):
        for spec in (EVEN, ODD, Specialization(-1, 1, 1), Specialization(1, 1, -1)):
            self.assertRelationsHold(code_under_test.FrobeniusData.specialized(spec))

    def testNamesAreReported(self):
        names = [result.name for result in code_under_test.relation_suite()]
        for name in ("torus", "associativity", "frobenius-left", "four-tube", "degrees"):
            self.assertIn(name, names)

    def assertRelationsHold(self, algebra):
        for result in code_under_test.relation_suite(algebra):
            self.assertTrue(result.passed, msg="{}: {}".format(result.name, result.detail))

class FourTubeTest(unittest.TestCase):
    def combine(self, *terms):
        result = {}
        for unit, vector in terms:
            for word, coefficient in vector.items():
                result[word] = result.get(word, RingElem()) + RingElem.coerce(coefficient) * unit
        return dict((word, c) for word, c in result.items() if c)

    def testUnitsOfTheRelation(self):
        for spec in (None, EVEN, ODD, Specialization(-1, 1, 1), Specialization(1, 1, -1)):
            if spec is None:
                algebra = code_under_test.UNIVERSAL_ALGEBRA
            else:
                algebra = code_under_test.FrobeniusData.specialized(spec)
            m1, m2, m3, m4 = code_under_test.four_tube_maps(algebra)
            x, y, z = algebra.x, algebra.y, algebra.z
            for word in code_under_test.words(2):
                self.assertEqual(
                    self.combine((z, m1(word)), (z, m2(word))),
                    self.combine((y, m3(word)), (x, m4(word))),
                    msg="{} {}".format(spec, word),
                )

    def testSwappedUnitsFail(self):
        m1, m2, m3, m4 = code_under_test.four_tube_maps()
        self.assertEqual(m4("+-"), {"++": RingElem.coerce(ONE)})
        self.assertEqual(m3("+-"), {})
        left = self.combine((Z, m1("+-")), (Z, m2("+-")))
        self.assertEqual(left, {"++": RingElem.coerce(X)})
        self.assertNotEqual(left, self.combine((X, m3("+-")), (Y, m4("+-"))))


if __name__ == "__main__":
    unittest.main()
