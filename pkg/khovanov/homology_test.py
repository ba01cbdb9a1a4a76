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

import json
import os
import unittest

import diagram
import homology as code_under_test
from complex import build_complex
from cube import build_cube
from homology import HomologyTable, IntMatrix
from jones import jones_q
from ring import EVEN, ODD, Specialization

LEFT_TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
HOPF = "X(1,3,2,4) X(3,1,4,2)"


class SmithNormalFormTest(unittest.TestCase):

    _DATA = {
        ((2, 4), (6, 8)): (2, 4),
        ((1, 2), (3, 4)): (1, 2),
        ((0, 0), (0, 0)): (),
        ((1, 1, 0), (0, 1, 1), (1, 0, 1)): (1, 1, 2),
        ((2, 0), (0, 3)): (1, 6),
    }

    def testInvariantFactors(self):
        for rows, expected in self._DATA.items():
            form = code_under_test.smith_normal_form(IntMatrix.from_rows(rows))
            self.assertEqual(form.divisors, expected, msg=str(rows))
            self.assertEqual(form.rank, len(expected))

    def testEmptyMatrix(self):
        self.assertEqual(code_under_test.smith_normal_form(IntMatrix(0, 3)).divisors, ())


class KhovanovHomologyTest(unittest.TestCase):

    _DATA = {
        (LEFT_TREFOIL, "1,1,1"): "-3 -9 1\n-2 -7 0 2\n-2 -5 1\n0 -3 1\n0 -1 1",
        (LEFT_TREFOIL, "1,-1,1"): "-3 -9 1\n-3 -7 1\n-2 -7 1\n-2 -5 1\n0 -3 1\n0 -1 1",
        ("X(2,4,3,1) X(4,6,5,3) X(6,2,1,5)", "1,1,1"): "0 1 1\n0 3 1\n2 5 1\n3 7 0 2\n3 9 1",
        ("", "1,1,1"): "0 -1 1\n0 1 1",
        ("", "1,-1,1"): "0 -1 1\n0 1 1",
        (HOPF, "1,1,1"): "0 0 1\n0 2 1\n2 4 1\n2 6 1",
    }

    def testKnownTables(self):
        for (pd, spec), expected in self._DATA.items():
            table = code_under_test.khovanov_homology(
                diagram.parse_pd(pd), Specialization.parse(spec)
            )
            self.assertEqual(table.render(), expected, msg="{} {}".format(pd, spec))

    def testEulerCharacteristic(self):
        for spec in (EVEN, ODD):
            d = diagram.parse_pd(LEFT_TREFOIL)
            self.assertEqual(code_under_test.khovanov_homology(d, spec).euler(), jones_q(d))

    def testMirrorDuality(self):
        d = diagram.parse_pd(LEFT_TREFOIL)
        for spec in (EVEN, ODD):
            self.assertTrue(
                code_under_test.compare_tables(
                    code_under_test.khovanov_homology(diagram.mirror(d), spec),
                    code_under_test.khovanov_homology(d, spec.swapped()),
                    "mirror-dual",
                ),
                msg=str(spec),
            )

    def testUniversalComplexIsNotIntegral(self):
        complex_ = build_complex(build_cube(diagram.parse_pd(HOPF)))
        with self.assertRaises(code_under_test.NotIntegral):
            code_under_test.homology_table(complex_)

    def testFigureEightIsAmphichiral(self):
        d = diagram.lookup("4_1")
        for spec in (EVEN, ODD):
            self.assertTrue(
                code_under_test.compare_tables(
                    code_under_test.khovanov_homology(d, spec),
                    code_under_test.khovanov_homology(d, spec.swapped()),
                    "mirror-dual",
                ),
                msg=str(spec),
            )

    @unittest.skipUnless(os.environ.get("KH_FULL_TABLE"), "set KH_FULL_TABLE=1 to run")
    def testWholeTableCategorifiesJones(self):
        for name, d in diagram.load_table().items():
            self.assertEqual(
                code_under_test.khovanov_homology(d, ODD).euler(), jones_q(d), msg=name
            )


class HomologyTableTest(unittest.TestCase):
    def testParseAndRender(self):
        text = "-2 -7 0 2\n0 -1 1"
        table = HomologyTable.parse(text)
        self.assertEqual(table.render(), text)
        self.assertEqual(table.betti(0, -1), 1)
        self.assertEqual(table.torsion(-2, -7), (2,))
        self.assertEqual(table.betti(5, 5), 0)
        self.assertEqual(HomologyTable.parse("0 0 0"), HomologyTable())

    def testJson(self):
        table = HomologyTable({(0, 1): (1, ()), (1, 3): (0, (2, 2))})
        self.assertEqual(table.to_json()[1], {"r": 1, "q": 3, "betti": 0, "torsion": [2, 2]})
        self.assertEqual(HomologyTable.from_json(json.dumps(table.to_json())), table)

    def testShift(self):
        a = HomologyTable({(0, 1): (1, ()), (1, 3): (0, (2,))})
        b = HomologyTable({(2, 7): (1, ()), (3, 9): (0, (2,))})
        self.assertTrue(code_under_test.compare_tables(a, b, "shift", 2, 6))
        self.assertFalse(code_under_test.compare_tables(a, b, "shift", 2, 4))
        self.assertFalse(code_under_test.compare_tables(a, b))
        with self.assertRaises(ValueError):
            code_under_test.compare_tables(a, b, "rotate")


if __name__ == "__main__":
    unittest.main()
