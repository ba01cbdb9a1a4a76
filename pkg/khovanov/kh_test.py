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

import contextlib
import io
import json
import os
import tempfile
import unittest

import kh as code_under_test


def run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
        code = code_under_test.main(list(argv))
    return code, stdout.getvalue(), stderr.getvalue()


class TableCommandTest(unittest.TestCase):
    def testListsTheTable(self):
        code, out, _ = run("table")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertGreaterEqual(len(lines), 35)
        self.assertEqual(lines[1], "3_1\t3\t1\t-3")

    def testSelectByName(self):
        code, out, _ = run("table", "--name", "8_19", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["schema"], code_under_test.SCHEMA_VERSION)
        self.assertEqual(data["knots"][0]["name"], "8_19")
        self.assertEqual(data["knots"][0]["writhe"], 8)

    def testMaxCrossings(self):
        code, out, _ = run("table", "--max-crossings", "3")
        self.assertEqual(code, 0)
        names = [line.split("\t")[0] for line in out.splitlines()]
        self.assertEqual(names, ["0_1", "3_1", "L2a1"])

    def testEveryKnotUpToEightCrossings(self):
        code, out, _ = run("table", "--max-crossings", "8", "--format", "json")
        self.assertEqual(code, 0)
        rows = json.loads(out)["knots"]
        knots = [row["name"] for row in rows if not row["name"].startswith("L")]
        self.assertEqual(len(knots), 1 + 1 + 1 + 2 + 3 + 7 + 21)
        self.assertIn("8_8", knots)
        self.assertIn("8_13", knots)
        for row in rows:
            self.assertEqual(row["crossings"], row["diagram_crossings"], msg=row["name"])

    def testUnknownName(self):
        code, _, err = run("table", "--name", "nonexistent")
        self.assertEqual(code, 1)
        self.assertIn("nonexistent", err)


class ComputeCommandTest(unittest.TestCase):
    def testTrefoil(self):
        code, out, _ = run("compute", "--knot", "3_1", "--spec", "1,1,1")
        self.assertEqual(code, 0)
        self.assertIn("jones (t): -t^-4 + t^-3 + t^-1", out)
        self.assertIn("J(q): -q^-9 + q^-5 + q^-3 + q^-1", out)
        self.assertIn("-2 -7 0 2", out)

    def testJson(self):
        code, out, _ = run("compute", "--pd", "", "--spec", "1,-1,1", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual(data["schema"], 1)
        self.assertEqual(data["crossings"], 0)
        (result,) = data["specializations"]
        self.assertEqual(result["spec"], "1,-1,1")
        self.assertEqual(
            [(entry["r"], entry["q"], entry["betti"]) for entry in result["homology"]],
            [(0, -1, 1), (0, 1, 1)],
        )

    def testHalfIntegerJones(self):
        code, out, _ = run("compute", "--knot", "L2a1")
        self.assertEqual(code, 0)
        self.assertIn("jones (s = t^1/2): -s - s^5", out)
        self.assertNotIn("jones (t)", out)

    def testUniversalEulerOnly(self):
        code, out, _ = run(
            "compute", "--knot", "4_1", "--spec", "universal", "--euler-only", "--format", "json"
        )
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertNotIn("jones", data)
        (result,) = data["specializations"]
        self.assertTrue(result["palindromic"])
        self.assertNotIn("homology", result)

    def testFile(self):
        with tempfile.NamedTemporaryFile("w", suffix=".pd", delete=False) as fd:
            fd.write("X(1,3,2,4) X(3,1,4,2)\n")
        try:
            code, out, _ = run("compute", "--file", fd.name, "--euler-only")
        finally:
            os.remove(fd.name)
        self.assertEqual(code, 0)
        self.assertIn("euler: 1 + q^2 + q^4 + q^6", out)

    def testEulerOnlyTakesNoValue(self):
        with self.assertRaises(SystemExit):
            run("compute", "--knot", "3_1", "--euler-only", "false")
        code, out, _ = run("compute", "--knot", "3_1", "--spec", "1,1,1")
        self.assertEqual(code, 0)
        self.assertIn("r q betti torsion", out)

    def testBadInput(self):
        for argv in (
            ["compute", "--pd", "X(1,2,3,4)"],
            ["compute", "--pd", "X(1,2)"],
            ["compute", "--knot", "3_1", "--spec", "1,2,1"],
            ["compute", "--file", "/nonexistent/knot.pd"],
        ):
            code, _, err = run(*argv)
            self.assertEqual(code, 1, msg=argv)
            self.assertTrue(err, msg=argv)


class VerifyCommandTest(unittest.TestCase):
    def testFrobenius(self):
        code, out, _ = run("verify", "--suite", "frobenius")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "frobenius: 5 checked, 0 failed")

    def testDSquared(self):
        code, out, _ = run("verify", "--suite", "d2", "--max-crossings", "3", "--format", "json")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertEqual((data["suite"], data["checked"], data["failures"]), ("d2", 3, []))

    def testSelectedNames(self):
        code, out, _ = run("verify", "--suite", "euler", "--name", "4_1", "--spec", "1,-1,1")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), "euler: 1 checked, 0 failed")

    def testMissingConfig(self):
        code, _, err = run("verify", "--suite", "faces", "--config", "/nonexistent/suites.yml")
        self.assertEqual(code, 1)
        self.assertIn("Cannot read configuration file", err)


class MainTest(unittest.TestCase):
    def testNoSubcommand(self):
        code, out, _ = run()
        self.assertEqual(code, 2)
        self.assertIn("usage", out)


if __name__ == "__main__":
    unittest.main()
