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
"""
Verification suites run by `kh verify`.

Every suite takes the diagrams to check, its options from suites.yml and the number of jobs, and
returns a SuiteReport listing counterexamples. Consistency exceptions raised while checking a
diagram are recorded as failures of that diagram.
"""

import collections
import random

import diagram as diagrams
from common import ConsistencyException, debug
from complex import build_complex
from cube import (
    build_cube,
    classical_assignment,
    classify_face,
    cocycle_check,
    edge_assignment,
    face_coefficient,
    populate_psi,
    verify_assignment,
)
from homology import compare_tables, homology_table, khovanov_homology
from jones import (
    categorification_check,
    jones_polynomial,
    jones_q,
    jones_skein_residual,
    q_skein_residual,
)
from ring import EVEN, Specialization
from tqft import FrobeniusData, relation_suite

SuiteReport = collections.namedtuple("SuiteReport", ["suite", "checked", "failures"])

Failure = collections.namedtuple("Failure", ["subject", "message", "dump"])


def _specs(options, default):
    return [Specialization.parse(str(text)) for text in options.get("specs", default)]


def _name(d):
    return d.name or diagrams.render(d) or "0_1"


def _each(suite, items, check):
    """
    Runs check on every (subject, item) pair, turning consistency exceptions into failures.
    """
    failures = []
    for subject, item in items:
        debug("{}: checking {}".format(suite, subject))
        try:
            for message in check(item):
                failures.append(Failure(subject, message, None))
        except ConsistencyException as e:
            failures.append(Failure(subject, str(e), e.dump))
    return SuiteReport(suite, len(items), failures)


def verify_faces(table, options, jobs=1):
    def check(d):
        cube = build_cube(d)
        for face in cube.faces():
            predicted = classify_face(cube, face)
            computed = face_coefficient(cube, face)
            if predicted != computed:
                yield "face {}: classified {}, computed {}".format(
                    tuple(face), predicted, computed
                )

    return _each("faces", [(_name(d), d) for d in table], check)


def verify_cocycle(table, options, jobs=1):
    def check(d):
        cube = populate_psi(build_cube(d), jobs=jobs)
        cocycle_check(cube)
        for cell in cube.cocycle_failures:
            yield "3-cell {} breaks the cocycle condition".format(tuple(cell))

    return _each("cocycle", [(_name(d), d) for d in table], check)


def verify_d2(table, options, jobs=1):
    specs = _specs(options, ["universal"])

    def check(d):
        cube = build_cube(d)
        for spec in specs:
            build_complex(cube, spec=spec, jobs=jobs, check=False).check_d_squared(jobs)
        return []

    return _each("d2", [(_name(d), d) for d in table], check)


def verify_euler(table, options, jobs=1):
    specs = _specs(options, ["1,1,1", "1,-1,1"])

    def check(d):
        cube = build_cube(d)
        for spec in specs:
            categorification_check(d, build_complex(cube, spec=spec, jobs=jobs), jobs)
        for i in range(min(d.n, options.get("skein_crossings", 1))):
            residual = jones_skein_residual(d, i, jobs)
            if residual:
                yield "Jones skein relation at crossing {} leaves {}".format(i, residual)
            residual = q_skein_residual(d, i, jobs)
            if residual:
                yield "q-skein relation at crossing {} leaves {}".format(i, residual)

    return _each("euler", [(_name(d), d) for d in table], check)


def verify_frobenius(table, options, jobs=1):
    specs = _specs(options, ["universal", "1,1,1", "1,-1,1"])

    def check(spec):
        for result in relation_suite(FrobeniusData.specialized(spec)):
            if not result.passed:
                yield "{}: {}".format(result.name, result.detail)

    return _each("frobenius", [(str(spec), spec) for spec in specs], check)


def reidemeister_pairs(table, options):
    """
    (description, before, after) triples of diagrams related by one Reidemeister move.
    """
    pairs = []
    edges = options.get("edges", [1])
    for d in table:
        for edge in edges:
            if edge not in d.component_of:
                continue
            for variant in range(4):
                pairs.append(
                    (
                        "{} R1 curl {} on edge {}".format(_name(d), variant, edge),
                        d,
                        diagrams.add_kink(d, edge, variant),
                    )
                )
            for over in (True, False):
                pairs.append(
                    (
                        "{} R2 circle {} edge {}".format(
                            _name(d), "over" if over else "under", edge
                        ),
                        diagrams.add_unknot(d),
                        diagrams.hook_circle(d, edge, over),
                    )
                )
        for i in options.get("crossings", [0]):
            if i >= d.n:
                continue
            pairs.append(
                (
                    "{} R3 circle across crossing {}".format(_name(d), i),
                    diagrams.encircle_crossing(d, i),
                    diagrams.encircle_crossing(d, i, pushed=True),
                )
            )
    for move in ("r2", "r3"):
        for before, after in options.get("braids", {}).get(move, []):
            strands = max(abs(k) for k in before + after) + 1
            pairs.append(
                (
                    "{} braid {} -> {}".format(move.upper(), before, after),
                    diagrams.closed_braid(before, strands),
                    diagrams.closed_braid(after, strands),
                )
            )
    return pairs


def verify_reidemeister(table, options, jobs=1):
    specs = _specs(options, ["1,1,1", "1,-1,1"])

    def check(pair):
        before, after = pair
        for spec in specs:
            first = khovanov_homology(before, spec, jobs)
            second = khovanov_homology(after, spec, jobs)
            if first != second:
                yield "homology over {} differs:\n{}\n--\n{}".format(spec, first, second)

    pairs = reidemeister_pairs(table, options)
    return _each("reidemeister", [(text, (a, b)) for text, a, b in pairs], check)


def verify_mirror(table, options, jobs=1):
    """
    Mirror duality of homology and Jones polynomials, and the grading shift caused by reversing
    one component of a link.
    """
    specs = _specs(options, ["1,1,1", "1,-1,1"])

    def check(d):
        m = diagrams.mirror(d)
        if jones_polynomial(m, jobs) != jones_polynomial(d, jobs).mirror():
            yield "V(mirror) is not V(s^-1)"
        if jones_q(m, jobs) != jones_q(d, jobs).mirror():
            yield "J(mirror) is not J(q^-1)"
        for spec in specs:
            mirrored = khovanov_homology(m, spec, jobs)
            original = khovanov_homology(d, spec.swapped(), jobs)
            if not compare_tables(mirrored, original, "mirror-dual"):
                yield "homology of the mirror over {} is not dual to the original over {}".format(
                    spec, spec.swapped()
                )
        for c in range(len(d.components)):
            if len(d.components) < 2:
                break
            linking = sum(
                diagrams.linking_number(d, c, other)
                for other in range(len(d.components))
                if other != c
            )
            reversed_ = diagrams.reverse_component(d, c)
            for spec in specs:
                a = khovanov_homology(reversed_, spec, jobs)
                b = khovanov_homology(d, spec, jobs)
                if not compare_tables(a, b, "shift", 2 * linking, 6 * linking):
                    yield "reversing component {} over {} is not a shift by ({}, {})".format(
                        c, spec, 2 * linking, 6 * linking
                    )

    return _each("mirror", [(_name(d), d) for d in table], check)


def verify_arrows(table, options, jobs=1):
    """
    Homology does not depend on the arrows nor on the edge assignment.
    """
    specs = _specs(options, ["1,1,1", "1,-1,1"])
    trials = options.get("trials", 10)
    seed = options.get("seed", 0)

    def check(d):
        expected = dict((spec, khovanov_homology(d, spec, jobs)) for spec in specs)
        generator = random.Random(seed)
        for trial in range(trials):
            arrows = [generator.random() < 0.5 for _ in range(d.n)]
            cube = populate_psi(build_cube(diagrams.with_arrows(d, arrows)), jobs=jobs)
            edge_assignment(cube, seed=seed + trial)
            for spec in specs:
                table_ = homology_table(build_complex(cube, spec=spec, jobs=jobs), jobs)
                if table_ != expected[spec]:
                    yield "arrows {} with assignment seed {} change homology over {}".format(
                        arrows, seed + trial, spec
                    )
        if EVEN in specs:
            cube = populate_psi(build_cube(d), jobs=jobs)
            phi = classical_assignment(cube)
            if verify_assignment(cube, phi, EVEN):
                yield "the classical sign assignment does not solve the even faces"
            elif homology_table(build_complex(cube, phi, spec=EVEN, jobs=jobs)) != expected[EVEN]:
                yield "the classical sign assignment changes even homology"

    return _each("arrows", [(_name(d), d) for d in table], check)


SUITES = collections.OrderedDict(
    [
        ("faces", verify_faces),
        ("cocycle", verify_cocycle),
        ("d2", verify_d2),
        ("euler", verify_euler),
        ("frobenius", verify_frobenius),
        ("reidemeister", verify_reidemeister),
        ("mirror", verify_mirror),
        ("arrows", verify_arrows),
    ]
)
