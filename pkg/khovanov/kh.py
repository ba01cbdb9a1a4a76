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

import argparse
import collections
import json
import os
import sys

import common
import diagram as diagrams
from common import ConsistencyException, KhovanovException, eprint, read_config_file
from complex import build_complex
from cube import build_cube, populate_psi
from homology import homology_table
from jones import jones_in_t, jones_polynomial, jones_q, q_bracket
from ring import EVEN, FractionalExponent, Specialization
from verify import SUITES

SCHEMA_VERSION = 1


def load_diagram(args):
    if args.pd is not None:
        return diagrams.parse_pd(args.pd)
    if args.file:
        try:
            with open(args.file, "rb") as fd:
                text = fd.read().decode("utf-8")
        except IOError as e:
            raise KhovanovException("Cannot read {}: {}".format(args.file, e))
        return diagrams.parse_pd(text, name=os.path.splitext(os.path.basename(args.file))[0])
    return diagrams.lookup(args.knot)


def compute_report(d, specs, euler_only=False, jobs=1):
    report = collections.OrderedDict()
    report["name"] = d.name or "-"
    report["pd"] = diagrams.render(d)
    report["crossings"] = d.n
    report["components"] = len(d.components)
    report["writhe"] = diagrams.writhe(d)
    if not euler_only:
        v = jones_polynomial(d, jobs)
        report["jones"] = str(v)
        try:
            report["jones_t"] = str(jones_in_t(v))
        except FractionalExponent:
            report["jones_t"] = None
        report["q_bracket"] = str(q_bracket(d, jobs))
        report["jones_q"] = str(jones_q(d, jobs))

    cube = populate_psi(build_cube(d), jobs=jobs)
    results = []
    for spec in specs:
        complex_ = build_complex(cube, spec=spec, jobs=jobs)
        result = collections.OrderedDict()
        result["spec"] = str(spec)
        euler = complex_.graded_euler()
        result["euler"] = str(euler)
        result["palindromic"] = euler.is_palindromic()
        if not euler_only:
            result["ranks"] = collections.OrderedDict(
                (str(r), count) for r, count in complex_.ranks().items()
            )
            if spec.target == "Z":
                result["homology"] = homology_table(complex_, jobs).to_json()
        results.append(result)
    report["specializations"] = results
    return report


def render_compute(report):
    lines = []
    for key in ("name", "pd", "crossings", "components", "writhe"):
        lines.append("{}: {}".format(key, report[key]))
    if "jones" in report:
        lines.append("jones (s = t^1/2): {}".format(report["jones"]))
        if report["jones_t"] is not None:
            lines.append("jones (t): {}".format(report["jones_t"]))
        lines.append("q-bracket: {}".format(report["q_bracket"]))
        lines.append("J(q): {}".format(report["jones_q"]))
    for result in report["specializations"]:
        lines.append("")
        lines.append("[{}]".format(result["spec"]))
        lines.append("euler: {}{}".format(
            result["euler"], " (palindromic)" if result["palindromic"] else ""
        ))
        if "ranks" in result:
            lines.append(
                "ranks: {}".format(
                    " ".join("{}:{}".format(r, n) for r, n in result["ranks"].items())
                )
            )
        if "homology" in result:
            lines.append("r q betti torsion")
            for entry in result["homology"]:
                lines.append(
                    " ".join(
                        str(v) for v in [entry["r"], entry["q"], entry["betti"]] + entry["torsion"]
                    )
                )
    return "\n".join(lines)


def select_table(max_crossings, names=None):
    table = diagrams.load_table()
    selected = []
    for name, d in table.items():
        if names and name not in names:
            continue
        if diagrams.crossing_number(name, d) <= max_crossings:
            selected.append(d)
    return selected


def print_json(data):
    data = collections.OrderedDict([("schema", SCHEMA_VERSION)] + list(data.items()))
    print(json.dumps(data, indent=2))


def cmd_compute(args):
    d = load_diagram(args)
    specs = [Specialization.parse(text) for text in args.spec or [str(EVEN)]]
    report = compute_report(d, specs, euler_only=args.euler_only, jobs=args.jobs or 1)
    if args.format == "json":
        print_json(report)
    else:
        print(render_compute(report))
    return 0


def cmd_verify(args):
    config = read_config_file(args.config)
    options = dict(config.get("suites", {}).get(args.suite) or {})
    if args.spec:
        options["specs"] = args.spec
    max_crossings = args.max_crossings
    if max_crossings is None:
        max_crossings = options.get("max_crossings", config.get("max_crossings", 6))
    jobs = args.jobs or config.get("jobs", 1)
    table = select_table(max_crossings, args.name)
    report = SUITES[args.suite](table, options, jobs)

    if args.format == "json":
        print_json(
            collections.OrderedDict(
                [
                    ("suite", report.suite),
                    ("checked", report.checked),
                    (
                        "failures",
                        [
                            collections.OrderedDict(
                                [("subject", f.subject), ("message", f.message), ("dump", f.dump)]
                            )
                            for f in report.failures
                        ],
                    ),
                ]
            )
        )
    else:
        print(
            "{}: {} checked, {} failed".format(
                report.suite, report.checked, len(report.failures)
            )
        )
        for failure in report.failures:
            print("FAIL {}: {}".format(failure.subject, failure.message))
            if failure.dump is not None:
                print(json.dumps(failure.dump, indent=2))
    return 2 if report.failures else 0


def cmd_table(args):
    table = diagrams.load_table()
    if args.name:
        missing = [name for name in args.name if name not in table]
        if missing:
            raise diagrams.UnknownKnot("No knot named {} in the table".format(", ".join(missing)))
        entries = [table[name] for name in args.name]
    else:
        entries = list(table.values())
    if args.max_crossings is not None:
        entries = [
            d
            for d in entries
            if diagrams.crossing_number(d.name, d) <= args.max_crossings
        ]
    rows = [
        collections.OrderedDict(
            [
                ("name", d.name),
                ("crossings", diagrams.crossing_number(d.name, d)),
                ("diagram_crossings", d.n),
                ("components", len(d.components)),
                ("writhe", diagrams.writhe(d)),
            ]
        )
        for d in entries
    ]
    if args.format == "json":
        print_json(collections.OrderedDict([("knots", rows)]))
    else:
        for row in rows:
            print("{name}\t{crossings}\t{components}\t{writhe}".format(**row))
    return 0


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]

    parser = argparse.ArgumentParser(description="Chronological Khovanov homology calculator")
    parser.add_argument("-v", "--verbose", action="store_true", help="Print debug output")

    subparsers = parser.add_subparsers(dest="subparsers_name")

    def common_flags(subparser):
        subparser.add_argument("--format", choices=("text", "json"), default="text")
        subparser.add_argument("--jobs", type=int)

    compute = subparsers.add_parser("compute")
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument("--pd", type=str)
    source.add_argument("--file", type=str)
    source.add_argument("--knot", type=str)
    compute.add_argument(
        "--spec", type=str, action="append", help="x,y,z images or 'universal'; repeatable"
    )
    compute.add_argument("--euler-only", action="store_true")
    common_flags(compute)

    verify = subparsers.add_parser("verify")
    verify.add_argument("--suite", choices=list(SUITES), required=True)
    verify.add_argument("--spec", type=str, action="append")
    verify.add_argument("--max-crossings", type=int)
    verify.add_argument("--name", type=str, action="append", help="Only check these knots")
    verify.add_argument("--config", type=str, help="Suite defaults, suites.yml by default")
    common_flags(verify)

    table = subparsers.add_parser("table")
    table.add_argument("--name", type=str, action="append")
    table.add_argument("--max-crossings", type=int)
    common_flags(table)

    args = parser.parse_args(argv)

    if args.verbose:
        common.DEBUG = True

    try:
        if args.subparsers_name == "compute":
            return cmd_compute(args)
        elif args.subparsers_name == "verify":
            return cmd_verify(args)
        elif args.subparsers_name == "table":
            return cmd_table(args)
        else:
            parser.print_help()
            return 2
    except ConsistencyException as e:
        eprint(str(e))
        if e.dump is not None:
            eprint(json.dumps(e.dump, indent=2))
        return 2
    except KhovanovException as e:
        eprint(str(e))
        return 1


if __name__ == "__main__":
    sys.exit(main())
