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

import collections
import json

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from common import KhovanovException, debug, run_in_parallel
from complex import build_complex
from cube import build_cube
from ring import EVEN, LaurentPoly

SmithForm = collections.namedtuple("SmithForm", ["divisors", "rank"])

TRANSFORMS = ("identity", "mirror-dual", "shift")


class NotIntegral(KhovanovException):
    """
    Raised when homology is requested for a complex that is not defined over Z.
    """

    pass


class IntMatrix(object):
    """
    A sparse integer matrix. Zero entries are never stored.
    """

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = dict((key, int(v)) for key, v in (entries or {}).items() if v)

    @classmethod
    def from_columns(cls, columns, nrows, ncols):
        entries = {}
        for column, rows in columns.items():
            for row, value in rows.items():
                entries[row, column] = value
        return cls(nrows, ncols, entries)

    @classmethod
    def from_rows(cls, rows):
        entries = {}
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                entries[i, j] = value
        return cls(len(rows), len(rows[0]) if rows else 0, entries)

    def __repr__(self):
        return "IntMatrix({}x{}, {} entries)".format(self.nrows, self.ncols, len(self.entries))


def _eliminate_units(rows, cols):
    """
    Removes unit pivots from the sparse rows/cols structure in place and returns their number.
    Among unit entries the one with the smallest fill-in estimate goes first.
    """
    count = 0
    while True:
        best = None
        for i, row in rows.items():
            for j, value in row.items():
                if value not in (1, -1):
                    continue
                cost = (len(row) - 1) * (len(cols[j]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
                    if cost == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            return count
        _, pivot_row, pivot_column = best
        pivot = rows[pivot_row]
        unit = pivot[pivot_column]
        for i in list(cols[pivot_column]):
            if i == pivot_row:
                continue
            row = rows[i]
            factor = row[pivot_column] * unit
            for j, value in pivot.items():
                updated = row.get(j, 0) - factor * value
                if updated:
                    row[j] = updated
                    cols[j].add(i)
                else:
                    row.pop(j, None)
                    cols[j].discard(i)
            if not row:
                del rows[i]
        for j in pivot:
            cols[j].discard(pivot_row)
            if not cols[j]:
                del cols[j]
        del rows[pivot_row]
        count += 1


def smith_normal_form(m):
    """
    Invariant factors d1 | d2 | ... | dk of m and its rank k.

    Unit pivots are eliminated sparsely first; whatever remains is handed to sympy.
    """
    rows = collections.defaultdict(dict)
    cols = collections.defaultdict(set)
    for (i, j), value in m.entries.items():
        rows[i][j] = value
        cols[j].add(i)
    rows, cols = dict(rows), dict(cols)
    units = _eliminate_units(rows, cols)
    core = []
    if rows:
        order = sorted(cols)
        core = [[rows[i].get(j, 0) for j in order] for i in sorted(rows)]
        debug("Smith normal form: {} unit pivots, {}x{} core".format(units, len(core), len(order)))
        factors = invariant_factors(Matrix(core), domain=ZZ)
        core = sorted(abs(int(f)) for f in factors if f != 0)
    divisors = tuple([1] * units + core)
    return SmithForm(divisors, len(divisors))


class HomologyTable(object):
    """
    Bigraded integral homology: (r, q) -> (betti number, torsion divisors).
    """

    def __init__(self, entries=None):
        self.entries = {}
        for key, (betti, torsion) in (entries or {}).items():
            torsion = tuple(sorted(int(t) for t in torsion))
            if betti or torsion:
                self.entries[key] = (int(betti), torsion)

    def betti(self, r, q):
        return self.entries.get((r, q), (0, ()))[0]

    def torsion(self, r, q):
        return self.entries.get((r, q), (0, ()))[1]

    def bigradings(self):
        return sorted(self.entries)

    def euler(self):
        coefficients = collections.Counter()
        for (r, q), (betti, _) in self.entries.items():
            coefficients[q] += (-1) ** (r % 2) * betti
        return LaurentPoly("q", coefficients)

    def __eq__(self, other):
        if not isinstance(other, HomologyTable):
            return NotImplemented
        return self.entries == other.entries

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def render(self):
        lines = []
        for r, q in self.bigradings():
            betti, torsion = self.entries[r, q]
            lines.append(" ".join(str(v) for v in (r, q, betti) + torsion))
        return "\n".join(lines)

    __str__ = render

    def __repr__(self):
        return "HomologyTable({!r})".format(self.entries)

    def to_json(self):
        return [
            collections.OrderedDict(
                [("r", r), ("q", q), ("betti", betti), ("torsion", list(torsion))]
            )
            for (r, q), (betti, torsion) in sorted(self.entries.items())
        ]

    @staticmethod
    def parse(text):
        entries = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            values = [int(v) for v in line.split()]
            entries[values[0], values[1]] = (values[2], tuple(values[3:]))
        return HomologyTable(entries)

    @staticmethod
    def from_json(text):
        entries = {}
        for entry in json.loads(text):
            entries[entry["r"], entry["q"]] = (entry["betti"], tuple(entry["torsion"]))
        return HomologyTable(entries)


def homology_table(complex_, jobs=1):
    """
    Per bigrading: betti = dim - rank d^r - rank d^(r-1), torsion = divisors of d^(r-1) above 1.
    """
    if complex_.ring != "Z":
        raise NotIntegral("Homology needs a complex over Z, got one over {}".format(complex_.ring))
    keys = complex_.bigradings()

    def reduce(key):
        r, q = key
        m = IntMatrix.from_columns(
            complex_.matrix(r, q), complex_.dimension(r + 1, q), complex_.dimension(r, q)
        )
        return smith_normal_form(m)

    forms = dict(zip(keys, run_in_parallel(reduce, keys, jobs)))
    empty = SmithForm((), 0)
    entries = {}
    for r, q in keys:
        outgoing = forms[r, q]
        incoming = forms.get((r - 1, q), empty)
        betti = complex_.dimension(r, q) - outgoing.rank - incoming.rank
        torsion = tuple(t for t in incoming.divisors if t > 1)
        entries[r, q] = (betti, torsion)
    return HomologyTable(entries)


def compare_tables(a, b, transform="identity", r0=0, q0=0):
    """
    identity: a equals b. mirror-dual: betti_a(r, q) = betti_b(-r, -q) and
    torsion_a(r, q) = torsion_b(1 - r, -q). shift: a(r, q) = b(r + r0, q + q0).
    """
    if transform == "identity":
        return a == b
    expected = collections.defaultdict(lambda: [0, ()])
    if transform == "mirror-dual":
        for (r, q), (betti, torsion) in b.entries.items():
            expected[-r, -q][0] = betti
            expected[1 - r, -q][1] = torsion
    elif transform == "shift":
        for (r, q), (betti, torsion) in b.entries.items():
            expected[r - r0, q - q0] = [betti, torsion]
    else:
        raise ValueError("Unknown transform '{}'".format(transform))
    return a == HomologyTable(dict((key, tuple(value)) for key, value in expected.items()))


def khovanov_homology(d, spec=EVEN, jobs=1, cube=None):
    """
    Integral homology of the Khovanov complex of d specialized through spec.
    """
    if cube is None:
        cube = build_cube(d)
    return homology_table(build_complex(cube, spec=spec, jobs=jobs), jobs)
