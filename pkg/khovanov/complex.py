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
Bigraded chain complexes built from the cube of resolutions.

A complex is stored as independent blocks, one per bigrading (r, q). differentials[r, q] is a
sparse matrix {column: {row: entry}} from block (r, q) to block (r + 1, q). Entries are ints
after specialization to Z and RingElem otherwise.
"""

import collections

import diagram as diagrams
from common import ConsistencyException, debug, run_in_parallel
from cube import FaceId, build_cube, edge_assignment, populate_psi, spanning_tree
from ring import ONE, LaurentPoly, RingElem, UNIVERSAL, specialize
from tqft import UNIVERSAL_ALGEBRA, word_degree, words


class DSquaredNonzero(ConsistencyException):
    """
    Raised when the differential does not square to zero.
    """

    pass


class NotChainMap(ConsistencyException):
    """
    Raised when a map between complexes does not commute with the differentials.
    """

    pass


Generator = collections.namedtuple("Generator", ["state", "word", "hdeg", "qdeg"])


def compose(second, first):
    """
    Sparse product second ∘ first of {column: {row: entry}} matrices.
    """
    result = {}
    for column, entries in first.items():
        image = {}
        for middle, value in entries.items():
            for row, other in second.get(middle, {}).items():
                image[row] = image.get(row, 0) + other * value
        image = dict((row, value) for row, value in image.items() if value)
        if image:
            result[column] = image
    return result


class ChainComplex(object):
    def __init__(self, blocks, differentials, ring="Z"):
        self.blocks = blocks
        self.differentials = differentials
        self.ring = ring
        self._index = {}

    @classmethod
    def from_entries(cls, generators, entries, ring="Z"):
        """
        Builds a complex from generators (kept in the given order within each block) and a map
        (source generator, target generator) -> entry.
        """
        blocks = collections.OrderedDict()
        for generator in generators:
            blocks.setdefault((generator.hdeg, generator.qdeg), []).append(generator)
        complex_ = cls(blocks, {}, ring)
        for (source, target), value in entries.items():
            if not value:
                continue
            if (target.hdeg, target.qdeg) != (source.hdeg + 1, source.qdeg):
                raise ConsistencyException(
                    "Entry from {} to {} does not have bidegree (1, 0)".format(source, target)
                )
            key = (source.hdeg, source.qdeg)
            column = complex_.index(source)
            row = complex_.index(target)
            complex_.differentials.setdefault(key, {}).setdefault(column, {})[row] = value
        return complex_

    def index(self, generator):
        key = (generator.hdeg, generator.qdeg)
        if key not in self._index:
            self._index[key] = dict(
                (g, position) for position, g in enumerate(self.blocks.get(key, []))
            )
        return self._index[key][generator]

    def bigradings(self):
        return sorted(self.blocks)

    def dimension(self, r, q):
        return len(self.blocks.get((r, q), []))

    def ranks(self):
        """
        Generator counts per homological degree.
        """
        result = collections.Counter()
        for (r, q), generators in self.blocks.items():
            result[r] += len(generators)
        return dict(sorted(result.items()))

    def matrix(self, r, q):
        return self.differentials.get((r, q), {})

    def entries(self):
        """
        The differential as {(source generator, target generator): entry}.
        """
        result = {}
        for (r, q), matrix in self.differentials.items():
            sources = self.blocks[r, q]
            targets = self.blocks[r + 1, q]
            for column, rows in matrix.items():
                for row, value in rows.items():
                    result[sources[column], targets[row]] = value
        return result

    def graded_euler(self):
        return graded_euler(self)

    def shift(self, dr, dq):
        """
        Moves every generator from bidegree (r, q) to (r + dr, q + dq).
        """
        generators = [
            g._replace(hdeg=g.hdeg + dr, qdeg=g.qdeg + dq)
            for key in self.bigradings()
            for g in self.blocks[key]
        ]
        entries = dict(
            (
                (s._replace(hdeg=s.hdeg + dr, qdeg=s.qdeg + dq),
                 t._replace(hdeg=t.hdeg + dr, qdeg=t.qdeg + dq)),
                value,
            )
            for (s, t), value in self.entries().items()
        )
        return ChainComplex.from_entries(generators, entries, self.ring)

    def negated(self):
        entries = dict((key, -value) for key, value in self.entries().items())
        return ChainComplex.from_entries(self.generators(), entries, self.ring)

    def generators(self):
        return [g for key in self.bigradings() for g in self.blocks[key]]

    def specialized(self, spec):
        if spec.is_universal:
            return self
        ring = "Z" if spec.target == "Z" else "R_U"
        entries = dict(
            (key, specialize(value, spec)) for key, value in self.entries().items()
        )
        return ChainComplex.from_entries(self.generators(), entries, ring)

    def check_d_squared(self, jobs=1):
        """
        Raises DSquaredNonzero with the first offending pair of generators.
        """

        def check(key):
            r, q = key
            square = compose(self.matrix(r + 1, q), self.matrix(r, q))
            for column in sorted(square):
                row = min(square[column])
                return (
                    self.blocks[r, q][column],
                    self.blocks[r + 2, q][row],
                    square[column][row],
                )
            return None

        for failure in run_in_parallel(check, self.bigradings(), jobs):
            if failure:
                source, target, value = failure
                raise DSquaredNonzero(
                    "d∘d sends {} to {} with coefficient {}".format(source, target, value),
                    dump={"source": list(source), "target": list(target), "value": str(value)},
                )

    def to_json(self):
        blocks = []
        for r, q in self.bigradings():
            matrix = self.matrix(r, q)
            blocks.append(
                collections.OrderedDict(
                    [
                        ("r", r),
                        ("q", q),
                        ("generators", self.dimension(r, q)),
                        (
                            "differential",
                            [
                                [row, column, str(matrix[column][row])]
                                for column in sorted(matrix)
                                for row in sorted(matrix[column])
                            ],
                        ),
                    ]
                )
            )
        return collections.OrderedDict([("ring", self.ring), ("blocks", blocks)])


def generator_degrees(d, state, word):
    size = bin(state).count("1")
    hdeg = size - d.n_minus
    qdeg = word_degree(word) + size + d.n_plus - 2 * d.n_minus
    return hdeg, qdeg


def build_complex(cube, phi=None, algebra=UNIVERSAL_ALGEBRA, spec=UNIVERSAL, jobs=1, check=True):
    """
    The Khovanov complex: the direct sum over states of V^⊗(circles), with differential the sum
    over edges of φ(edge) times the saddle map, specialized through spec.
    """
    d = cube.diagram
    if phi is None:
        phi = cube.phi
    if phi is None:
        if not cube.psi:
            populate_psi(cube, algebra, jobs)
        phi = edge_assignment(cube)

    generators = []
    for state in cube.vertices():
        for word in words(cube.circle_count(state)):
            hdeg, qdeg = generator_degrees(d, state, word)
            generators.append(Generator(state, word, hdeg, qdeg))
    lookup = dict(((g.state, g.word), g) for g in generators)

    def entries_from(state):
        result = {}
        for word in words(cube.circle_count(state)):
            source = lookup[state, word]
            for i in range(cube.n):
                if state >> i & 1:
                    continue
                column = cube.saddle_map(state, i, algebra).columns.get(word, {})
                for image, value in column.items():
                    value = specialize(RingElem.coerce(value) * phi[state, i], spec)
                    if value:
                        result[source, lookup[state | 1 << i, image]] = value
        return result

    entries = {}
    for part in run_in_parallel(entries_from, cube.vertices(), jobs):
        entries.update(part)
    ring = "Z" if spec.target == "Z" else "R_U"
    complex_ = ChainComplex.from_entries(generators, entries, ring)
    debug(
        "Built complex of {} with ranks {}".format(
            d.name or diagrams.render(d), complex_.ranks()
        )
    )
    if check:
        complex_.check_d_squared(jobs)
    return complex_


def check_chain_map(c0, c1, f):
    """
    Returns (source, target) generators where d1 ∘ f and f ∘ d0 differ, or None.
    f maps block (r, q) of c0 to block (r, q) of c1.
    """
    for r, q in c0.bigradings():
        left = compose(c1.matrix(r, q), f.get((r, q), {}))
        right = compose(f.get((r + 1, q), {}), c0.matrix(r, q))
        if left != right:
            for column in sorted(set(left) | set(right)):
                if left.get(column) != right.get(column):
                    rows = set(left.get(column, {})) | set(right.get(column, {}))
                    return c0.blocks[r, q][column], c1.blocks[r + 1, q][min(rows)]
    return None


def cone(c0, c1, f, check=True):
    """
    The cone of f: C0 -> C1. In degree r it is C0^r ⊕ C1^(r-1) with differential
    (x0, x1) -> (-d0 x0, f x0 + d1 x1). Generators are tagged (0, state) and (1, state).
    """
    failure = check_chain_map(c0, c1, f)
    if failure:
        raise NotChainMap(
            "f does not commute with the differentials at {} -> {}".format(*failure)
        )

    def tag(part, g, dr):
        return g._replace(state=(part, g.state), hdeg=g.hdeg + dr)

    generators = [tag(0, g, 0) for g in c0.generators()]
    generators.extend(tag(1, g, 1) for g in c1.generators())
    entries = {}
    for (s, t), value in c0.entries().items():
        entries[tag(0, s, 0), tag(0, t, 0)] = -value
    for (s, t), value in c1.entries().items():
        entries[tag(1, s, 1), tag(1, t, 1)] = value
    for (r, q), matrix in f.items():
        for column, rows in matrix.items():
            for row, value in rows.items():
                source = tag(0, c0.blocks[r, q][column], 0)
                entries[source, tag(1, c1.blocks[r, q][row], 1)] = value
    ordered = sorted(generators, key=lambda g: (g.hdeg, g.qdeg, g.state[0]))
    result = ChainComplex.from_entries(ordered, entries, c0.ring)
    if check:
        result.check_d_squared()
    return result


def skein_decomposition(full, crossing):
    """
    Splits a Khovanov complex along one crossing. Returns (C0, C1, f) with C0 the subcube
    where the crossing is 0-resolved (differential negated), C1 the 1-resolved subcube moved
    down one homological degree and f the edges across the crossing, so that cone(C0, C1, f)
    reproduces the full complex.
    """
    bit = 1 << crossing
    zero = [g for g in full.generators() if not g.state & bit]
    one = [g._replace(hdeg=g.hdeg - 1) for g in full.generators() if g.state & bit]
    entries0, entries1, across = {}, {}, {}
    for (s, t), value in full.entries().items():
        if not s.state & bit and not t.state & bit:
            entries0[s, t] = -value
        elif s.state & bit:
            entries1[s._replace(hdeg=s.hdeg - 1), t._replace(hdeg=t.hdeg - 1)] = value
        else:
            across[s, t._replace(hdeg=t.hdeg - 1)] = value
    c0 = ChainComplex.from_entries(zero, entries0, full.ring)
    c1 = ChainComplex.from_entries(one, entries1, full.ring)
    f = {}
    for (s, t), value in across.items():
        f.setdefault((s.hdeg, s.qdeg), {}).setdefault(c0.index(s), {})[c1.index(t)] = value
    return c0, c1, f


def skein_cone(d, crossing, spec=UNIVERSAL, jobs=1):
    """
    Builds the complexes of the 0- and 1-smoothing of d at crossing on their own cubes, with
    their own edge assignments, and joins them by the saddle at the crossing. Returns
    (C0, C1, f) in the gradings of d, C1 moved down one homological degree, so that
    cone(C0, C1, f) is a Khovanov complex of d.

    The saddles carry units chosen along a spanning tree of the smoothed cube so that f
    commutes with both differentials.
    """
    if not 0 <= crossing < d.n:
        raise diagrams.ValidationError("Diagram has no crossing {}".format(crossing))
    full = build_cube(d)
    populate_psi(full, jobs=jobs)
    parts = []
    for resolution in (0, 1):
        smoothed = diagrams.smooth_crossing(d, crossing, resolution)
        cube = build_cube(smoothed)
        complex_ = build_complex(cube, spec=spec, jobs=jobs)
        dr = smoothed.n_minus - d.n_minus
        dq = (d.n_plus - 2 * d.n_minus) - (smoothed.n_plus - 2 * smoothed.n_minus) + resolution
        parts.append((cube, complex_.shift(dr, dq)))
    (cube0, c0), (cube1, c1) = parts

    def lift(state):
        low = state & ((1 << crossing) - 1)
        return low | (state ^ low) << 1

    units = {0: ONE}
    for state, j in spanning_tree(d.n - 1):
        base = lift(state)
        k = j if j < crossing else j + 1
        if crossing < k:
            ratio = full.psi[FaceId(base, crossing, k)]
        else:
            ratio = full.psi[FaceId(base, k, crossing)].inverse()
        units[state | 1 << j] = cube1.phi[state, j] * units[state] * ratio / cube0.phi[state, j]

    f = {}
    for g in c0.generators():
        column = full.saddle_map(lift(g.state), crossing).columns.get(g.word, {})
        for image, value in column.items():
            value = specialize(RingElem.coerce(value) * units[g.state], spec)
            if value:
                target = c1.index(g._replace(word=image))
                f.setdefault((g.hdeg, g.qdeg), {}).setdefault(c0.index(g), {})[target] = value
    return c0, c1, f


def graded_euler(complex_):
    """
    Σ (-1)^r q^q over all generators.
    """
    coefficients = collections.Counter()
    for (r, q), generators in complex_.blocks.items():
        coefficients[q] += (-1) ** (r % 2) * len(generators)
    return LaurentPoly("q", coefficients)


def untag(complex_):
    """
    Drops the (part, state) tags introduced by cone().
    """
    generators = [g._replace(state=g.state[1]) for g in complex_.generators()]
    entries = dict(
        ((s._replace(state=s.state[1]), t._replace(state=t.state[1])), value)
        for (s, t), value in complex_.entries().items()
    )
    return ChainComplex.from_entries(generators, entries, complex_.ring)
