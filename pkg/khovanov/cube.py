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
The cube of resolutions of a diagram, its chronology-change cochain ψ and edge assignments φ.

States are bitmasks (bit i = crossing i). An edge is a pair (state, i) with bit i clear in
state; a face is FaceId(state, i, j) with i < j and both bits clear.
"""

import collections
import itertools
import json
import random

import diagram as diagrams
from common import ConsistencyException, debug, run_in_parallel
from ring import ONE, X, Y, Z, Specialization, UnitMonomial, specialize
from tqft import UNIVERSAL_ALGEBRA, apply_saddle

MERGE = "merge"
SPLIT = "split"

SaddleInfo = collections.namedtuple(
    "SaddleInfo",
    [
        "state",
        "crossing",
        "kind",
        "sources",
        "targets",
        "arrow_target",
        "source_count",
        "target_count",
    ],
)

FaceId = collections.namedtuple("FaceId", ["state", "i", "j"])

CubeCell = collections.namedtuple("CubeCell", ["state", "i", "j", "k"])


class InconsistentScalar(ConsistencyException):
    """
    Raised when the two composites around a face are not related by a single unit.
    """

    pass


class ZeroComposite(ConsistencyException):
    """
    Raised when both composites around a face vanish.
    """

    pass


class UnclassifiableFace(ConsistencyException):
    """
    Raised when the saddles around a face match no known pattern of circle interaction.
    """

    pass


class AssignmentStuck(ConsistencyException):
    """
    Raised when edge-assignment propagation stops with unassigned edges.
    """

    pass


class AssignmentInconsistent(ConsistencyException):
    """
    Raised when a propagated edge assignment violates a face relation.
    """

    pass


def _two_index(kind):
    return (1, 0) if kind == MERGE else (0, 1)


def _saddle(d, source, target, state, i):
    a, b, c, e = d.crossings[i]
    source_count, target_count = len(source.circles), len(target.circles)
    if source.index[a] != source.index[c]:
        kind = MERGE
        sources = tuple(sorted((source.index[a], source.index[c])))
        targets = (target.index[a],)
        arrow_target = source.index[c] if d.arrows[i] else source.index[a]
        expected = source_count - 1
    else:
        kind = SPLIT
        sources = (source.index[a],)
        targets = tuple(sorted((target.index[a], target.index[b])))
        # The 1-resolution arrow is the 0-resolution arrow turned a quarter counterclockwise.
        arrow_target = target.index[a] if d.arrows[i] else target.index[b]
        expected = source_count + 1
    if target_count != expected or len(set(targets)) != len(targets):
        raise ConsistencyException(
            "Saddle at crossing {} of state {} changes {} circles into {}; "
            "is the PD code planar?".format(i, state, source_count, target_count)
        )
    return SaddleInfo(
        state, i, kind, sources, targets, arrow_target, source_count, target_count
    )


class KhovanovCube(object):
    """
    Resolved circles at every vertex and saddle data on every edge, together with the face
    cochain psi and, once solved, the edge assignment phi.
    """

    def __init__(self, d):
        self.diagram = d
        self.n = d.n
        self.circles = {}
        for state in range(1 << self.n):
            self.circles[state] = diagrams.resolve(d, state)
        self.saddles = {}
        for state, i in self.edges():
            self.saddles[state, i] = _saddle(
                d, self.circles[state], self.circles[state | 1 << i], state, i
            )
        self.psi = {}
        self.phi = None
        self.cocycle_failures = []
        self._maps = {}

    def vertices(self):
        return diagrams.states(self.n)

    def edges(self):
        for state in self.vertices():
            for i in range(self.n):
                if not state >> i & 1:
                    yield state, i

    def faces(self):
        for state in self.vertices():
            for i, j in itertools.combinations(range(self.n), 2):
                if not state >> i & 1 and not state >> j & 1:
                    yield FaceId(state, i, j)

    def cells(self):
        for state in self.vertices():
            for i, j, k in itertools.combinations(range(self.n), 3):
                if not state & (1 << i | 1 << j | 1 << k):
                    yield CubeCell(state, i, j, k)

    def circle_count(self, state):
        return len(self.circles[state].circles)

    def saddle_map(self, state, i, algebra=UNIVERSAL_ALGEBRA):
        key = (id(algebra), state, i)
        if key not in self._maps:
            self._maps[key] = apply_saddle(self.saddles[state, i], algebra)
        return self._maps[key]


def build_cube(d):
    cube = KhovanovCube(d)
    debug(
        "Built cube of {}: {} vertices, {} edges".format(
            d.name or diagrams.render(d), 1 << cube.n, len(cube.saddles)
        )
    )
    return cube


def _face_saddles(cube, face):
    """
    Returns (α, β', β, α'): saddle i at the base, saddle j after it, saddle j at the base,
    saddle i after it.
    """
    state, i, j = face
    return (
        cube.saddles[state, i],
        cube.saddles[state | 1 << i, j],
        cube.saddles[state, j],
        cube.saddles[state | 1 << j, i],
    )


def classify_face(cube, face):
    """
    Predicts the face coefficient from the saddle types and the arrows.
    """
    alpha, beta_after, beta, alpha_after = _face_saddles(cube, face)
    if alpha.kind == alpha_after.kind and beta.kind == beta_after.kind:
        a, b = _two_index(alpha.kind)
        c, d = _two_index(beta.kind)
        return X ** (a * c) * Y ** (b * d) * Z ** (b * c - a * d)
    if (alpha.kind, beta.kind, alpha_after.kind, beta_after.kind) == (SPLIT, SPLIT, MERGE, MERGE):
        # One circle is split in two and merged back along either path.
        first = alpha.arrow_target != beta_after.arrow_target
        second = beta.arrow_target != alpha_after.arrow_target
        return X ** int(first) * Y ** int(second)
    if (alpha.kind, beta.kind, alpha_after.kind, beta_after.kind) == (MERGE, MERGE, SPLIT, SPLIT):
        first = alpha.arrow_target != beta.arrow_target
        second = beta_after.arrow_target != alpha_after.arrow_target
        return X ** int(first) * Y ** int(second)
    raise UnclassifiableFace(
        "Face {} has saddles {}/{} then {}/{}".format(
            tuple(face), alpha.kind, beta.kind, alpha_after.kind, beta_after.kind
        )
    )


def _unit_candidates(left, right):
    """
    Units u with left = u * right for the first nonzero entry of right.
    """
    for word in sorted(right):
        if word not in left:
            return set()
        (lkey, lcoefficient) = left[word].terms()[0]
        candidates = set()
        for rkey, rcoefficient in right[word].terms():
            if abs(lcoefficient) != abs(rcoefficient):
                continue
            sign = 1 if lcoefficient == rcoefficient else -1
            candidates.add(
                UnitMonomial(sign, lkey[0] - rkey[0], lkey[1] - rkey[1], lkey[2] - rkey[2])
            )
        return candidates
    return set()


def face_coefficient(cube, face, algebra=UNIVERSAL_ALGEBRA):
    """
    The unit u with F(j after i) ∘ F(i) = u · F(i after j) ∘ F(j), found by composing the saddle
    maps and solving entrywise.
    """
    state, i, j = face
    i_first = cube.saddle_map(state | 1 << i, j, algebra).compose(
        cube.saddle_map(state, i, algebra)
    )
    j_first = cube.saddle_map(state | 1 << j, i, algebra).compose(
        cube.saddle_map(state, j, algebra)
    )
    if i_first.is_zero() and j_first.is_zero():
        raise ZeroComposite("Both composites around face {} vanish".format(tuple(face)))
    candidates = None
    for word in sorted(j_first.columns):
        left, right = i_first.columns.get(word, {}), j_first.columns[word]
        if not right:
            continue
        candidates = _unit_candidates(left, right)
        break
    valid = []
    for unit in sorted(candidates or ()):
        scaled = j_first.scaled(unit)
        if scaled == i_first:
            valid.append(unit)
    if len(valid) == 1:
        return valid[0]
    if len(valid) > 1:
        # Both composites factor through a torus, so several units fit; the arrows decide.
        predicted = classify_face(cube, face)
        predicted = specialize(predicted, _algebra_spec(algebra))
        for unit in valid:
            if unit == predicted:
                return unit
    raise InconsistentScalar(
        "No single unit relates the composites around face {}".format(tuple(face)),
        dump={"face": list(face), "candidates": [str(u) for u in valid]},
    )


def _algebra_spec(algebra):
    return Specialization(algebra.x, algebra.y, algebra.z, "R_U")


def populate_psi(cube, algebra=UNIVERSAL_ALGEBRA, jobs=1):
    faces = list(cube.faces())
    values = run_in_parallel(lambda face: face_coefficient(cube, face, algebra), faces, jobs)
    cube.psi = dict(zip(faces, values))
    return cube


def cocycle_value(cube, cell):
    state, i, j, k = cell
    psi = cube.psi
    numerator = (
        psi[FaceId(state, i, j)]
        * psi[FaceId(state | 1 << j, i, k)]
        * psi[FaceId(state, j, k)]
    )
    denominator = (
        psi[FaceId(state | 1 << k, i, j)]
        * psi[FaceId(state, i, k)]
        * psi[FaceId(state | 1 << i, j, k)]
    )
    return numerator / denominator


def cocycle_check(cube):
    """
    True iff ψ is a cocycle: around every 3-cell both hexagon paths give the same unit.
    Failing cells are kept in cube.cocycle_failures.
    """
    cube.cocycle_failures = [cell for cell in cube.cells() if cocycle_value(cube, cell) != ONE]
    for cell in cube.cocycle_failures:
        debug("Cocycle condition fails on {}".format(tuple(cell)))
    return not cube.cocycle_failures


def _face_edges(face):
    state, i, j = face
    return (state, i), (state | 1 << i, j), (state, j), (state | 1 << j, i)


def _face_holds(phi, psi, face):
    a, b, c, d = _face_edges(face)
    return phi[b] * phi[a] * psi[face] == -(phi[d] * phi[c])


def spanning_tree(n):
    """
    Edges joining every nonzero state to the state with its lowest set bit cleared.
    """
    tree = []
    for state in range(1, 1 << n):
        low = state & -state
        tree.append((state ^ low, low.bit_length() - 1))
    return tree


def _random_unit(generator):
    return UnitMonomial(
        generator.choice((1, -1)),
        generator.randint(0, 1),
        generator.randint(0, 1),
        generator.randint(-2, 2),
    )


def edge_assignment(cube, seed=None):
    """
    Solves φ(B)·φ(A)·ψ = -φ(D)·φ(C) on every face by propagation from a spanning tree. The
    tree carries 1, or random units when seed is given.
    """
    generator = random.Random(seed) if seed is not None else None
    phi = {}
    for edge in spanning_tree(cube.n):
        phi[edge] = _random_unit(generator) if generator else ONE
    faces = list(cube.faces())
    pending = list(faces)
    while pending:
        progress = False
        waiting = []
        for face in pending:
            a, b, c, d = _face_edges(face)
            unknown = [edge for edge in (a, b, c, d) if edge not in phi]
            if not unknown:
                continue
            if len(unknown) > 1:
                waiting.append(face)
                continue
            psi = cube.psi[face]
            edge = unknown[0]
            if edge == a:
                phi[a] = -(phi[d] * phi[c]) / (phi[b] * psi)
            elif edge == b:
                phi[b] = -(phi[d] * phi[c]) / (phi[a] * psi)
            elif edge == c:
                phi[c] = -(phi[b] * phi[a] * psi) / phi[d]
            else:
                phi[d] = -(phi[b] * phi[a] * psi) / phi[c]
            progress = True
        if not progress and waiting:
            raise AssignmentStuck(
                "{} faces still have unassigned edges".format(len(waiting)),
                dump={"faces": [list(face) for face in waiting[:10]]},
            )
        pending = waiting
    missing = [edge for edge in cube.edges() if edge not in phi]
    if missing:
        raise AssignmentStuck("Edges {} were never assigned".format(missing[:10]))
    failures = verify_assignment(cube, phi)
    if failures:
        raise AssignmentInconsistent(
            "{} faces violate the edge assignment".format(len(failures)),
            dump={"faces": [list(face) for face in failures[:10]]},
        )
    cube.phi = phi
    return phi


def verify_assignment(cube, phi, spec=None):
    """
    Faces on which φ(B)·φ(A)·ψ = -φ(D)·φ(C) fails, optionally after specialization.
    """
    failures = []
    for face in cube.faces():
        a, b, c, d = _face_edges(face)
        if spec is None:
            holds = _face_holds(phi, cube.psi, face)
        else:
            left = specialize(phi[b] * phi[a] * cube.psi[face], spec)
            right = specialize(phi[d] * phi[c], spec)
            holds = left == -right
        if not holds:
            failures.append(face)
    return failures


def classical_assignment(cube):
    """
    The sign rule φ(state, i) = (-1)^(number of set bits of state below i).
    """
    phi = {}
    for state, i in cube.edges():
        below = bin(state & ((1 << i) - 1)).count("1")
        phi[state, i] = UnitMonomial(-1 if below % 2 else 1)
    return phi


def is_coboundary(cube, phi, other):
    """
    True iff other = dη · phi for a vertex cochain η, found by breadth-first search.
    """
    ratio = dict((edge, other[edge] / phi[edge]) for edge in cube.edges())
    eta = {0: ONE}
    queue = collections.deque([0])
    while queue:
        state = queue.popleft()
        for i in range(cube.n):
            if state >> i & 1:
                continue
            target = state | 1 << i
            if target not in eta:
                eta[target] = ratio[state, i] * eta[state]
                queue.append(target)
    return all(ratio[state, i] == eta[state | 1 << i] / eta[state] for state, i in cube.edges())


def to_json(cube):
    n = cube.n

    def bits(state):
        return "".join(str(b) for b in diagrams.state_bits(state, n))

    dump = collections.OrderedDict()
    dump["crossings"] = n
    dump["vertices"] = collections.OrderedDict(
        (bits(state), cube.circle_count(state)) for state in cube.vertices()
    )
    dump["edges"] = [
        collections.OrderedDict(
            [
                ("state", bits(state)),
                ("crossing", i),
                ("kind", cube.saddles[state, i].kind),
                ("sources", list(cube.saddles[state, i].sources)),
                ("targets", list(cube.saddles[state, i].targets)),
                ("arrow_target", cube.saddles[state, i].arrow_target),
            ]
        )
        for state, i in cube.edges()
    ]
    dump["psi"] = collections.OrderedDict(
        ("{}:{},{}".format(bits(face.state), face.i, face.j), str(value))
        for face, value in sorted(cube.psi.items())
    )
    if cube.phi is not None:
        dump["phi"] = collections.OrderedDict(
            ("{}:{}".format(bits(state), i), str(value))
            for (state, i), value in sorted(cube.phi.items())
        )
    return dump


def dumps(cube):
    return json.dumps(to_json(cube), indent=2)
