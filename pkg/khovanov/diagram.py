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
Oriented link diagrams given as PD codes.

X(a,b,c,d) lists the four edge labels around a crossing counterclockwise, starting from the
incoming under-strand a. The under-strand runs a -> c. The crossing is positive when the
over-strand runs d -> b and negative when it runs b -> d. O(k) is a crossingless circle.
"""

import collections
import fractions
import itertools
import os
import re

from common import KhovanovException, debug

TABLE_PATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), "knots.pdt")

_TOKEN_PATTERN = re.compile(r"([XO])\(([^)]*)\)")
_BRAID_PATTERN = re.compile(r"^\s*BR\(([^)]*)\)\s*(?:#.*)?$")
_CONWAY_PATTERN = re.compile(r"^\s*CONWAY\(([^)]*)\)\s*(?:#.*)?$")
_NAME_PATTERN = re.compile(r"^(?:(\d+)_\d+|L(\d+)[an]\d+)")


class ParseError(KhovanovException):
    """
    Raised when PD text does not follow the X(a,b,c,d) / O(k) grammar.
    """

    pass


class ValidationError(KhovanovException):
    """
    Raised when a PD code is grammatical but does not describe an oriented link diagram.
    """

    pass


class UnknownComponent(KhovanovException):
    """
    Raised when a component id does not exist in the diagram.
    """

    pass


class UnknownKnot(KhovanovException):
    """
    Raised when a name is not present in the knot table.
    """

    pass


CircleSet = collections.namedtuple("CircleSet", ["circles", "index"])
CircleSet.__doc__ = """
Circles of a resolved diagram. circles is a tuple of sorted label tuples in ascending order of
their smallest label; index maps every edge label to the position of its circle.
"""

EnhancedState = collections.namedtuple("EnhancedState", ["state", "orientation"])


class _UnionFind(object):
    def __init__(self, labels):
        self.parent = dict((label, label) for label in labels)

    def find(self, label):
        root = label
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[label] != root:
            self.parent[label], label = root, self.parent[label]
        return root

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            # Keep the smaller label as the root so relabelling is deterministic.
            if b < a:
                a, b = b, a
            self.parent[b] = a

    def classes(self):
        result = collections.defaultdict(list)
        for label in self.parent:
            result[self.find(label)].append(label)
        return result


def _occurrences(crossings):
    occurrences = collections.defaultdict(list)
    for i, crossing in enumerate(crossings):
        for p, label in enumerate(crossing):
            occurrences[label].append((i, p))
    return occurrences


def _other(occurrence_pair, occurrence):
    return occurrence_pair[1] if occurrence_pair[0] == occurrence else occurrence_pair[0]


def _walk(crossings, occurrences, start):
    """
    Follows a strand straight through each crossing, starting along start towards its second
    occurrence. Returns the visited (edge, arrival) pairs in walking order.
    """
    steps = []
    seen = {}
    edge, arrival = start, occurrences[start][1]
    limit = 2 * len(occurrences) + 1
    while len(steps) < limit:
        if edge in seen:
            if seen[edge] != arrival:
                raise ValidationError("Edge {} is traversed in both directions".format(edge))
            return steps
        seen[edge] = arrival
        steps.append((edge, arrival))
        i, p = arrival
        departure = (i, p ^ 2)
        edge = crossings[i][p ^ 2]
        arrival = _other(occurrences[edge], departure)
    raise ValidationError("Strand starting at edge {} does not close up".format(start))


def _orient(crossings, occurrences, steps):
    """
    Returns the steps in the direction of the component's orientation.
    """
    forward = sum(1 for _, (i, p) in steps if p == 0)
    backward = sum(1 for _, (i, p) in steps if p == 2)
    if forward and backward:
        raise ValidationError(
            "Under-strands of the component through edge {} point both ways".format(steps[0][0])
        )

    def reverse(steps):
        return [(edge, _other(occurrences[edge], arrival)) for edge, arrival in reversed(steps)]

    if forward:
        return steps
    if backward:
        return reverse(steps)

    # The component only passes over other strands: its labels decide.
    edges = [edge for edge, _ in steps]
    if len(edges) == 1:
        raise ValidationError("Edge {} forms a circle passing over once".format(edges[0]))
    k = edges.index(min(edges))
    following, preceding = edges[(k + 1) % len(edges)], edges[k - 1]
    if len(edges) > 2:
        return steps if following < preceding else reverse(steps)
    # Two edges: the smaller label leaves the crossing with the smaller index.
    edge, arrival = steps[k]
    tail = _other(occurrences[edge], arrival)
    return steps if tail[0] < arrival[0] else reverse(steps)


def _trace(crossings, loops):
    occurrences = _occurrences(crossings)
    for label, occurrence in occurrences.items():
        if label <= 0:
            raise ValidationError("Edge labels must be positive, got {}".format(label))
        if len(occurrence) != 2:
            raise ValidationError(
                "Edge {} appears {} times, expected exactly twice".format(label, len(occurrence))
            )
    if len(set(loops)) != len(loops):
        raise ValidationError("Duplicate circle labels in {}".format(list(loops)))
    for label in loops:
        if label <= 0:
            raise ValidationError("Edge labels must be positive, got {}".format(label))
        if label in occurrences:
            raise ValidationError("Circle label {} is also used by a crossing".format(label))

    components = []
    heads = {}
    tails = {}
    visited = set()
    for start in sorted(occurrences):
        if start in visited:
            continue
        steps = _orient(crossings, occurrences, _walk(crossings, occurrences, start))
        edges = [edge for edge, _ in steps]
        k = edges.index(min(edges))
        components.append(tuple(edges[k:] + edges[:k]))
        for edge, arrival in steps:
            heads[edge] = arrival
            tails[edge] = _other(occurrences[edge], arrival)
            visited.add(edge)
    for label in loops:
        components.append((label,))
    components.sort(key=min)

    signs = []
    for i, (a, b, c, d) in enumerate(crossings):
        signs.append(1 if heads[d] == (i, 3) else -1)
    return tuple(components), heads, tails, tuple(signs)


def _reoriented(crossings, loops=(), arrows=None, name=None):
    """
    Builds a diagram from crossings whose under-strands sit at positions 0 and 2 but may point
    either way. Every component keeps the direction most of its under-passages already have;
    crossings entered at position 2 are turned half around and their arrows flipped, which leaves
    both resolutions and the saddle decorations unchanged.
    """
    crossings = [tuple(crossing) for crossing in crossings]
    arrows = list(arrows) if arrows is not None else None
    occurrences = _occurrences(crossings)
    for label, occurrence in occurrences.items():
        if len(occurrence) != 2:
            raise ValidationError(
                "Edge {} appears {} times, expected exactly twice".format(label, len(occurrence))
            )
    turned = set()
    visited = set()
    for start in sorted(occurrences):
        if start in visited:
            continue
        steps = _walk(crossings, occurrences, start)
        forward = [i for _, (i, p) in steps if p == 0]
        backward = [i for _, (i, p) in steps if p == 2]
        turned.update(backward if len(forward) >= len(backward) else forward)
        visited.update(edge for edge, _ in steps)
    for i in turned:
        a, b, c, e = crossings[i]
        crossings[i] = (c, e, a, b)
        if arrows is not None:
            arrows[i] = not arrows[i]
    return LinkDiagram(crossings, loops, arrows=arrows, name=name)


def default_arrows(crossings):
    """
    The 0-resolution arrow points from the fragment {a, b} to {c, d} exactly when the smallest
    label of the crossing lies on {a, b}.
    """
    return tuple(min(crossing) in crossing[:2] for crossing in crossings)


class LinkDiagram(object):
    """
    An oriented link diagram.

    crossings is a tuple of label quadruples, loops the labels of crossingless circles,
    components the oriented edge cycles (each starting at its smallest label) in ascending order
    of that label, signs the crossing signs and arrows the per-crossing arrow choice used by the
    cube of resolutions.
    """

    def __init__(self, crossings, loops=(), arrows=None, name=None):
        self.crossings = tuple(tuple(int(label) for label in crossing) for crossing in crossings)
        for crossing in self.crossings:
            if len(crossing) != 4:
                raise ValidationError("Crossing {} does not have four labels".format(crossing))
        self.loops = tuple(sorted(loops))
        self.components, self.heads, self.tails, self.signs = _trace(self.crossings, self.loops)
        if arrows is None:
            arrows = default_arrows(self.crossings)
        self.arrows = tuple(bool(arrow) for arrow in arrows)
        if len(self.arrows) != len(self.crossings):
            raise ValidationError(
                "Got {} arrows for {} crossings".format(len(self.arrows), len(self.crossings))
            )
        self.name = name
        self.component_of = {}
        for index, component in enumerate(self.components):
            for label in component:
                self.component_of[label] = index

    @property
    def n(self):
        return len(self.crossings)

    @property
    def nedges(self):
        return len(self.component_of)

    @property
    def labels(self):
        return sorted(self.component_of)

    @property
    def n_plus(self):
        return sum(1 for sign in self.signs if sign > 0)

    @property
    def n_minus(self):
        return sum(1 for sign in self.signs if sign < 0)

    def successor(self, label):
        component = self.components[self.component_of[label]]
        return component[(component.index(label) + 1) % len(component)]

    def successors(self):
        return dict((label, self.successor(label)) for label in self.component_of)

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return (self.crossings, self.loops, self.arrows) == (
            other.crossings,
            other.loops,
            other.arrows,
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.crossings, self.loops, self.arrows))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return "LinkDiagram('{}')".format(render(self))


def parse_pd(text, name=None):
    crossings = []
    loops = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        position = 0
        for match in _TOKEN_PATTERN.finditer(line):
            if line[position:match.start()].strip(" \t,;"):
                raise ParseError("Unexpected text '{}'".format(line[position:match.start()]))
            position = match.end()
            try:
                labels = [int(piece) for piece in match.group(2).split(",")]
            except ValueError:
                raise ParseError("Labels must be integers in '{}'".format(match.group(0)))
            if any(label <= 0 for label in labels):
                raise ParseError("Labels must be positive in '{}'".format(match.group(0)))
            if match.group(1) == "X":
                if len(labels) != 4:
                    raise ParseError("'{}' needs four labels".format(match.group(0)))
                crossings.append(tuple(labels))
            else:
                if len(labels) != 1:
                    raise ParseError("'{}' needs exactly one label".format(match.group(0)))
                loops.append(labels[0])
        if line[position:].strip(" \t,;"):
            raise ParseError("Unexpected text '{}'".format(line[position:].strip()))
    if not crossings and not loops:
        # The empty code is the unknot.
        loops = [1]
    return LinkDiagram(crossings, loops, name=name)


def render(d):
    tokens = ["X({},{},{},{})".format(*crossing) for crossing in d.crossings]
    tokens.extend("O({})".format(label) for label in d.loops)
    return " ".join(tokens)


def unknot(label=1):
    return LinkDiagram((), (label,), name="0_1")


def writhe(d):
    return sum(d.signs)


def _check_component(d, c):
    if not isinstance(c, int) or not 0 <= c < len(d.components):
        raise UnknownComponent(
            "Diagram has components 0..{}, got {}".format(len(d.components) - 1, c)
        )


def linking_number(d, c1, c2):
    """
    Half the sum of signs of the crossings between components c1 and c2 (0-based ids).
    """
    _check_component(d, c1)
    _check_component(d, c2)
    if c1 == c2:
        raise UnknownComponent("Linking number needs two different components, got {}".format(c1))
    total = 0
    for crossing, sign in zip(d.crossings, d.signs):
        pair = {d.component_of[crossing[0]], d.component_of[crossing[1]]}
        if pair == {c1, c2}:
            total += sign
    if total % 2:
        return fractions.Fraction(total, 2)
    return total // 2


def resolve(d, state):
    """
    Traces the circles of the resolution selected by the bitmask state (bit i = crossing i).
    The 0-resolution joins (a, b) and (c, d), the 1-resolution joins (a, d) and (b, c).
    """
    forest = _UnionFind(d.component_of)
    for i, (a, b, c, e) in enumerate(d.crossings):
        if state >> i & 1:
            forest.union(a, e)
            forest.union(b, c)
        else:
            forest.union(a, b)
            forest.union(c, e)
    circles = sorted(tuple(sorted(labels)) for labels in forest.classes().values())
    index = {}
    for position, circle in enumerate(circles):
        for label in circle:
            index[label] = position
    return CircleSet(tuple(circles), index)


def state_bits(state, n):
    return tuple(state >> i & 1 for i in range(n))


def states(n):
    """
    All 2^n states in lexicographic order of (bit 0, bit 1, ..., bit n-1).
    """
    return sorted(range(1 << n), key=lambda state: state_bits(state, n))


def enhanced_states(d):
    for state in states(d.n):
        circles = resolve(d, state).circles
        for orientation in itertools.product((1, -1), repeat=len(circles)):
            yield EnhancedState(state, orientation)


def _relabelled(crossings, loops, mapping):
    crossings = [tuple(mapping.get(label, label) for label in crossing) for crossing in crossings]
    loops = [mapping.get(label, label) for label in loops]
    return crossings, loops


def _with_orientation(crossings, loops, heads, arrows=None, name=None):
    """
    Builds a diagram whose components run as heads prescribes (a map from labels to the index
    of the crossing their head should sit at). Components that only pass over other strands
    carry their orientation in their labels, so those are relabelled when needed.
    """
    d = LinkDiagram(crossings, loops, arrows=arrows, name=name)
    if not heads:
        return d
    mapping = {}
    for component in d.components:
        start = component[0]
        if len(component) < 2 or start not in heads or d.heads[start][0] == heads[start]:
            continue
        if any(d.heads[label][1] in (0, 2) for label in component):
            raise ValidationError(
                "Component through edge {} cannot be oriented as requested".format(start)
            )
        if len(component) == 2:
            mapping.update({component[0]: component[1], component[1]: component[0]})
        else:
            wanted = (component[0],) + tuple(reversed(component[1:]))
            mapping.update(zip(wanted, sorted(component)))
    if not mapping:
        return d
    debug("Relabelling over-only components: {}".format(sorted(mapping.items())))
    crossings, loops = _relabelled(d.crossings, d.loops, mapping)
    return LinkDiagram(crossings, loops, arrows=arrows, name=name)


def _head_crossings(d, label_offset=0, crossing_offset=0):
    return dict(
        (label + label_offset, i + crossing_offset) for label, (i, _) in d.heads.items()
    )


def mirror(d):
    """
    Exchanges over- and under-strands at every crossing.
    """
    crossings = []
    for (a, b, c, e), sign in zip(d.crossings, d.signs):
        crossings.append((e, a, b, c) if sign > 0 else (b, c, e, a))
    name = d.name + "*" if d.name else None
    return _with_orientation(crossings, d.loops, _head_crossings(d), name=name)


def switch_crossing(d, i):
    """
    Exchanges over- and under-strand at crossing i only.
    """
    if not 0 <= i < d.n:
        raise ValidationError("Diagram has no crossing {}".format(i))
    crossings = list(d.crossings)
    a, b, c, e = crossings[i]
    crossings[i] = (e, a, b, c) if d.signs[i] > 0 else (b, c, e, a)
    return _with_orientation(crossings, d.loops, _head_crossings(d), name=d.name)


def reverse_component(d, c):
    _check_component(d, c)
    component = set(d.components[c])
    crossings = []
    for a, b, cc, e in d.crossings:
        crossings.append((cc, e, a, b) if a in component else (a, b, cc, e))
    heads = _head_crossings(d)
    for label in component:
        if label in d.tails:
            heads[label] = d.tails[label][0]
    return _with_orientation(crossings, d.loops, heads, arrows=d.arrows, name=d.name)


def disjoint_union(d1, d2):
    offset = max(d1.labels or [0])
    crossings = list(d1.crossings)
    crossings.extend(tuple(label + offset for label in crossing) for crossing in d2.crossings)
    loops = list(d1.loops) + [label + offset for label in d2.loops]
    heads = _head_crossings(d1)
    heads.update(_head_crossings(d2, offset, d1.n))
    return _with_orientation(crossings, loops, heads, arrows=d1.arrows + d2.arrows)


def add_unknot(d):
    return disjoint_union(d, unknot())


def with_arrows(d, arrows):
    return LinkDiagram(d.crossings, d.loops, arrows=arrows, name=d.name)


def flip_arrow(d, i):
    arrows = list(d.arrows)
    arrows[i] = not arrows[i]
    return with_arrows(d, arrows)


def renumber_crossings(d, order):
    """
    Returns the diagram whose k-th crossing is crossing order[k] of d.
    """
    if sorted(order) != list(range(d.n)):
        raise ValidationError("{} is not a permutation of the crossings".format(order))
    position = dict((i, k) for k, i in enumerate(order))
    heads = dict((label, position[i]) for label, (i, _) in d.heads.items())
    return _with_orientation(
        [d.crossings[i] for i in order],
        d.loops,
        heads,
        arrows=[d.arrows[i] for i in order],
        name=d.name,
    )


def smooth_crossing(d, i, resolution=None):
    """
    Removes crossing i by one of its resolutions. Without an explicit resolution the oriented
    smoothing is used: the 0-resolution at a positive crossing, the 1-resolution at a negative one.
    The other smoothing may leave a component with under-strands pointing both ways; it is
    reoriented, keeping the labels, the crossing order and every resolution circle.
    """
    if not 0 <= i < d.n:
        raise ValidationError("Diagram has no crossing {}".format(i))
    oriented = resolution is None
    if oriented:
        resolution = 0 if d.signs[i] > 0 else 1
    a, b, c, e = d.crossings[i]
    forest = _UnionFind(d.component_of)
    if resolution:
        forest.union(a, e)
        forest.union(b, c)
    else:
        forest.union(a, b)
        forest.union(c, e)
    rest = [crossing for k, crossing in enumerate(d.crossings) if k != i]
    mapping = dict((label, forest.find(label)) for label in d.component_of)
    crossings, loops = _relabelled(rest, d.loops, mapping)
    used = set(label for crossing in crossings for label in crossing)
    loops = sorted(set(loops) | set(mapping[label] for label in (a, b, c, e)) - used)
    arrows = [arrow for k, arrow in enumerate(d.arrows) if k != i]
    if not oriented:
        return _reoriented(crossings, loops, arrows=arrows)
    heads = {}
    for label, (k, _) in d.heads.items():
        if k != i:
            heads[mapping[label]] = k if k < i else k - 1
    return _with_orientation(crossings, loops, heads, arrows=arrows)


def add_kink(d, edge, variant=0):
    """
    Inserts a curl (first Reidemeister move) into edge. The four variants are the two curl
    directions with the new loop passing over or under; variants 0 and 2 add a negative crossing,
    1 and 3 a positive one.
    """
    if edge not in d.component_of:
        raise ValidationError("Diagram has no edge {}".format(edge))
    top = max(d.labels)
    f = top + 1
    crossings = [list(crossing) for crossing in d.crossings]
    loops = list(d.loops)
    if edge in d.loops:
        loops.remove(edge)
        g = edge
    else:
        g = top + 2
        i, p = d.heads[edge]
        crossings[i][p] = g
    e = edge
    kinks = [(e, f, f, g), (e, g, f, f), (f, e, g, f), (f, f, g, e)]
    if variant not in range(len(kinks)):
        raise ValidationError("Unknown curl variant {}".format(variant))
    crossings.append(kinks[variant])
    return LinkDiagram(crossings, loops, name=d.name)


def hook_circle(d, edge, over=True):
    """
    Adds a small circle pushed across edge by a second Reidemeister move, so the result is
    equivalent to add_unknot(d). The circle passes over the edge, or under it when over is False.
    """
    if edge not in d.component_of:
        raise ValidationError("Diagram has no edge {}".format(edge))
    top = max(d.labels)
    f, g, h = top + 1, top + 2, top + 3
    crossings = [list(crossing) for crossing in d.crossings]
    loops = list(d.loops)
    heads = _head_crossings(d)
    if edge in d.loops:
        loops.remove(edge)
        k = edge
    else:
        k = top + 4
        i, p = d.heads[edge]
        crossings[i][p] = k
        heads[k] = i
    e = edge
    if over:
        crossings.extend([(e, g, h, f), (h, g, k, f)])
    else:
        crossings.extend([(f, e, g, h), (g, k, f, h)])
    heads.update({e: d.n, h: d.n + 1, f: d.n, g: d.n + 1})
    return _with_orientation(crossings, loops, heads, name=d.name)


def _arm_crossing(near, left, far, right, incoming):
    # A circle crossing over an arm of a crossing, listed from the end nearer to that crossing.
    return (far, right, near, left) if incoming else (near, left, far, right)


def encircle_crossing(d, i, pushed=False):
    """
    Adds a small circle lying over every strand. It surrounds crossing i, meeting each of its
    four edges once, or with pushed=True it has been slid across the crossing so that it meets
    the edges at positions 0 and 1 twice each. The two results differ by one third Reidemeister
    move and both are equivalent to add_unknot(d).
    """
    if not 0 <= i < d.n:
        raise ValidationError("Diagram has no crossing {}".format(i))
    fresh = itertools.count(max(d.labels) + 1)
    arms = d.crossings[i]
    incoming = [d.heads[label] == (i, k) for k, label in enumerate(arms)]
    crossings = list(d.crossings)
    if not pushed:
        inner = [next(fresh) for _ in range(4)]
        arcs = [next(fresh) for _ in range(4)]
        crossings[i] = tuple(inner)
        for k in range(4):
            crossings.append(_arm_crossing(inner[k], arcs[k - 1], arms[k], arcs[k], incoming[k]))
    else:
        inner = [next(fresh) for _ in range(2)]
        middle = [next(fresh) for _ in range(2)]
        g1, g2, g3, g4 = [next(fresh) for _ in range(4)]
        crossings[i] = (inner[0], inner[1], arms[2], arms[3])
        crossings.extend(
            [
                _arm_crossing(inner[0], g3, middle[0], g2, incoming[0]),
                _arm_crossing(middle[0], g3, arms[0], g4, incoming[0]),
                _arm_crossing(inner[1], g2, middle[1], g1, incoming[1]),
                _arm_crossing(middle[1], g4, arms[1], g1, incoming[1]),
            ]
        )
    return LinkDiagram(crossings, d.loops, name=d.name)


def closed_braid(word, strands=None, name=None):
    """
    Closes a braid word. Generator k > 0 is a positive crossing of strands k and k+1, -k a
    negative one. Untouched strands become crossingless circles.
    """
    if strands is None:
        strands = max([abs(k) for k in word] + [0]) + 1
    positions = list(range(1, strands + 1))
    top = strands
    crossings = []
    for k in word:
        i = abs(k) - 1
        if not 0 <= i < strands - 1:
            raise ValidationError("Generator {} does not fit {} strands".format(k, strands))
        e1, e2 = positions[i], positions[i + 1]
        f1, f2 = top + 1, top + 2
        top += 2
        crossings.append((e2, f2, f1, e1) if k > 0 else (e1, e2, f2, f1))
        positions[i], positions[i + 1] = f1, f2
    closing = dict((final, initial) for initial, final in enumerate(positions, 1))
    crossings, _ = _relabelled(crossings, (), closing)
    used = set(label for crossing in crossings for label in crossing)
    loops = [label for label in range(1, strands + 1) if label not in used]
    return LinkDiagram(crossings, loops, name=name)


Tangle = collections.namedtuple("Tangle", ["crossings", "nw", "ne", "sw", "se"])
Tangle.__doc__ = """
A four-ended tangle: crossings as in a PD code, except that under-strands may point either way,
and the labels of the edges leaving it at its NW, NE, SW and SE corners.
"""


def twist_tangle(count, labels):
    """
    count horizontal half-twists of two strands; negative counts twist the other way.
    labels is an iterator of fresh edge labels.
    """
    if not count:
        raise ValidationError("A twist tangle needs at least one crossing")
    nw, sw = next(labels), next(labels)
    upper, lower = nw, sw
    crossings = []
    for _ in range(abs(count)):
        ne, se = next(labels), next(labels)
        crossings.append((upper, lower, se, ne) if count > 0 else (lower, se, ne, upper))
        upper, lower = ne, se
    return Tangle(tuple(crossings), nw, upper, sw, lower)


def reflect_tangle(t):
    """
    Reflects the picture of t in its NW-SE diagonal: NE and SW change places and every crossing
    is read clockwise, keeping its over-strand. Tangles built from positive twists this way stay
    alternating.
    """
    crossings = tuple((a, e, c, b) for a, b, c, e in t.crossings)
    return Tangle(crossings, t.nw, t.sw, t.ne, t.se)


def add_tangles(t, s):
    """
    Places s to the right of t, joining t.ne to s.nw and t.se to s.sw.
    """
    mapping = {s.nw: t.ne, s.sw: t.se}
    crossings, _ = _relabelled(s.crossings, (), mapping)
    return Tangle(
        t.crossings + tuple(crossings),
        t.nw,
        mapping.get(s.ne, s.ne),
        t.sw,
        mapping.get(s.se, s.se),
    )


def rational_tangle(terms, labels):
    """
    The tangle a1 a2 ... an: each further term reflects what is there and adds that many twists.
    """
    t = twist_tangle(terms[0], labels)
    for term in terms[1:]:
        t = add_tangles(reflect_tangle(t), twist_tangle(term, labels))
    return t


def numerator_closure(t, name=None):
    """
    Joins NW to NE and SW to SE, then numbers the edges 1, 2, ... along the components.
    """
    crossings, _ = _relabelled(t.crossings, (), {t.ne: t.nw, t.se: t.sw})
    d = _reoriented(crossings)
    numbering = {}
    for component in d.components:
        for label in component:
            numbering[label] = len(numbering) + 1
    crossings, _ = _relabelled(d.crossings, (), numbering)
    return LinkDiagram(crossings, name=name)


def conway_diagram(parts, name=None):
    """
    The diagram of a knot or link in Conway notation. parts holds one list of terms for a
    rational link (e.g. [[2, 1, 1, 2]] for 2112) or several for the Montesinos link
    t1,t2,...: the numerator closure of the sum of the reflected rational tangles.
    """
    if not parts or not all(parts) or any(0 in terms for terms in parts):
        raise ValidationError("{} is not a Conway notation".format(parts))
    labels = itertools.count(1)
    if len(parts) == 1:
        return numerator_closure(rational_tangle(parts[0], labels), name=name)
    total = None
    for terms in parts:
        t = reflect_tangle(rational_tangle(terms, labels))
        total = t if total is None else add_tangles(total, t)
    return numerator_closure(total, name=name)


def _conway_terms(piece):
    # Conway writes single-digit terms side by side; "2-" is the term -2.
    piece = piece.strip()
    negative = piece.endswith("-")
    digits = piece[:-1] if negative else piece
    if not digits.isdigit():
        raise ParseError("'{}' is not a Conway tangle".format(piece))
    terms = [int(digit) for digit in digits]
    if negative:
        terms = [-term for term in terms]
    return terms


def crossing_number(name, d=None):
    """
    The crossing number a table name carries ("8_19" -> 8, "L5a1" -> 5); d.n for other names.
    """
    match = _NAME_PATTERN.match(name or "")
    if match:
        return int(match.group(1) or match.group(2))
    if d is None:
        raise UnknownKnot("'{}' is not a knot table name".format(name))
    return d.n


def parse_entry(text, name=None):
    """
    A table entry is PD text, a braid word BR(k1,k2,...) closed by closed_braid or a Conway
    notation CONWAY(2112) / CONWAY(21,21,2) built by conway_diagram.
    """
    match = _CONWAY_PATTERN.match(text)
    if match:
        pieces = match.group(1).split(",")
        return conway_diagram([_conway_terms(piece) for piece in pieces], name=name)
    match = _BRAID_PATTERN.match(text)
    if not match:
        return parse_pd(text, name=name)
    try:
        word = [int(piece) for piece in match.group(1).split(",") if piece.strip()]
    except ValueError:
        raise ParseError("Braid generators must be integers in '{}'".format(text.strip()))
    if not word or 0 in word:
        raise ParseError("'{}' is not a braid word".format(text.strip()))
    return closed_braid(word, name=name)


def load_table(path=None):
    """
    Reads a knot table: one "name<TAB>entry" record per line, '#' starts a comment. Entries
    are PD text or braid words, see parse_entry.
    KH_TABLE_PATH overrides the bundled file.
    """
    path = path or os.environ.get("KH_TABLE_PATH") or TABLE_PATH
    table = collections.OrderedDict()
    try:
        with open(path, "rb") as fd:
            content = fd.read().decode("utf-8")
    except IOError as e:
        raise KhovanovException("Cannot read knot table {}: {}".format(path, e))
    for number, line in enumerate(content.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        name, _, text = line.partition("\t")
        name = name.strip()
        if not text.strip() and name != "0_1":
            raise ParseError("{}:{}: expected 'name<TAB>pd-text'".format(path, number))
        if name in table:
            raise ParseError("{}:{}: duplicate entry {}".format(path, number, name))
        try:
            table[name] = parse_entry(text, name=name)
        except KhovanovException as e:
            raise type(e)("{}:{}: {}: {}".format(path, number, name, e))
    return table


def lookup(name, path=None):
    table = load_table(path)
    if name not in table:
        raise UnknownKnot("No knot named '{}' in the table".format(name))
    return table[name]
