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
The chronological Frobenius algebra V = R_U v+ ⊕ R_U v- and the functor it induces on circles
and saddles.

A basis word of V^⊗n is a string over "+" and "-"; position k holds the letter of the k-th circle
in canonical order. Vectors are dicts from words to RingElem coefficients.
"""

import collections
import itertools

from common import ConsistencyException, KhovanovException
from ring import ONE, X, Y, Z, RingElem, UnitMonomial

PLUS = "+"
MINUS = "-"
LETTERS = (PLUS, MINUS)

# Exponent vectors of the basis letters for the braiding bicharacter.
_CHARACTER = {PLUS: (1, 0), MINUS: (0, 1)}

ROUTING_STRATEGIES = ("bubble", "selection")


class PositionOutOfRange(KhovanovException):
    """
    Raised when a braiding position does not address two adjacent letters of a word.
    """

    pass


class InconsistentCircleMap(ConsistencyException):
    """
    Raised when a saddle does not fit the word it is applied to.
    """

    pass


RelationResult = collections.namedtuple("RelationResult", ["name", "passed", "detail"])


def words(n):
    """
    All basis words of length n, "+" before "-".
    """
    return ["".join(letters) for letters in itertools.product(LETTERS, repeat=n)]


def word_degree(word):
    return word.count(PLUS) - word.count(MINUS)


class FrobeniusData(object):
    """
    Structure constants of the chronological Frobenius algebra with twisting units x, y, z:

        μ(++) = +    μ(+-) = -    μ(-+) = xz -    μ(--) = 0
        Δ(+) = (-,+) + yz (+,-)    Δ(-) = (-,-)
        η(1) = +     ε(+) = 0     ε(-) = 1
        S(p ⊗ q) = s(p, q) q ⊗ p with s(+,+) = x, s(+,-) = z^-1, s(-,+) = z, s(-,-) = y
    """

    def __init__(self, x=X, y=Y, z=Z):
        self.x, self.y, self.z = x, y, z
        self._braid = {}
        for p, q in itertools.product(LETTERS, repeat=2):
            (p1, p2), (q1, q2) = _CHARACTER[p], _CHARACTER[q]
            self._braid[p, q] = x ** (p1 * q1) * y ** (p2 * q2) * z ** (p2 * q1 - p1 * q2)
        self._mult = {
            (PLUS, PLUS): (PLUS, ONE),
            (PLUS, MINUS): (MINUS, ONE),
            (MINUS, PLUS): (MINUS, x * z),
            (MINUS, MINUS): None,
        }
        self._comult = {
            PLUS: [((MINUS, PLUS), ONE), ((PLUS, MINUS), y * z)],
            MINUS: [((MINUS, MINUS), ONE)],
        }
        self._counit = {PLUS: None, MINUS: ONE}

    def braid(self, p, q):
        return self._braid[p, q]

    def mult(self, p, q):
        return self._mult[p, q]

    def comult(self, p):
        return self._comult[p]

    def unit(self):
        return PLUS

    def counit(self, p):
        return self._counit[p]

    @classmethod
    def specialized(cls, spec):
        """
        The algebra whose twisting units are the images of x, y and z under spec.
        """
        if spec.target == "Z":
            return cls(UnitMonomial(spec.x), UnitMonomial(spec.y), UnitMonomial(spec.z))
        return cls(spec.x, spec.y, spec.z)

    def __repr__(self):
        return "FrobeniusData(x={}, y={}, z={})".format(self.x, self.y, self.z)

    # Word-level maps acting on the leading letters.

    def mu_front(self, word):
        product = self.mult(word[0], word[1])
        if product is None:
            return {}
        letter, coefficient = product
        return {letter + word[2:]: coefficient}

    def delta_front(self, word):
        return dict(
            (a + b + word[1:], coefficient) for (a, b), coefficient in self.comult(word[0])
        )

    def eta_front(self, word):
        return {PLUS + word: ONE}

    def epsilon_front(self, word):
        coefficient = self.counit(word[0])
        if coefficient is None:
            return {}
        return {word[1:]: coefficient}


UNIVERSAL_ALGEBRA = FrobeniusData()


def apply_braiding(word, k, algebra=UNIVERSAL_ALGEBRA):
    """
    Swaps letters k and k+1 (1-based) of word. Returns {new word: coefficient}.
    """
    if not 1 <= k < len(word):
        raise PositionOutOfRange(
            "Cannot braid positions {} and {} of a word of length {}".format(k, k + 1, len(word))
        )
    p, q = word[k - 1], word[k]
    return {word[: k - 1] + q + p + word[k + 1 :]: algebra.braid(p, q)}


def _swap(algebra, letters, keys, k):
    coefficient = algebra.braid(letters[k], letters[k + 1])
    letters[k], letters[k + 1] = letters[k + 1], letters[k]
    keys[k], keys[k + 1] = keys[k + 1], keys[k]
    return coefficient


def route(word, destinations, algebra=UNIVERSAL_ALGEBRA, strategy="bubble"):
    """
    Moves letter k of word to position destinations[k] by adjacent braidings.
    Returns (routed word, accumulated unit).
    """
    letters = list(word)
    keys = list(destinations)
    coefficient = ONE
    if strategy == "bubble":
        changed = True
        while changed:
            changed = False
            for k in range(len(letters) - 1):
                if keys[k] > keys[k + 1]:
                    coefficient = coefficient * _swap(algebra, letters, keys, k)
                    changed = True
    elif strategy == "selection":
        for target in range(len(letters)):
            k = keys.index(min(keys[target:]), target)
            while k > target:
                coefficient = coefficient * _swap(algebra, letters, keys, k - 1)
                k -= 1
    else:
        raise ValueError("Unknown routing strategy '{}'".format(strategy))
    return "".join(letters), coefficient


def _add_to(vector, word, coefficient):
    total = vector.get(word, RingElem()) + coefficient
    if total:
        vector[word] = total
    else:
        vector.pop(word, None)


def routed(word, inputs, function, outputs, algebra=UNIVERSAL_ALGEBRA, strategy="bubble"):
    """
    Brings the letters at positions inputs to the front (in that order), applies function to the
    word, then sends the leading len(outputs) letters of every result to positions outputs.
    All other letters keep their relative order.
    """
    rest = [k for k in range(len(word)) if k not in inputs]
    keys = [0] * len(word)
    for n, k in enumerate(list(inputs) + rest):
        keys[k] = n
    front, coefficient = route(word, keys, algebra, strategy)
    result = {}
    for image, image_coefficient in function(front).items():
        others = [k for k in range(len(image)) if k not in outputs]
        final, back = route(image, list(outputs) + others, algebra, strategy)
        _add_to(result, final, RingElem.coerce(coefficient * image_coefficient * back))
    return result


def linear(function, vector):
    """
    Extends a word-level map linearly to a vector.
    """
    result = {}
    for word, coefficient in vector.items():
        for image, image_coefficient in function(word).items():
            _add_to(result, image, RingElem.coerce(coefficient) * image_coefficient)
    return result


class LinearMap(object):
    """
    A sparse matrix between spans of basis words: columns[source word][target word] = entry.
    """

    def __init__(self, columns=None):
        self.columns = dict((source, dict(column)) for source, column in (columns or {}).items())

    @classmethod
    def from_function(cls, basis, function):
        return cls(dict((word, function(word)) for word in basis))

    def __call__(self, vector):
        return linear(lambda word: self.columns.get(word, {}), vector)

    def compose(self, other):
        """
        self ∘ other.
        """
        return LinearMap(
            dict((word, self(column)) for word, column in other.columns.items())
        )

    def scaled(self, unit):
        return LinearMap(
            dict(
                (word, dict((image, c * unit) for image, c in column.items()))
                for word, column in self.columns.items()
            )
        )

    def entries(self):
        for source in sorted(self.columns):
            for target in sorted(self.columns[source]):
                yield source, target, self.columns[source][target]

    def is_zero(self):
        return not any(self.columns.values())

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        mine = dict((k, v) for k, v in self.columns.items() if v)
        theirs = dict((k, v) for k, v in other.columns.items() if v)
        return mine == theirs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result


def _saddle_routes(saddle):
    """
    Returns (inputs, function name, outputs) for routing a saddle through the front slots.
    The circle picked by the crossing arrow always occupies the second front slot.
    """
    if saddle.kind == "merge":
        first, second = saddle.sources
        other = second if saddle.arrow_target == first else first
        return (other, saddle.arrow_target), "mu_front", (saddle.targets[0],)
    first, second = saddle.targets
    other = second if saddle.arrow_target == first else first
    return (saddle.sources[0],), "delta_front", (other, saddle.arrow_target)


def saddle_action(saddle, word, algebra=UNIVERSAL_ALGEBRA, strategy="bubble"):
    """
    Image of a single basis word under the saddle map: {target word: coefficient}.
    """
    inputs, function, outputs = _saddle_routes(saddle)
    expected = saddle.source_count
    if len(word) != expected or any(k >= expected for k in inputs):
        raise InconsistentCircleMap(
            "Saddle at crossing {} expects {} source circles, got word '{}'".format(
                saddle.crossing, expected, word
            )
        )
    result = routed(word, inputs, getattr(algebra, function), outputs, algebra, strategy)
    for image in result:
        if len(image) != saddle.target_count:
            raise InconsistentCircleMap(
                "Saddle at crossing {} produced '{}' for {} target circles".format(
                    saddle.crossing, image, saddle.target_count
                )
            )
    return result


def apply_saddle(saddle, algebra=UNIVERSAL_ALGEBRA, basis=None, strategy="bubble"):
    """
    The saddle map as a LinearMap on basis (all source words by default).
    """
    if basis is None:
        basis = words(saddle.source_count)
    return LinearMap.from_function(
        basis, lambda word: saddle_action(saddle, word, algebra, strategy)
    )


def _maps_equal(left, right, domain):
    failures = []
    for word in domain:
        a, b = left(word), right(word)
        if a != b:
            failures.append("{}: {} != {}".format(word, _render(a), _render(b)))
    return failures


def _render(vector):
    if not vector:
        return "0"
    return " + ".join("({})*({})".format(c, word) for word, c in sorted(vector.items()))


def _then(*functions):
    """
    Composes word-level maps left to right.
    """

    def composite(word):
        vector = {word: RingElem.coerce(ONE)}
        for function in functions:
            vector = linear(function, vector)
        return vector

    return composite


def _times(unit, function):
    return lambda word: dict((w, RingElem.coerce(c) * unit) for w, c in function(word).items())


def _plus(*functions):
    def total(word):
        result = {}
        for function in functions:
            for image, coefficient in function(word).items():
                _add_to(result, image, RingElem.coerce(coefficient))
        return result

    return total


def four_tube_maps(algebra=UNIVERSAL_ALGEBRA):
    """
    The cobordisms V⊗V -> V⊗V of the four-tube relation, as word-level maps. M1 and M2 cap off
    the first or the second circle and put a new one in its place, M3 is two deaths followed by
    a birth and a split, M4 a merge followed by a death and two births.
    """
    a = algebra
    cap = _then(a.epsilon_front, a.eta_front)

    def cap_second(word):
        return routed(word, (1,), cap, (1,), a)

    return (
        cap,
        cap_second,
        _then(a.epsilon_front, a.epsilon_front, a.eta_front, a.delta_front),
        _then(a.mu_front, a.epsilon_front, a.eta_front, a.eta_front),
    )


def relation_suite(algebra=UNIVERSAL_ALGEBRA):
    """
    Evaluates the local relations and the chronological Frobenius axioms. Maps that act on a
    later tensor slot are routed through the front slots by braidings. Returns a list of
    RelationResult.
    """
    a = algebra
    x, y, z = a.x, a.y, a.z

    def at(slot, arity_in, arity_out, function):
        return lambda word: routed(
            word,
            tuple(range(slot, slot + arity_in)),
            function,
            tuple(range(slot, slot + arity_out)),
            a,
        )

    def identity(word):
        return {word: RingElem.coerce(ONE)}

    def braid_front(word):
        return apply_braiding(word, 1, a)

    def constant(vector):
        return lambda word: dict(vector)

    one, two, three = words(1), words(2), words(3)
    results = []

    def check(name, left, right, domain):
        failures = _maps_equal(left, right, domain)
        results.append(RelationResult(name, not failures, "; ".join(failures)))

    check("sphere", _then(a.eta_front, a.epsilon_front), constant({}), [""])
    check(
        "torus",
        _then(a.eta_front, a.delta_front, a.mu_front, a.epsilon_front),
        constant({"": RingElem.coerce(x * z) + y * z}),
        [""],
    )
    check("mu-braiding", _then(braid_front, a.mu_front), _times(x, a.mu_front), two)
    check("braiding-delta", _then(a.delta_front, braid_front), _times(y, a.delta_front), one)
    check(
        "associativity",
        _then(a.mu_front, a.mu_front),
        _times(x, _then(at(1, 2, 1, a.mu_front), a.mu_front)),
        three,
    )
    check(
        "coassociativity",
        _then(a.delta_front, a.delta_front),
        _times(y, _then(a.delta_front, at(1, 1, 2, a.delta_front))),
        one,
    )
    check("left-unit", _then(a.eta_front, a.mu_front), identity, one)
    check("right-unit", _then(at(1, 0, 1, a.eta_front), a.mu_front), _times(x, identity), one)
    check("left-counit", _then(a.delta_front, a.epsilon_front), identity, one)
    check(
        "right-counit",
        _then(a.delta_front, at(1, 1, 0, a.epsilon_front)),
        _times(y, identity),
        one,
    )
    frobenius = _times(z, _then(a.mu_front, a.delta_front))
    check("frobenius-left", _then(at(1, 1, 2, a.delta_front), a.mu_front), frobenius, two)
    check(
        "frobenius-right",
        _then(a.delta_front, at(1, 2, 1, a.mu_front)),
        frobenius,
        two,
    )
    check("braiding-involution", _then(braid_front, braid_front), identity, two)
    check(
        "braid-relation",
        _then(
            lambda w: apply_braiding(w, 1, a),
            lambda w: apply_braiding(w, 2, a),
            lambda w: apply_braiding(w, 1, a),
        ),
        _then(
            lambda w: apply_braiding(w, 2, a),
            lambda w: apply_braiding(w, 1, a),
            lambda w: apply_braiding(w, 2, a),
        ),
        three,
    )

    # In this chronology y goes with M3 and x with M4.
    m1, m2, m3, m4 = four_tube_maps(a)
    check(
        "four-tube",
        _plus(_times(z, m1), _times(z, m2)),
        _plus(_times(y, m3), _times(x, m4)),
        two,
    )

    degree_failures = []
    for p, q in itertools.product(LETTERS, repeat=2):
        product = a.mult(p, q)
        if product and word_degree(product[0]) != word_degree(p + q) - 1:
            degree_failures.append("μ({}{})".format(p, q))
        if word_degree(q + p) != word_degree(p + q):
            degree_failures.append("S({}{})".format(p, q))
    for p in LETTERS:
        for (u, v), _ in a.comult(p):
            if word_degree(u + v) != word_degree(p) - 1:
                degree_failures.append("Δ({})".format(p))
        if a.counit(p) is not None and word_degree(p) + 1 != 0:
            degree_failures.append("ε({})".format(p))
    if word_degree(a.unit()) != 1:
        degree_failures.append("η")
    results.append(
        RelationResult("degrees", not degree_failures, ", ".join(degree_failures))
    )
    return results
