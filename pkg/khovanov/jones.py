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
Kauffman bracket, Jones polynomial and the quantum-normalized Jones polynomial.

Jones polynomials are kept in s = t^(1/2) so that links with an even number of components stay
integral.
"""

import collections
import fractions

import diagram as diagrams
from common import ConsistencyException, run_in_parallel
from ring import LaurentPoly, laurent_substitute

KauffmanState = collections.namedtuple("KauffmanState", ["state", "circles", "tau"])


def kauffman_states(d):
    for state in diagrams.states(d.n):
        ones = bin(state).count("1")
        circles = len(diagrams.resolve(d, state).circles)
        yield KauffmanState(state, circles, (d.n - ones) - ones)


def _loop_value():
    return LaurentPoly("A", {-2: 1, 2: 1})


def _state_sum(d, term, jobs):
    total = LaurentPoly("A")
    for value in run_in_parallel(term, list(kauffman_states(d)), jobs):
        total = total + value
    return total


def kauffman_bracket(d, jobs=1):
    """
    Σ over states of (-1)^(|S|-1) A^τ (A^-2 + A^2)^(|S|-1), τ = n0 - n1: every
    0-resolution (A-smoothing) contributes A, every 1-resolution A^-1.
    """

    def term(s):
        sign = -1 if (s.circles - 1) % 2 else 1
        return (_loop_value() ** (s.circles - 1)).shift(s.tau) * sign

    return _state_sum(d, term, jobs)


def kauffman_bracket_enhanced(d, jobs=1):
    """
    Σ over enhanced states of (-1)^(|S|-1) A^(τ + 2σ), with σ the number of positively oriented
    circles minus the negatively oriented ones. Summing the orientations of every circle
    contributes one more factor A^2 + A^-2 than the bracket, which is divided out.
    """

    def term(s):
        sign = -1 if (s.circles - 1) % 2 else 1
        value = collections.Counter()
        for plus in range(s.circles + 1):
            sigma = plus - (s.circles - plus)
            value[s.tau + 2 * sigma] += sign * _binomial(s.circles, plus)
        return LaurentPoly("A", value)

    return _state_sum(d, term, jobs).divide_exact(_loop_value())


def _binomial(n, k):
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def jones_polynomial(d, jobs=1):
    """
    V(s) = (-A^3)^(-w) ⟨D⟩ at A = s^(-1/2), i.e. t = A^-4.
    """
    w = diagrams.writhe(d)
    normalized = kauffman_bracket(d, jobs).shift(-3 * w) * (-1 if w % 2 else 1)
    return laurent_substitute(normalized, "s", fractions.Fraction(-1, 2))


def jones_in_t(v):
    """
    Rewrites V(s) in t = s^2. Raises FractionalExponent when half-integer powers remain.
    """
    return laurent_substitute(v, "t", fractions.Fraction(1, 2))


def q_bracket(d, jobs=1):
    """
    Σ over states of (-q)^|ξ| (q + q^-1)^|S|.
    """
    loop = LaurentPoly("q", {-1: 1, 1: 1})

    def term(s):
        ones = bin(s.state).count("1")
        return (loop ** s.circles).shift(ones) * (-1 if ones % 2 else 1)

    total = LaurentPoly("q")
    for value in run_in_parallel(term, list(kauffman_states(d)), jobs):
        total = total + value
    return total


def jones_q(d, jobs=1):
    """
    J(q) = (-1)^(n-) q^(n+ - 2 n-) ⟨D⟩_q.
    """
    sign = -1 if d.n_minus % 2 else 1
    return q_bracket(d, jobs).shift(d.n_plus - 2 * d.n_minus) * sign


def jones_from_q(j):
    """
    V(s) = J(-s) / (-s - s^-1).
    """
    numerator = laurent_substitute(j, "s", 1, negate=True)
    return numerator.divide_exact(LaurentPoly("s", {-1: -1, 1: -1}))


def skein_triple(d, i):
    """
    Diagrams (D+, D-, D0) agreeing with d away from crossing i, where crossing i is positive,
    negative and smoothed respectively.
    """
    switched = diagrams.switch_crossing(d, i)
    smoothed = diagrams.smooth_crossing(d, i)
    if d.signs[i] > 0:
        return d, switched, smoothed
    return switched, d, smoothed


def jones_skein_residual(d, i, jobs=1):
    """
    s^-2 V+ - s^2 V- - (s - s^-1) V0, which vanishes.
    """
    plus, minus, zero = [jones_polynomial(e, jobs) for e in skein_triple(d, i)]
    return plus.shift(-2) - minus.shift(2) - zero * LaurentPoly("s", {1: 1, -1: -1})


def q_skein_residual(d, i, jobs=1):
    """
    q^-2 J+ - q^2 J- - (q^-1 - q) J0, which vanishes.
    """
    plus, minus, zero = [jones_q(e, jobs) for e in skein_triple(d, i)]
    return plus.shift(-2) - minus.shift(2) - zero * LaurentPoly("q", {-1: 1, 1: -1})


def categorification_check(d, complex_, jobs=1):
    """
    Compares the graded Euler characteristic of a Khovanov complex of d with J(q), and the Jones
    polynomial recovered from it with the bracket one. Raises ConsistencyException on mismatch.
    """
    j = jones_q(d, jobs)
    euler = complex_.graded_euler()
    if euler != j:
        raise ConsistencyException(
            "Euler characteristic {} differs from J(q) = {}".format(euler, j),
            dump={"euler": str(euler), "jones_q": str(j)},
        )
    v = jones_polynomial(d, jobs)
    recovered = jones_from_q(j)
    if recovered != v:
        raise ConsistencyException(
            "J(-s)/(-s - 1/s) = {} differs from V = {}".format(recovered, v),
            dump={"recovered": str(recovered), "jones": str(v)},
        )
    return j
