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
Exact arithmetic in R_U = Z[x, y, z, z^-1] / (x^2 = 1, y^2 = 1).

Elements are stored as maps from monomial keys (a, b, c), meaning x^a y^b z^c with a and b
reduced mod 2, to nonzero integer coefficients. Integers are Python ints, so nothing overflows.
"""

import collections
import fractions
import re

from common import KhovanovException


class RingParseError(KhovanovException):
    """
    Raised when a ring element or Laurent polynomial cannot be parsed.
    """

    pass


class NonUnitImage(KhovanovException):
    """
    Raised when a specialization sends x, y or z to something that is not a unit of the
    target ring, or when x and y do not square to one.
    """

    pass


class FractionalExponent(KhovanovException):
    """
    Raised when a substitution would produce a non-integer exponent.
    """

    pass


class NotDivisible(KhovanovException):
    """
    Raised when an exact division of Laurent polynomials leaves a remainder.
    """

    pass


class UnitMonomial(collections.namedtuple("UnitMonomial", ["sign", "xexp", "yexp", "zexp"])):
    """
    A unit ±x^a y^b z^c of R_U. The units form the abelian group {±1} × Z/2 × Z/2 × Z.
    """

    __slots__ = ()

    def __new__(cls, sign=1, xexp=0, yexp=0, zexp=0):
        if sign not in (1, -1):
            raise ValueError("Sign of a unit must be +1 or -1, got {}".format(sign))
        return super(UnitMonomial, cls).__new__(cls, sign, xexp % 2, yexp % 2, zexp)

    def __mul__(self, other):
        if isinstance(other, UnitMonomial):
            return unit_mul(self, other)
        return RingElem.coerce(self) * other

    def __rmul__(self, other):
        return RingElem.coerce(other) * RingElem.coerce(self)

    def __add__(self, other):
        return RingElem.coerce(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return RingElem.coerce(self) - other

    def __rsub__(self, other):
        return RingElem.coerce(other) - RingElem.coerce(self)

    def __neg__(self):
        return UnitMonomial(-self.sign, self.xexp, self.yexp, self.zexp)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        sign = self.sign if k % 2 else 1
        return UnitMonomial(sign, self.xexp * k, self.yexp * k, self.zexp * k)

    def __truediv__(self, other):
        return unit_mul(self, other.inverse())

    def inverse(self):
        # x and y are their own inverses.
        return UnitMonomial(self.sign, self.xexp, self.yexp, -self.zexp)

    def key(self):
        return (self.xexp, self.yexp, self.zexp)

    def to_ring(self):
        return RingElem.coerce(self)

    def __str__(self):
        return str(RingElem.coerce(self))

    @staticmethod
    def parse(text):
        value = RingElem.parse(text)
        unit = value.as_unit()
        if unit is None:
            raise RingParseError("'{}' is not a unit monomial".format(text))
        return unit


ONE = UnitMonomial()
MINUS_ONE = UnitMonomial(-1)
X = UnitMonomial(1, 1, 0, 0)
Y = UnitMonomial(1, 0, 1, 0)
Z = UnitMonomial(1, 0, 0, 1)
XY = UnitMonomial(1, 1, 1, 0)


def unit_mul(u, v):
    return UnitMonomial(
        u.sign * v.sign, u.xexp + v.xexp, u.yexp + v.yexp, u.zexp + v.zexp
    )


_TERM_PATTERN = re.compile(r"\s*([+-]?)\s*([^+-]+)")
_FACTOR_PATTERN = re.compile(r"^([a-zA-Z]+)(?:\^(-?\d+))?$")


def _split_terms(text):
    text = text.strip()
    if not text:
        raise RingParseError("Empty expression")
    terms = []
    position = 0
    for match in _TERM_PATTERN.finditer(text):
        if match.start() != position and text[position:match.start()].strip():
            raise RingParseError("Cannot parse '{}'".format(text))
        sign = -1 if match.group(1) == "-" else 1
        if not match.group(1) and terms:
            raise RingParseError("Missing operator in '{}'".format(text))
        terms.append((sign, match.group(2).strip()))
        position = match.end()
    if text[position:].strip():
        raise RingParseError("Cannot parse '{}'".format(text))
    # "z^-1" is split at its minus sign by the term pattern; glue such pieces back.
    merged = []
    for sign, body in terms:
        if merged and merged[-1][1].endswith("^"):
            previous_sign, previous_body = merged.pop()
            body = previous_body + ("-" if sign < 0 else "") + body
            sign = previous_sign
        merged.append((sign, body))
    return merged


def _parse_term(body, variables):
    coefficient = 1
    exponents = dict((name, 0) for name in variables)
    for factor in body.split("*"):
        factor = factor.strip()
        if not factor:
            raise RingParseError("Empty factor in '{}'".format(body))
        if factor.isdigit():
            coefficient *= int(factor)
            continue
        match = _FACTOR_PATTERN.match(factor)
        if not match or match.group(1) not in exponents:
            raise RingParseError("Unknown factor '{}'".format(factor))
        exponents[match.group(1)] += int(match.group(2) or 1)
    return coefficient, exponents


class RingElem(object):
    """
    An element of R_U as a canonical map from (a, b, c) to a nonzero integer.

    Instances are treated as immutable once constructed.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        canonical = {}
        for (a, b, c), coefficient in (terms or {}).items():
            key = (a % 2, b % 2, c)
            canonical[key] = canonical.get(key, 0) + coefficient
        self._terms = dict((k, v) for k, v in canonical.items() if v)

    @classmethod
    def _wrap(cls, terms):
        value = cls.__new__(cls)
        value._terms = terms
        return value

    @classmethod
    def coerce(cls, value):
        if isinstance(value, RingElem):
            return value
        if isinstance(value, UnitMonomial):
            return cls._wrap({value.key(): value.sign})
        if isinstance(value, int):
            return cls._wrap({(0, 0, 0): value} if value else {})
        raise TypeError("Cannot convert {!r} to a ring element".format(value))

    def terms(self):
        return sorted(self._terms.items())

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for key, coefficient in other._terms.items():
            total = terms.get(key, 0) + coefficient
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return RingElem._wrap(terms)

    __radd__ = __add__

    def __neg__(self):
        return RingElem._wrap(dict((k, -v) for k, v in self._terms.items()))

    def __sub__(self, other):
        return self + (-RingElem.coerce(other))

    def __rsub__(self, other):
        return RingElem.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, UnitMonomial):
            # Multiplying by a unit only permutes keys, so no collisions can occur.
            return RingElem._wrap(
                dict(
                    (
                        ((a + other.xexp) % 2, (b + other.yexp) % 2, c + other.zexp),
                        v * other.sign,
                    )
                    for (a, b, c), v in self._terms.items()
                )
            )
        try:
            other = RingElem.coerce(other)
        except TypeError:
            return NotImplemented
        terms = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in other._terms.items():
                key = ((a1 + a2) % 2, (b1 + b2) % 2, c1 + c2)
                terms[key] = terms.get(key, 0) + v1 * v2
        return RingElem._wrap(dict((k, v) for k, v in terms.items() if v))

    __rmul__ = __mul__

    def as_unit(self):
        """
        Returns the UnitMonomial equal to this element, or None if it is not a unit monomial.
        """
        if len(self._terms) != 1:
            return None
        ((a, b, c), coefficient), = self._terms.items()
        if coefficient not in (1, -1):
            return None
        return UnitMonomial(coefficient, a, b, c)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for (a, b, c), coefficient in self.terms():
            factors = []
            if a:
                factors.append("x")
            if b:
                factors.append("y")
            if c == 1:
                factors.append("z")
            elif c:
                factors.append("z^{}".format(c))
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "{}*{}".format(magnitude, "*".join(factors))
            if not pieces:
                pieces.append(("-" if coefficient < 0 else "") + body)
            else:
                pieces.append(("- " if coefficient < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "RingElem('{}')".format(self)

    @staticmethod
    def parse(text):
        if text.strip() == "0":
            return RingElem()
        terms = {}
        for sign, body in _split_terms(text):
            coefficient, exponents = _parse_term(body, ("x", "y", "z"))
            key = (exponents["x"] % 2, exponents["y"] % 2, exponents["z"])
            terms[key] = terms.get(key, 0) + sign * coefficient
        return RingElem(terms)


def ring_arith(a, b, op):
    a = RingElem.coerce(a)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError("Unknown ring operation '{}'".format(op))


class Specialization(collections.namedtuple("Specialization", ["x", "y", "z", "target"])):
    """
    A ring homomorphism out of R_U, given by the images of x, y and z.

    With target "Z" the images are +1 or -1. With target "R_U" they are UnitMonomials, which
    allows automorphisms such as exchanging x and y.
    """

    __slots__ = ()

    def __new__(cls, x, y, z, target="Z"):
        if target == "Z":
            for name, image in (("x", x), ("y", y)):
                if image not in (1, -1):
                    raise NonUnitImage(
                        "Image of {} must square to 1 in Z, got {}".format(name, image)
                    )
            if z not in (1, -1):
                raise NonUnitImage("Image of z must be invertible in Z, got {}".format(z))
        elif target == "R_U":
            for name, image in (("x", x), ("y", y)):
                if not isinstance(image, UnitMonomial) or image * image != ONE:
                    raise NonUnitImage("Image of {} must square to 1, got {}".format(name, image))
            if not isinstance(z, UnitMonomial):
                raise NonUnitImage("Image of z must be a unit, got {}".format(z))
        else:
            raise ValueError("Unknown specialization target '{}'".format(target))
        return super(Specialization, cls).__new__(cls, x, y, z, target)

    @property
    def is_universal(self):
        return self.target == "R_U" and (self.x, self.y, self.z) == (X, Y, Z)

    def swapped(self):
        """
        Returns the specialization with the images of x and y exchanged.
        """
        return Specialization(self.y, self.x, self.z, self.target)

    def __call__(self, value):
        return specialize(value, self)

    def __str__(self):
        if self.is_universal:
            return "universal"
        return "{},{},{}".format(self.x, self.y, self.z)

    @staticmethod
    def parse(text):
        text = text.strip()
        if text == "universal":
            return UNIVERSAL
        pieces = [piece.strip() for piece in text.split(",")]
        if len(pieces) != 3:
            raise RingParseError(
                "Specialization must be 'x,y,z' or 'universal', got '{}'".format(text)
            )
        try:
            images = [int(piece) for piece in pieces]
        except ValueError:
            raise RingParseError("Specialization images must be integers, got '{}'".format(text))
        return Specialization(*images)


UNIVERSAL = Specialization(X, Y, Z, "R_U")
EVEN = Specialization(1, 1, 1)
ODD = Specialization(1, -1, 1)


def specialize(value, spec):
    """
    Applies the homomorphism spec termwise. Returns an int for target Z, otherwise a RingElem.
    """
    if isinstance(value, UnitMonomial):
        if spec.target == "Z":
            return value.sign * spec.x ** value.xexp * spec.y ** value.yexp * spec.z ** (
                value.zexp % 2
            )
        image = spec.x ** value.xexp * spec.y ** value.yexp * spec.z ** value.zexp
        return image if value.sign > 0 else -image
    value = RingElem.coerce(value)
    if spec.is_universal:
        return value
    if spec.target == "Z":
        total = 0
        for (a, b, c), coefficient in value.terms():
            # z is ±1, so only the parity of its exponent matters.
            total += coefficient * spec.x ** a * spec.y ** b * spec.z ** (c % 2)
        return total
    result = RingElem()
    for (a, b, c), coefficient in value.terms():
        image = spec.x ** a * spec.y ** b * spec.z ** c
        result = result + RingElem.coerce(image) * coefficient
    return result


class LaurentPoly(object):
    """
    A Laurent polynomial with integer coefficients in one variable (A, q or s, where s stands
    for t^(1/2)).
    """

    __slots__ = ("var", "_coeffs")

    def __init__(self, var, coeffs=None):
        self.var = var
        self._coeffs = dict((e, c) for e, c in (coeffs or {}).items() if c)

    @classmethod
    def monomial(cls, var, exponent, coefficient=1):
        return cls(var, {exponent: coefficient})

    @classmethod
    def constant(cls, var, value):
        return cls(var, {0: value})

    def coefficients(self):
        return sorted(self._coeffs.items())

    def coefficient(self, exponent):
        return self._coeffs.get(exponent, 0)

    def degrees(self):
        if not self._coeffs:
            return None
        return min(self._coeffs), max(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(
                    "Cannot combine polynomials in {} and {}".format(self.var, other.var)
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.var, other)
        raise TypeError("Cannot convert {!r} to a Laurent polynomial".format(other))

    def __eq__(self, other):
        if isinstance(other, LaurentPoly) and other.var != self.var:
            return False
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.var, frozenset(self._coeffs.items())))

    def __add__(self, other):
        other = self._coerce(other)
        coeffs = dict(self._coeffs)
        for e, c in other._coeffs.items():
            coeffs[e] = coeffs.get(e, 0) + c
        return LaurentPoly(self.var, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.var, dict((e, -c) for e, c in self._coeffs.items()))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        coeffs = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                coeffs[e1 + e2] = coeffs.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(self.var, coeffs)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("Negative powers are only defined for monomials; use shift()")
        result = LaurentPoly.constant(self.var, 1)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k):
        """
        Multiplies by var^k.
        """
        return LaurentPoly(self.var, dict((e + k, c) for e, c in self._coeffs.items()))

    def divide_exact(self, divisor):
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("Division by the zero polynomial")
        low, high = divisor.degrees()
        lead = divisor.coefficient(low)
        remainder = self
        quotient = {}
        while remainder:
            r_low, r_high = remainder.degrees()
            if r_high - r_low < high - low:
                raise NotDivisible("{} is not divisible by {}".format(self, divisor))
            coefficient = remainder.coefficient(r_low)
            if coefficient % lead:
                raise NotDivisible("{} is not divisible by {}".format(self, divisor))
            term = LaurentPoly.monomial(self.var, r_low - low, coefficient // lead)
            quotient[r_low - low] = coefficient // lead
            remainder = remainder - term * divisor
        return LaurentPoly(self.var, quotient)

    def substitute(self, target, scale=1, negate=False):
        return laurent_substitute(self, target, scale, negate)

    def mirror(self):
        return laurent_substitute(self, self.var, -1)

    def is_palindromic(self):
        return self == self.mirror()

    def __str__(self):
        if not self._coeffs:
            return "0"
        pieces = []
        for e, c in self.coefficients():
            if e == 0:
                body = str(abs(c))
            else:
                power = self.var if e == 1 else "{}^{}".format(self.var, e)
                body = power if abs(c) == 1 else "{}*{}".format(abs(c), power)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return "LaurentPoly('{}', '{}')".format(self.var, self)

    @staticmethod
    def parse(text, var):
        if text.strip() == "0":
            return LaurentPoly(var)
        coeffs = {}
        for sign, body in _split_terms(text):
            coefficient, exponents = _parse_term(body, (var,))
            e = exponents[var]
            coeffs[e] = coeffs.get(e, 0) + sign * coefficient
        return LaurentPoly(var, coeffs)


def laurent_substitute(p, target, scale=1, negate=False):
    """
    Substitutes var ↦ (±1) · target^scale into p.

    scale may be a Fraction, e.g. A ↦ s^(-1/2) is scale=Fraction(-1, 2). With negate=True
    the image is -target^scale, e.g. q ↦ -s.
    """
    scale = fractions.Fraction(scale)
    coeffs = {}
    for e, c in p.coefficients():
        image = e * scale
        if image.denominator != 1:
            raise FractionalExponent(
                "Substituting {} ↦ {}^{} into {} gives exponent {}".format(
                    p.var, target, scale, p, image
                )
            )
        if negate and e % 2:
            c = -c
        coeffs[int(image)] = coeffs.get(int(image), 0) + c
    return LaurentPoly(target, coeffs)
