#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 07b8b6ec-80e8-4bc9-9374-4bd8f36bcbf8
# date  : 2024-03-02
# -----------

"""
Models of the multiplicative group and the places of the two supported
fields, Q and F_p(t).

A non-zero element is factored into a `UnitVector`: a torsion part (the
sign over Q, the leading coefficient over F_p(t)) and integer exponents at
finitely many places. Residues at a place are computed in the residue
field and coordinatized by a discrete logarithm to a fixed generator.

Polynomials over F_p are tuples of integers, highest degree first, in the
dense representation of `sympy.polys.galoistools`.

"""

# ------------
# System Modules - Included with Python

import logging

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache, total_ordering
from itertools import product

# ------------
# 3rd Party - From pip

from sympy import discrete_log, factorint, isprime, pollard_rho, primitive_root
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_factor,
    gf_from_int_poly,
    gf_gcd,
    gf_gcdex,
    gf_irreducible_p,
    gf_monic,
    gf_mul,
    gf_pow_mod,
    gf_quo,
    gf_rem,
    gf_sub,
)

# ------------
# Custom Modules

from .config import Caps
from .errors import (
    CapExceededError,
    FactorizationError,
    InvalidInputError,
    ResidueFieldTooLargeError,
    SupportError,
    ValuationError,
)

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

DEFAULT_CAPS = Caps()


# -------------
# Polynomials over F_p


def _poly(f):
    return tuple(int(c) for c in f)


def poly_reduce(coefficients, p):
    """
    Reduce integer coefficients (highest degree first) mod p and strip
    leading zeros.
    """

    return _poly(gf_from_int_poly([int(c) for c in coefficients], p))


def format_poly(f, variable="t"):
    """
    Render a polynomial, e.g. (2, 2, 0) -> "2*t^2+2*t".
    """

    if not f:
        return "0"

    degree = len(f) - 1
    terms = []

    for k, c in enumerate(f):

        if c == 0:
            continue

        d = degree - k

        if d == 0:
            terms.append(str(c))
            continue

        monomial = variable if d == 1 else f"{variable}^{d}"
        terms.append(monomial if c == 1 else f"{c}*{monomial}")

    return "+".join(terms)


def _poly_inverse(f, modulus, p):

    s, _, h = gf_gcdex(list(f), list(modulus), p, ZZ)

    if _poly(h) != (1,):
        raise ValuationError(
            f"{format_poly(f)} is not invertible modulo {format_poly(modulus)}."
        )

    return _poly(s)


@dataclass(frozen=True)
class PolyFraction:
    """
    An element of F_p(t) as num/den in lowest terms with a monic
    denominator. Build it with `PolyFraction.make`.
    """

    p: int
    num: tuple
    den: tuple = (1,)

    @classmethod
    def make(cls, num, den, p):

        num = poly_reduce(num, p)
        den = poly_reduce(den, p)

        if not den:
            raise InvalidInputError("Zero denominator.")

        if not num:
            return cls(p, (), (1,))

        g = _poly(gf_gcd(list(num), list(den), p, ZZ))

        num = _poly(gf_quo(list(num), list(g), p, ZZ))
        den = _poly(gf_quo(list(den), list(g), p, ZZ))

        lc, den = gf_monic(list(den), p, ZZ)
        inverse = pow(int(lc), -1, p)

        return cls(p, tuple(c * inverse % p for c in num), _poly(den))

    @classmethod
    def constant(cls, c, p):
        return cls.make((c,), (1,), p)

    def is_zero(self):
        return not self.num

    def __mul__(self, other):
        return PolyFraction.make(
            gf_mul(list(self.num), list(other.num), self.p, ZZ),
            gf_mul(list(self.den), list(other.den), self.p, ZZ),
            self.p,
        )

    def __truediv__(self, other):

        if other.is_zero():
            raise InvalidInputError("Division by zero.")

        return PolyFraction.make(
            gf_mul(list(self.num), list(other.den), self.p, ZZ),
            gf_mul(list(self.den), list(other.num), self.p, ZZ),
            self.p,
        )

    def __sub__(self, other):
        return PolyFraction.make(
            gf_sub(
                gf_mul(list(self.num), list(other.den), self.p, ZZ),
                gf_mul(list(other.num), list(self.den), self.p, ZZ),
                self.p,
                ZZ,
            ),
            gf_mul(list(self.den), list(other.den), self.p, ZZ),
            self.p,
        )

    def __add__(self, other):
        return self - (-other)

    def __neg__(self):
        return PolyFraction(self.p, tuple((-c) % self.p for c in self.num), self.den)

    def __str__(self):

        num = format_poly(self.num)

        if self.den == (1,):
            text = num if len(self.num) <= 1 else f"({num})"

        else:
            text = f"({num})/({format_poly(self.den)})"

        return f"{text}@p={self.p}"


# -------------
# Fields and places


@dataclass(frozen=True)
class RationalField:
    """
    The rational numbers. The torsion of Q^× is {±1}.
    """

    @property
    def tag(self):
        return "q"

    @property
    def name(self):
        return "Q"

    @property
    def characteristic(self):
        return 0

    @property
    def torsion_order(self):
        return 2

    def torsion_generator(self):
        return -1

    def torsion_multiply(self, a, b):
        return a * b

    def torsion_power(self, a, k):
        return a if k % 2 else 1

    def torsion_log(self, t):
        return 0 if t == 1 else 1

    def minus_one(self):
        return UnitVector(self, -1)

    def one(self):
        return UnitVector(self, 1)

    def factor(self, x, caps=None):
        """
        Factor a non-zero rational. `x` may be an int, a Fraction or a
        string accepted by `Fraction`.
        """

        caps = caps or DEFAULT_CAPS

        x = Fraction(x)
        if x == 0:
            raise InvalidInputError("Cannot factor zero.")

        exponents = {}
        for q, e in _factor_integer(x.numerator, caps).items():
            exponents[Place.rational(q)] = e

        for q, e in _factor_integer(x.denominator, caps).items():
            exponents[Place.rational(q)] = -e

        return UnitVector(self, 1 if x > 0 else -1, exponents)

    def __str__(self):
        return self.name


QQ = RationalField()


@dataclass(frozen=True)
class FunctionField:
    """
    The rational function field F_p(t). The torsion of F_p(t)^× is F_p^×.
    """

    p: int

    @classmethod
    def create(cls, p, caps=None):

        caps = caps or DEFAULT_CAPS

        if not isprime(p):
            raise InvalidInputError(f"{p} is not a prime.")

        if p > caps.function_field_prime:
            raise CapExceededError(
                f"p = {p} exceeds the function field cap {caps.function_field_prime}."
            )

        return cls(p)

    @property
    def tag(self):
        return f"fp{self.p}"

    @property
    def name(self):
        return f"F_{self.p}(t)"

    @property
    def characteristic(self):
        return self.p

    @property
    def torsion_order(self):
        return self.p - 1

    @cached_property
    def _generator(self):
        return int(primitive_root(self.p))

    def torsion_generator(self):
        return self._generator

    def torsion_multiply(self, a, b):
        return a * b % self.p

    def torsion_power(self, a, k):
        return pow(a, k, self.p)

    def torsion_log(self, t):

        if self.p == 2:
            return 0

        return int(discrete_log(self.p, t % self.p, self.torsion_generator()))

    def minus_one(self):
        return UnitVector(self, self.p - 1)

    def one(self):
        return UnitVector(self, 1)

    def factor(self, x, caps=None):
        """
        Factor a non-zero PolyFraction into monic irreducibles.
        """

        caps = caps or DEFAULT_CAPS

        if x.p != self.p:
            raise InvalidInputError(f"{x} is not an element of {self.name}.")

        if x.is_zero():
            raise InvalidInputError("Cannot factor zero.")

        exponents = {}
        torsion = 1

        for poly, sign in ((x.num, 1), (x.den, -1)):

            lc, factors = gf_factor(list(poly), self.p, ZZ)

            lc = int(lc) % self.p
            torsion = torsion * (lc if sign > 0 else pow(lc, -1, self.p)) % self.p

            for g, e in factors:

                g = _poly(g)
                if len(g) - 1 > caps.irreducible_degree:
                    raise CapExceededError(
                        f"Irreducible factor {format_poly(g)} has degree "
                        f"{len(g) - 1} > {caps.irreducible_degree}."
                    )

                place = Place(PlaceKind.IRREDUCIBLE, self.p, g)
                exponents[place] = exponents.get(place, 0) + sign * int(e)

        return UnitVector(self, torsion, exponents)

    def __str__(self):
        return self.name


class PlaceKind(Enum):
    REAL = "real"
    DYADIC = "dyadic"
    ODD_PRIME = "odd_prime"
    IRREDUCIBLE = "irreducible"


@total_ordering
@dataclass(frozen=True)
class Place:
    """
    A place of Q (real, dyadic, an odd prime) or a finite place of F_p(t)
    (a monic irreducible polynomial). Use the constructors, they verify
    primality or irreducibility.

    # Attributes

    kind:PlaceKind

    prime:int
        - the prime for a place of Q, the characteristic for F_p(t)

    poly:tuple
        - the monic irreducible for F_p(t)

    """

    kind: PlaceKind
    prime: int = 0
    poly: tuple = ()

    @classmethod
    def real(cls):
        return cls(PlaceKind.REAL)

    @classmethod
    def dyadic(cls):
        return cls(PlaceKind.DYADIC, 2)

    @classmethod
    def odd_prime(cls, p):

        if p <= 2 or not isprime(p):
            raise InvalidInputError(f"{p} is not an odd prime.")

        return cls(PlaceKind.ODD_PRIME, int(p))

    @classmethod
    def rational(cls, p):
        """
        The finite place of Q at the prime p.
        """

        return cls.dyadic() if p == 2 else cls.odd_prime(p)

    @classmethod
    def irreducible(cls, poly, p):

        poly = poly_reduce(poly, p)

        if len(poly) < 2 or poly[0] != 1:
            raise InvalidInputError(
                f"{format_poly(poly)} is not a monic non-constant polynomial."
            )

        if not gf_irreducible_p(list(poly), p, ZZ):
            raise InvalidInputError(f"{format_poly(poly)} is not irreducible mod {p}.")

        return cls(PlaceKind.IRREDUCIBLE, int(p), poly)

    @property
    def is_finite(self):
        return self.kind is not PlaceKind.REAL

    @property
    def is_tame(self):
        """
        True for the places carrying a tame symbol (odd primes and monic
        irreducibles).
        """

        return self.kind in (PlaceKind.ODD_PRIME, PlaceKind.IRREDUCIBLE)

    @property
    def degree(self):
        return len(self.poly) - 1 if self.poly else 1

    @property
    def residue_order(self):
        return self.prime**self.degree

    @property
    def sort_key(self):

        if self.kind is PlaceKind.REAL:
            return (0, 0, ())

        return (1, self.degree, self.poly or (self.prime,))

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def uniformizer(self, field):
        """
        The S-unit basis element attached to this place: the prime p or
        the monic irreducible itself.
        """

        return UnitVector(field, 1, {self: 1})

    def __str__(self):

        if self.kind is PlaceKind.REAL:
            return "real"

        if self.kind is PlaceKind.IRREDUCIBLE:
            return format_poly(self.poly)

        return str(self.prime)


def _normalize_exponents(exponents):

    items = exponents.items() if isinstance(exponents, dict) else exponents
    merged = {}

    for place, e in items:
        merged[place] = merged.get(place, 0) + int(e)

    return tuple(sorted(((p, e) for p, e in merged.items() if e), key=lambda x: x[0].sort_key))


@dataclass(frozen=True)
class UnitVector:
    """
    A non-zero field element in factored form.

    # Attributes

    field:RationalField|FunctionField

    torsion:int
        - ±1 over Q, the leading coefficient in F_p^× over F_p(t)

    exponents:tuple((Place, int))
        - sorted by place, no zero exponents

    """

    field: object
    torsion: int = 1
    exponents: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "exponents", _normalize_exponents(self.exponents))

    @cached_property
    def _valuations(self):
        return dict(self.exponents)

    def valuation(self, place):
        return self._valuations.get(place, 0)

    @property
    def places(self):
        return tuple(p for p, _ in self.exponents)

    def is_one(self):
        return self.torsion == 1 and not self.exponents

    def __mul__(self, other):

        if self.field != other.field:
            raise InvalidInputError("Cannot multiply elements of different fields.")

        exponents = dict(self.exponents)
        for place, e in other.exponents:
            exponents[place] = exponents.get(place, 0) + e

        return UnitVector(
            self.field, self.field.torsion_multiply(self.torsion, other.torsion), exponents
        )

    def __pow__(self, k):

        k = int(k)

        if k < 0:
            return self.inverse() ** (-k)

        return UnitVector(
            self.field,
            self.field.torsion_power(self.torsion, k),
            {p: e * k for p, e in self.exponents},
        )

    def inverse(self):

        torsion = self.torsion
        if isinstance(self.field, FunctionField):
            torsion = pow(torsion, -1, self.field.p)

        return UnitVector(self.field, torsion, {p: -e for p, e in self.exponents})

    def __truediv__(self, other):
        return self * other.inverse()

    def __neg__(self):
        return self * self.field.minus_one()

    def value(self):
        """
        Reconstruct the field element: a Fraction or a PolyFraction.
        """

        if isinstance(self.field, RationalField):
            x = Fraction(self.torsion)

            for place, e in self.exponents:
                x *= Fraction(place.prime) ** e

            return x

        p = self.field.p
        x = PolyFraction.constant(self.torsion, p)

        for place, e in self.exponents:
            f = PolyFraction.make(place.poly, (1,), p)
            for _ in range(abs(e)):
                x = x * f if e > 0 else x / f

        return x

    def __str__(self):
        return str(self.value())

    def to_json(self):
        return {
            "field": self.field.tag,
            "torsion": self.torsion,
            "exponents": {str(p): e for p, e in self.exponents},
        }


def factor(x, caps=None):
    """
    Factor a non-zero field element into a UnitVector. Rationals are given
    as int/Fraction, elements of F_p(t) as PolyFraction.
    """

    if isinstance(x, PolyFraction):
        return FunctionField(x.p).factor(x, caps)

    return QQ.factor(x, caps)


@lru_cache(maxsize=4096)
def _factor_integer(n, caps):
    """
    Factor |n| by trial division up to `caps.trial_division` followed by
    Pollard rho on composite cofactors. Inputs that resist are refused.
    """

    n = abs(n)

    if n.bit_length() > caps.max_bits:
        raise FactorizationError(
            f"{n} has {n.bit_length()} bits, more than the {caps.max_bits} bit cap."
        )

    result = {}
    pending = [(int(q), int(e)) for q, e in factorint(n, limit=caps.trial_division).items()]

    while pending:

        q, e = pending.pop()

        if q == 1:
            continue

        if isprime(q):
            result[q] = result.get(q, 0) + e
            continue

        d = None
        for k in range(caps.rho_retries):
            d = pollard_rho(q, a=k + 1, seed=k + 1, retries=1)
            if d:
                break

        if not d:
            raise FactorizationError(
                f"Could not split the composite factor {q} after "
                f"{caps.rho_retries} Pollard rho attempts."
            )

        log.debug("pollard rho split %d = %d * %d", q, d, q // d)
        pending += [(int(d), e), (int(q // d), e)]

    return result


# -------------
# Residue fields


class ResidueField:
    """
    The residue field at a finite place with a fixed multiplicative
    generator: the smallest element that generates (integers 2, 3, ...
    over Q, graded-lex order over F_p(t)).

    Elements are ints over Q and tuples (polynomials reduced modulo the
    place) over F_p(t).
    """

    def __init__(self, place, cap=None):

        cap = cap or DEFAULT_CAPS.residue_field

        if not place.is_finite:
            raise InvalidInputError("The real place has no residue field.")

        self.place = place
        self.characteristic = place.prime
        self.degree = place.degree
        self.modulus = place.poly or None
        self.order = place.residue_order

        if self.order > cap:
            raise ResidueFieldTooLargeError(
                f"Residue field at {place} has order {self.order} > cap {cap}."
            )

        self.generator = self._find_generator()

    @property
    def is_prime_field(self):
        return self.modulus is None

    def _is_generator(self, x):

        q1 = self.order - 1
        p = self.characteristic

        for ell in factorint(q1):
            if _poly(gf_pow_mod(list(x), q1 // ell, list(self.modulus), p, ZZ)) == (1,):
                return False

        return True

    def _find_generator(self):

        if self.is_prime_field:
            return int(primitive_root(self.characteristic))

        p = self.characteristic
        for k in range(self.degree):
            for x in product(range(1, p), *[range(p)] * k):
                if self._is_generator(x):
                    return tuple(x)

        raise InvalidInputError(f"No generator found for the residue field at {self.place}.")

    def multiply(self, x, y):

        if self.is_prime_field:
            return x * y % self.characteristic

        p = self.characteristic
        return _poly(gf_rem(gf_mul(list(x), list(y), p, ZZ), list(self.modulus), p, ZZ))

    def power(self, x, k):

        p = self.characteristic

        if self.is_prime_field:
            return pow(x, k, p)

        if k < 0:
            x = _poly_inverse(x, self.modulus, p)
            k = -k

        return _poly(gf_pow_mod(list(x), k, list(self.modulus), p, ZZ))

    def one(self):
        return 1 if self.is_prime_field else (1,)

    @cached_property
    def _log_table(self):

        log.debug("building discrete log table for %s (order %d)", self.place, self.order)

        table = {}
        x = self.one()

        for k in range(self.order - 1):
            table[x] = k
            x = self.multiply(x, self.generator)

        return table

    def log(self, x):
        """
        The discrete logarithm of the non-zero element x to the generator,
        in Z/(q-1).
        """

        if self.is_prime_field:

            x %= self.characteristic
            if x == 0:
                raise ValuationError("Zero has no discrete logarithm.")

            return int(discrete_log(self.characteristic, x, self.generator))

        if x not in self._log_table:
            raise ValuationError(f"{format_poly(x)} has no discrete logarithm.")

        return self._log_table[x]

    def exp(self, k):
        return self.power(self.generator, k % (self.order - 1))

    def norm(self, x):
        """
        The norm of x down to F_p^×, as an integer.
        """

        if self.is_prime_field:
            return x % self.characteristic

        y = self.power(x, (self.order - 1) // (self.characteristic - 1))

        if len(y) != 1:
            raise ValuationError("Norm did not land in the prime field.")

        return y[0]


@lru_cache(maxsize=None)
def residue_field(place, cap=None):
    return ResidueField(place, cap)


def residue(place, u):
    """
    The image of the unit u (valuation 0 at place) in the residue field.
    """

    if not place.is_finite:
        raise InvalidInputError("The real place has no residue field.")

    if u.valuation(place):
        raise ValuationError(f"{u} has valuation {u.valuation(place)} at {place}.")

    if place.kind in (PlaceKind.DYADIC, PlaceKind.ODD_PRIME):

        p = place.prime
        r = u.torsion % p

        for q, e in u.exponents:
            r = r * pow(q.prime, e, p) % p

        return r

    p = place.prime
    modulus = list(place.poly)

    r = (u.torsion % p,)
    for q, e in u.exponents:

        f = _poly(gf_rem(list(q.poly), modulus, p, ZZ))

        if e < 0:
            f = _poly_inverse(f, place.poly, p)

        f = _poly(gf_pow_mod(list(f), abs(e), modulus, p, ZZ))
        r = _poly(gf_rem(gf_mul(list(r), list(f), p, ZZ), modulus, p, ZZ))

    return r


def residue_log(place, u, cap=None):
    """
    The discrete logarithm of the residue of u at place, in Z/(q-1).
    """

    rf = residue_field(place, cap)
    return rf.log(residue(place, u))


def tame_unit(a, b, place):
    """
    The unit (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)}, which has valuation 0 at
    place.
    """

    va = a.valuation(place)
    vb = b.valuation(place)

    w = (a**vb) * (b ** (-va))

    if va * vb % 2:
        w = -w

    return w


def tame_residue(a, b, place):
    """
    The tame symbol of (a, b) at a tame place as a residue field element.
    """

    if not place.is_tame:
        raise InvalidInputError(f"No tame symbol at the {place.kind.value} place.")

    return residue(place, tame_unit(a, b, place))


def _as_rational_unit(x, caps=None):

    if isinstance(x, UnitVector):

        if not isinstance(x.field, RationalField):
            raise InvalidInputError("Expected an element of Q.")

        return x

    return QQ.factor(x, caps)


def _dyadic_parts(u):
    """
    Write u = 2^alpha * w with w a 2-adic unit; return (alpha, w mod 8).
    """

    w = u.torsion % 8
    for q, e in u.exponents:
        if q.kind is not PlaceKind.DYADIC:
            w = w * pow(q.prime, e, 8) % 8

    return u.valuation(Place.dyadic()), w


def hilbert_dyadic(a, b, caps=None):
    """
    The 2-adic Hilbert symbol (a, b)_2 in {+1, -1}.

    With a = 2^alpha u, b = 2^beta v, u and v 2-adic units,
    (a, b)_2 = (-1)^(e(u) e(v) + alpha w(v) + beta w(u)) where
    e(u) = (u - 1)/2 and w(u) = (u^2 - 1)/8 mod 2.
    """

    alpha, u = _dyadic_parts(_as_rational_unit(a, caps))
    beta, v = _dyadic_parts(_as_rational_unit(b, caps))

    def eps(x):
        return ((x - 1) // 2) % 2

    def omega(x):
        return ((x * x - 1) // 8) % 2

    exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if exponent % 2 else 1


def _sign(x):

    if isinstance(x, UnitVector):
        return x.torsion

    x = Fraction(x)
    if x == 0:
        raise InvalidInputError("Zero has no sign.")

    return 1 if x > 0 else -1


def real_symbol(a, b):
    """
    The Hilbert symbol at the real place: -1 iff a < 0 and b < 0.
    """

    return -1 if _sign(a) < 0 and _sign(b) < 0 else 1


def legendre_from_tame(a, b, p, caps=None):
    """
    The Hilbert symbol (a, b)_p at an odd prime, as the Legendre symbol of
    the tame residue.
    """

    a = _as_rational_unit(a, caps)
    b = _as_rational_unit(b, caps)

    r = tame_residue(a, b, Place.odd_prime(p))
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def product_formula(a, b, caps=None):
    """
    The product of the Hilbert symbols of (a, b) over all places of Q.
    It is +1 for every pair of non-zero rationals.
    """

    a = _as_rational_unit(a, caps)
    b = _as_rational_unit(b, caps)

    result = real_symbol(a, b) * hilbert_dyadic(a, b)

    for place in sorted(set(a.places) | set(b.places)):
        if place.kind is PlaceKind.ODD_PRIME:
            result *= legendre_from_tame(a, b, place.prime)

    return result


def infinite_valuation(u):
    """
    The valuation at infinity of an element of F_p(t): minus its degree.
    """

    return -sum(e * place.degree for place, e in u.exponents)


def tame_symbol_at_infinity(a, b):
    """
    The tame symbol of (a, b) at the infinite place of F_p(t), in F_p^×.
    Only used by consistency checks; infinity is not a coordinate.
    """

    if not isinstance(a.field, FunctionField):
        raise InvalidInputError("The place at infinity is only modelled for F_p(t).")

    va = infinite_valuation(a)
    vb = infinite_valuation(b)

    w = (a**vb) * (b ** (-va))

    if va * vb % 2:
        w = -w

    # v_inf(w) = 0, so its residue is the ratio of leading coefficients
    return w.torsion


def weil_reciprocity(a, b, cap=None):
    """
    The product over all places of F_p(t), infinity included, of the
    norms of the tame symbols of (a, b). It is 1 for all a, b.
    """

    p = a.field.p
    result = tame_symbol_at_infinity(a, b)

    for place in sorted(set(a.places) | set(b.places)):
        rf = residue_field(place, cap)
        result = result * rf.norm(tame_residue(a, b, place)) % p

    return result


# -------------
# Supports


@dataclass(frozen=True)
class Support:
    """
    A finite set of places. Its S-unit basis is the torsion generator
    (-1 over Q, a generator of F_p^× over F_p(t)) followed by the
    uniformizers of the places in order.

    Build with `Support.of` to apply the caps.
    """

    field: object
    places: tuple = ()

    def __post_init__(self):

        places = tuple(sorted(set(self.places)))

        if len(places) != len(self.places):
            raise InvalidInputError("Duplicate places in support.")

        for place in places:

            if isinstance(self.field, RationalField):
                ok = place.kind in (PlaceKind.DYADIC, PlaceKind.ODD_PRIME)

            else:
                ok = place.kind is PlaceKind.IRREDUCIBLE and place.prime == self.field.p

            if not ok:
                raise InvalidInputError(f"Place {place} does not belong to {self.field}.")

        object.__setattr__(self, "places", places)

    @classmethod
    def of(cls, field, places, caps=None):

        caps = caps or DEFAULT_CAPS
        support = cls(field, tuple(places))

        if len(support.places) > caps.support:
            raise CapExceededError(
                f"Support has {len(support.places)} places > cap {caps.support}."
            )

        for place in support.places:
            if place.degree > caps.irreducible_degree:
                raise CapExceededError(
                    f"Place {place} has degree {place.degree} > cap {caps.irreducible_degree}."
                )

        return support

    @cached_property
    def basis(self):
        generator = UnitVector(self.field, self.field.torsion_generator())
        return (generator,) + tuple(p.uniformizer(self.field) for p in self.places)

    @property
    def rank(self):
        return len(self.basis)

    @property
    def orders(self):
        return (self.field.torsion_order,) + (0,) * len(self.places)

    def labels(self):
        return tuple(str(u) for u in self.basis)

    def contains(self, u):
        return u.field == self.field and set(u.places) <= set(self.places)

    def coordinates(self, u):
        """
        The coordinates of the S-unit u in the basis.
        """

        if u.field != self.field:
            raise SupportError(f"{u} is not an element of {self.field}.")

        outside = set(u.places) - set(self.places)
        if outside:
            raise SupportError(
                f"{u} is not an S-unit: places {', '.join(sorted(map(str, outside)))} "
                f"are outside the support {self}."
            )

        return [self.field.torsion_log(u.torsion)] + [u.valuation(p) for p in self.places]

    def unit(self, coordinates):
        """
        The S-unit with the given basis coordinates.
        """

        u = self.field.one()
        for b, k in zip(self.basis, coordinates):
            if k:
                u = u * b**k

        return u

    def random_unit(self, rng, bound=2):
        return self.unit([rng.randint(-bound, bound) for _ in range(self.rank)])

    def issubset(self, other):
        return self.field == other.field and set(self.places) <= set(other.places)

    @property
    def key(self):
        return f"{self.field.tag}:{self}"

    def __str__(self):

        if isinstance(self.field, RationalField):
            return ",".join(["-1"] + [str(p) for p in self.places])

        return ",".join(str(p) for p in self.places) + f"@p={self.field.p}"

    def to_json(self):
        return {
            "field": self.field.tag,
            "places": [str(p) for p in self.places],
            "basis": list(self.labels()),
        }
