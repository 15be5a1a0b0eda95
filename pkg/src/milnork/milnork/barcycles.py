#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 3931472e-be1c-4130-8e6f-0bf4320178e7
# date  : 2024-03-02
# -----------

"""
Chains of the bar resolution over matrix groups and split tori.

A `BarChain` of degree k is a combination of bar tuples [g_1|...|g_k]
with rational coefficients. The group elements are `QMatrix` (exact
entries in Q or F_p(t)) or `TorusElement` (a tuple of units, the
diagonal of a matrix).

The constructions here are the Milnor cycles c(A_1(a_1), ..., A_n(a_n)),
their rescaled splittings, the chains representing the kappa map and
the u_31 component of the chi' map. `exterior_class` projects a chain on
a torus to the exterior power of the torus modulo torsion; it kills
boundaries, so it gives a computable check on cycle rewritings.

"""

# ------------
# System Modules - Included with Python

import logging

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from math import factorial, lcm

# ------------
# 3rd Party - From pip

from sympy.combinatorics import Permutation

# ------------
# Custom Modules

from .config import Caps
from .errors import InvalidInputError
from .fields import PolyFraction, factor

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

DEFAULT_CAPS = Caps()


def signature(order):
    """
    The sign of the permutation `order` of range(len(order)).
    """

    if len(order) < 2:
        return 1

    return Permutation(list(order)).signature()


# -------------
# Scalars


def _is_zero(x):

    if isinstance(x, PolyFraction):
        return x.is_zero()

    return x == 0


def _scalar(x, p=None):
    """
    Normalize a scalar: Fraction over Q, PolyFraction over F_p(t).
    """

    if isinstance(x, PolyFraction):
        return x

    x = Fraction(x)

    if p is None:
        return x

    return PolyFraction.constant(x.numerator, p) / PolyFraction.constant(x.denominator, p)


def _characteristic(values):

    for x in values:
        if isinstance(x, PolyFraction):
            return x.p

    return None


def _nonzero(a, name="entry"):

    if _is_zero(_scalar(a)):
        raise InvalidInputError(f"The {name} must be non-zero.")

    return _scalar(a)


# -------------
# Group elements


@dataclass(frozen=True)
class QMatrix:
    """
    An invertible square matrix with exact entries. Entries are Fractions
    or, over F_p(t), PolyFractions.
    """

    rows: tuple

    def __post_init__(self):

        rows = [list(r) for r in self.rows]
        p = _characteristic(x for r in rows for x in r)

        if any(len(r) != len(rows) for r in rows) or not rows:
            raise InvalidInputError("A matrix must be square and non-empty.")

        object.__setattr__(
            self, "rows", tuple(tuple(_scalar(x, p) for x in r) for r in rows)
        )

        if _is_zero(self.det):
            raise InvalidInputError("The matrix is not invertible.")

    @classmethod
    def diag(cls, entries):

        entries = list(entries)
        p = _characteristic(entries)

        zero = _scalar(0, p)

        return cls(
            tuple(
                tuple(entries[i] if i == j else zero for j in range(len(entries)))
                for i in range(len(entries))
            )
        )

    @property
    def size(self):
        return len(self.rows)

    @property
    def p(self):
        return _characteristic(self.rows[0])

    @cached_property
    def is_diagonal(self):
        return all(
            _is_zero(x)
            for i, row in enumerate(self.rows)
            for j, x in enumerate(row)
            if i != j
        )

    def diagonal(self):
        return [self.rows[i][i] for i in range(self.size)]

    @cached_property
    def det(self):
        """
        The determinant, by Gaussian elimination over the entry field.
        """

        if self.is_diagonal:

            result = _scalar(1, self.p)
            for x in self.diagonal():
                result = result * x

            return result

        a = [list(r) for r in self.rows]
        n = self.size
        result = _scalar(1, self.p)

        for c in range(n):

            pivot = next((r for r in range(c, n) if not _is_zero(a[r][c])), None)
            if pivot is None:
                return _scalar(0, self.p)

            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                result = -result

            result = result * a[c][c]

            for r in range(c + 1, n):
                if not _is_zero(a[r][c]):
                    f = a[r][c] / a[c][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]

        return result

    def __mul__(self, other):

        if not isinstance(other, QMatrix) or other.size != self.size:
            raise InvalidInputError("Matrices of different sizes.")

        n = self.size
        zero = _scalar(0, self.p)

        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = zero
                for k in range(n):
                    if not _is_zero(self.rows[i][k]) and not _is_zero(other.rows[k][j]):
                        s = s + self.rows[i][k] * other.rows[k][j]

                row.append(s)

            rows.append(tuple(row))

        return QMatrix(tuple(rows))

    def embed(self, k=1):
        """
        diag(self, I_k)
        """

        n = self.size
        zero = _scalar(0, self.p)
        one = _scalar(1, self.p)

        rows = [tuple(r) + (zero,) * k for r in self.rows]
        rows += [
            tuple(zero for _ in range(n)) + tuple(one if i == j else zero for j in range(k))
            for i in range(k)
        ]

        return QMatrix(tuple(rows))

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in self.rows) + "]"

    def to_json(self):
        return [[str(x) for x in r] for r in self.rows]


@dataclass(frozen=True)
class TorusElement:
    """
    An element of (F^×)^k, stored as k UnitVectors.
    """

    coordinates: tuple

    def __post_init__(self):

        coordinates = tuple(self.coordinates)

        if not coordinates:
            raise InvalidInputError("A torus element needs at least one coordinate.")

        if len({u.field for u in coordinates}) != 1:
            raise InvalidInputError("Torus coordinates must belong to one field.")

        object.__setattr__(self, "coordinates", coordinates)

    @property
    def rank(self):
        return len(self.coordinates)

    @property
    def field(self):
        return self.coordinates[0].field

    def __mul__(self, other):

        if not isinstance(other, TorusElement) or other.rank != self.rank:
            raise InvalidInputError("Torus elements of different ranks.")

        return TorusElement(tuple(a * b for a, b in zip(self.coordinates, other.coordinates)))

    def __str__(self):
        return "(" + ", ".join(str(u) for u in self.coordinates) + ")"

    def to_json(self):
        return [str(u) for u in self.coordinates]


def _ambient(g):

    if isinstance(g, QMatrix):
        return ("GL", g.size)

    if isinstance(g, TorusElement):
        return ("T", g.rank)

    raise InvalidInputError(f"{g!r} is not a matrix or a torus element.")


def diag_gen(i, n, a):
    """
    The identity matrix of size n with a in slot i (1-based).
    """

    if not 1 <= i <= n:
        raise InvalidInputError(f"Slot {i} is outside 1..{n}.")

    a = _nonzero(a)
    p = _characteristic([a])

    return QMatrix.diag([a if k == i else _scalar(1, p) for k in range(1, n + 1)])


def a_gen(i, n, a):
    """
    diag(a, I_{n-1}) for i = 1 and diag(a, ..., a, a^{-(i-1)}, I_{n-i})
    with i - 1 copies of a otherwise.
    """

    if not 1 <= i <= n:
        raise InvalidInputError(f"Slot {i} is outside 1..{n}.")

    a = _nonzero(a)
    one = _scalar(1, _characteristic([a]))

    if i == 1:
        return QMatrix.diag([a] + [one] * (n - 1))

    inverse = one
    for _ in range(i - 1):
        inverse = inverse / a

    return QMatrix.diag([a] * (i - 1) + [inverse] + [one] * (n - i))


def torus_diag_gen(i, n, u):
    """
    `diag_gen` for a UnitVector, as a TorusElement of rank n.
    """

    if not 1 <= i <= n:
        raise InvalidInputError(f"Slot {i} is outside 1..{n}.")

    one = u.field.one()
    return TorusElement(tuple(u if k == i else one for k in range(1, n + 1)))


def torus_a_gen(i, n, u):
    """
    `a_gen` for a UnitVector, as a TorusElement of rank n.
    """

    if not 1 <= i <= n:
        raise InvalidInputError(f"Slot {i} is outside 1..{n}.")

    one = u.field.one()

    if i == 1:
        return TorusElement((u,) + (one,) * (n - 1))

    return TorusElement((u,) * (i - 1) + (u ** (-(i - 1)),) + (one,) * (n - i))


# -------------
# Chains


class BarChain:
    """

    A formal combination of bar tuples of one degree with Fraction
    coefficients. Zero terms are not stored. Treat instances as
    immutable.

    # Attributes

    degree:int

    terms:dict(tuple -> Fraction)

    ambient:tuple
        - ("GL", n) or ("T", k), None for the zero chain

    """

    def __init__(self, degree, terms=None, ambient=None):

        self.degree = degree
        self.terms = {}
        self.ambient = ambient

        for key, c in (terms or {}).items():

            key = tuple(key)

            if len(key) != degree:
                raise InvalidInputError(
                    f"Bar tuple of length {len(key)} in a chain of degree {degree}."
                )

            for g in key:
                kind = _ambient(g)

                if self.ambient is None:
                    self.ambient = kind

                elif kind != self.ambient:
                    raise InvalidInputError(
                        f"Bar tuple entry in {kind} does not belong to {self.ambient}."
                    )

            c = Fraction(c) + self.terms.get(key, 0)

            if c:
                self.terms[key] = c

            else:
                self.terms.pop(key, None)

    @classmethod
    def single(cls, *elements, coefficient=1):
        return cls(len(elements), {tuple(elements): coefficient})

    @classmethod
    def zero(cls, degree, ambient=None):
        return cls(degree, {}, ambient)

    def _combine(self, other, sign):

        if other.degree != self.degree:
            raise InvalidInputError("Cannot add chains of different degrees.")

        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + sign * c

        return BarChain(self.degree, terms, self.ambient or other.ambient)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return BarChain(self.degree, {k: c * v for k, v in self.terms.items()}, self.ambient)

    __rmul__ = scale

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):

        if not isinstance(other, BarChain):
            return NotImplemented

        return self.degree == other.degree and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def elements(self):
        for key in self.terms:
            yield from key

    def denominator(self):
        """
        The least common multiple of the coefficient denominators.
        """

        return lcm(1, *(c.denominator for c in self.terms.values()))

    def is_integral(self):
        return self.denominator() == 1

    def to_json(self):

        data = [
            {
                "coefficient": str(c),
                "tuple": [g.to_json() for g in key],
            }
            for key, c in self.terms.items()
        ]

        return sorted(data, key=lambda t: (str(t["tuple"]), t["coefficient"]))

    def __repr__(self):
        return f"BarChain(degree={self.degree}, terms={len(self.terms)}, ambient={self.ambient})"


def bar_boundary(chain):
    """

    The bar differential

        ∂[g_1|...|g_k] = [g_2|...|g_k]
                         + Σ_{i=1}^{k-1} (-1)^i [g_1|...|g_i g_{i+1}|...|g_k]
                         + (-1)^k [g_1|...|g_{k-1}]

    extended linearly.

    """

    k = chain.degree

    if k < 1:
        raise InvalidInputError("A chain of degree 0 has no boundary.")

    terms = {}

    def add(key, c):
        terms[key] = terms.get(key, 0) + c

    for g, c in chain.terms.items():

        add(g[1:], c)

        for i in range(1, k):
            add(g[: i - 1] + (g[i - 1] * g[i],) + g[i + 1 :], (-1) ** i * c)

        add(g[:-1], (-1) ** k * c)

    return BarChain(k - 1, terms, chain.ambient)


def commute(g, h):
    return g * h == h * g


def c_cycle(*elements):
    """
    Σ_σ sign(σ) [g_σ(1)|...|g_σ(n)] for pairwise commuting g_i.
    """

    n = len(elements)

    if n < 1:
        raise InvalidInputError("A c-cycle needs at least one element.")

    for i in range(n):
        for j in range(i + 1, n):
            if not commute(elements[i], elements[j]):
                raise InvalidInputError(f"Elements {i + 1} and {j + 1} do not commute.")

    terms = {}
    for order in permutations(range(n)):

        key = tuple(elements[k] for k in order)
        terms[key] = terms.get(key, 0) + signature(order)

    return BarChain(n, terms)


def milnor_cycle(*entries):
    """
    c(A_{1,n}(a_1), ..., A_{n,n}(a_n)) in GL_n.
    """

    n = len(entries)
    return c_cycle(*(a_gen(i + 1, n, a) for i, a in enumerate(entries)))


def splitting_chain(*entries, caps=None):
    """
    (-1)^{n-1}/(n-1)! times the Milnor cycle of the entries.
    """

    caps = caps or DEFAULT_CAPS
    n = len(entries)

    if n > caps.n:
        raise InvalidInputError(f"{n} entries exceed the cap {caps.n}.")

    return milnor_cycle(*entries).scale(Fraction((-1) ** (n - 1), factorial(n - 1)))


def embed_chain(chain, k=1):
    """
    The chain with every matrix M replaced by diag(M, I_k).
    """

    terms = {tuple(g.embed(k) for g in key): c for key, c in chain.terms.items()}
    ambient = ("GL", chain.ambient[1] + k) if chain.ambient else None

    return BarChain(chain.degree, terms, ambient)


def block_form_check(chain, size):
    """
    True when every entry is a diagonal matrix of size `size` whose
    embedding has the block form diag(M, 1).
    """

    for g in chain.elements():

        if not isinstance(g, QMatrix) or g.size != size or not g.is_diagonal:
            return False

        e = g.embed(1)
        if not e.is_diagonal or e.diagonal() != g.diagonal() + [_scalar(1, g.p)]:
            return False

    return True


def _scalar_diag(a, m, tail, tail_value=None):
    """
    diag(a·I_m, tail copies of tail_value), tail_value defaults to 1.
    """

    p = _characteristic([a])
    one = _scalar(1, p)

    return QMatrix.diag([a] * m + [tail_value if tail_value is not None else one] * tail)


def _c_block(cs, size):
    """
    C_{1,size}, ..., C_{len(cs),size} where C_i = A_{i,size}(c_i).
    """

    return [a_gen(i + 1, size, c) for i, c in enumerate(cs)]


def _symbol_terms(terms, length):
    """
    Normalize [(coefficient, a, b, [c_1, ...]), ...] or [(a, b, [c, ...])].
    """

    result = []
    for t in terms:

        if len(t) == 3:
            t = (1,) + tuple(t)

        coefficient, a, b, cs = t
        cs = list(cs)

        if len(cs) != length:
            raise InvalidInputError(f"Expected {length} symbol entries, got {len(cs)}.")

        result.append(
            (
                int(coefficient),
                _nonzero(a),
                _nonzero(b),
                [_nonzero(c, "symbol entry") for c in cs],
            )
        )

    return result


def kappa_chain(n, terms):
    """

    The chain in GL_{n-1} representing the image of
    x = Σ a ⊗ b ⊗ {c_1, ..., c_{n-2}}:

        -(-1)^{n-2}/(n-2)! Σ ( c(diag(I_{n-2}, b), diag(a·I_{n-2}, 1), C_1, ..., C_{n-2})
                              + c(diag(I_{n-2}, a), diag(b·I_{n-2}, 1), C_1, ..., C_{n-2}) )

    with C_i = A_{i,n-1}(c_i).

    # Parameters

    n:int
        - at least 3

    terms:list
        - (a, b, [c_1, ..., c_{n-2}]) or with a leading integer
          coefficient

    # Return

    A BarChain of degree n.

    """

    if n < 3:
        raise InvalidInputError("The kappa chain needs n >= 3.")

    size = n - 1
    scale = -Fraction((-1) ** (n - 2), factorial(n - 2))

    chain = BarChain.zero(n, ("GL", size))

    for coefficient, a, b, cs in _symbol_terms(terms, n - 2):

        one = _scalar(1, _characteristic([a]))
        block = _c_block(cs, size)

        first = c_cycle(
            QMatrix.diag([one] * (n - 2) + [b]), _scalar_diag(a, n - 2, 1), *block
        )
        second = c_cycle(
            QMatrix.diag([one] * (n - 2) + [a]), _scalar_diag(b, n - 2, 1), *block
        )

        chain = chain + (first + second).scale(scale * coefficient)

    return chain


# -------------
# The chi' map


@dataclass
class ChiPrimeData:
    """

    # Attributes

    n:int

    terms:list
        - x as [(coefficient, a, b, [c_1, ...])] over S-unit basis
          elements

    u31:list((UnitVector, BarChain))
        - the U_31 component: a unit tensored with a chain in GL_{n-2}

    certificate:dict

    """

    n: int
    terms: list
    u31: list
    certificate: dict

    def to_json(self):
        return {
            "n": self.n,
            "x": [
                {
                    "coefficient": c,
                    "a": str(a),
                    "b": str(b),
                    "symbol": [str(e) for e in cs],
                }
                for c, a, b, cs in self.terms
            ],
            "u31": [{"unit": str(u), "chain": chain.to_json()} for u, chain in self.u31],
            "certificate": self.certificate,
        }


def _expand_position2(C, x):
    """
    x in P_2 as [(coefficient, a, b, [c_1, ...])] over basis units.
    """

    basis = C.support.basis
    K = C.kgroups[C.n - 2]

    terms = []
    for index, v in enumerate(x):

        if not v:
            continue

        (i, j), kappa = C.split(2, index)

        for t, w in sorted(K.lift(kappa).items()):
            terms.append((v * w, basis[i], basis[j], [basis[k] for k in K.tuple_at(t)]))

    return terms


def chi_prime_data(C, x):
    """

    The pair (u_31, x) for x in the kernel of δ_2, with a certificate that
    the t_2'' component

        Σ b ⊗ {a, c_1, ..., c_{n-2}} + a ⊗ {b, c_1, ..., c_{n-2}}

    has zero normal form. That component is δ_2(x).

    # Parameters

    C:TruncatedBnComplex
        - n >= 3

    x:list(int)
        - an element of P_2

    # Return

    A ChiPrimeData.

    """

    n = C.n

    if n < 3:
        raise InvalidInputError("chi' needs n >= 3.")

    if any(C.delta(2, x)):
        raise InvalidInputError("The element is not in the kernel of δ_2.")

    terms = _expand_position2(C, x)

    m = n - 2
    scale = Fraction((-1) ** m, factorial(m))

    u31 = {}
    t2 = C.zero(1)

    for coefficient, a, b, cs in terms:

        values = [c.value() for c in cs]
        block = _c_block(values, m)

        for outer, inner in ((b, a), (a, b)):

            chain = c_cycle(_scalar_diag(inner.value(), m, 0), *block)
            chain = chain.scale(scale * coefficient)

            u31[outer] = u31[outer] + chain if outer in u31 else chain

            component = C.encode([outer], [inner] + list(cs))
            t2 = [s + coefficient * y for s, y in zip(t2, component)]

    t2 = list(C.positions[1].reduce(t2))
    chains = [(u, chain) for u, chain in u31.items() if not chain.is_zero()]

    certificate = {
        "t2_double_prime_zero": not any(t2),
        "matches_delta2": t2 == list(C.delta(2, x)),
        "u31_cycles": all(bar_boundary(chain).is_zero() for _, chain in chains),
        "u31_denominator": lcm(1, *(chain.denominator() for _, chain in chains)),
    }
    certificate["passed"] = certificate["t2_double_prime_zero"] and certificate["u31_cycles"]

    return ChiPrimeData(n, terms, chains, certificate)


# -------------
# Exterior classes


def _key_order(key):
    component, place = key
    return (component, place.sort_key)


class ExteriorClass:
    """
    An element of the n-th exterior power of the free quotient of a torus.
    Monomials are sorted tuples of basis keys (component, place); a
    monomial with a repeated key is zero.
    """

    def __init__(self, degree, terms=None):

        self.degree = degree
        self.terms = {}

        for key, c in (terms or {}).items():

            c = Fraction(c) + self.terms.get(key, 0)

            if c:
                self.terms[key] = c

            else:
                self.terms.pop(key, None)

    def __add__(self, other):

        if other.degree != self.degree:
            raise InvalidInputError("Exterior classes of different degrees.")

        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c

        return ExteriorClass(self.degree, terms)

    def scale(self, c):
        return ExteriorClass(self.degree, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):

        if not isinstance(other, ExteriorClass):
            return NotImplemented

        return self.degree == other.degree and self.terms == other.terms

    def to_json(self):

        data = [
            {
                "coefficient": str(c),
                "wedge": [f"{component}:{place}" for component, place in key],
            }
            for key, c in self.terms.items()
        ]

        return sorted(data, key=lambda t: t["wedge"])

    def __repr__(self):
        return f"ExteriorClass(degree={self.degree}, terms={len(self.terms)})"


def _free_coordinates(g, caps):
    """
    {(component, place): exponent} for a torus element or a diagonal
    matrix. Torsion is dropped.
    """

    if isinstance(g, QMatrix):

        if not g.is_diagonal:
            raise InvalidInputError("Only diagonal matrices project to the torus.")

        units = [factor(x, caps) for x in g.diagonal()]

    elif isinstance(g, TorusElement):
        units = g.coordinates

    else:
        raise InvalidInputError(f"{g!r} is not a torus element.")

    return {
        (component, place): e
        for component, u in enumerate(units)
        for place, e in u.exponents
    }


def _wedge_terms(vectors):

    terms = {}

    for choice in product(*(sorted(v.items(), key=lambda kv: _key_order(kv[0])) for v in vectors)):

        keys = [k for k, _ in choice]
        if len(set(keys)) < len(keys):
            continue

        order = sorted(range(len(keys)), key=lambda i: _key_order(keys[i]))

        c = signature(order)
        for _, e in choice:
            c *= e

        key = tuple(keys[i] for i in order)
        terms[key] = terms.get(key, 0) + c

    return terms


def wedge(*elements, caps=None):
    """
    g_1 ∧ ... ∧ g_n for torus elements or diagonal matrices.
    """

    caps = caps or DEFAULT_CAPS

    vectors = [_free_coordinates(g, caps) for g in elements]
    return ExteriorClass(len(elements), _wedge_terms(vectors))


def exterior_class(chain, caps=None):
    """
    [g_1|...|g_n] -> g_1 ∧ ... ∧ g_n, extended linearly. Matrices must be
    diagonal.
    """

    caps = caps or DEFAULT_CAPS

    coordinates = {}
    result = ExteriorClass(chain.degree)

    for key, c in chain.terms.items():

        vectors = []
        for g in key:
            if g not in coordinates:
                coordinates[g] = _free_coordinates(g, caps)

            vectors.append(coordinates[g])

        result = result + ExteriorClass(chain.degree, _wedge_terms(vectors)).scale(c)

    return result


def kappa_torsion_report(n, terms, caps=None):
    """
    The exterior class of (n - 1)·kappa_chain. Whether the homology class
    of (n-1)·kappa vanishes is not decidable from chains; the class is
    reported only.
    """

    chain = kappa_chain(n, terms)
    projected = exterior_class(chain.scale(n - 1), caps)

    return {
        "n": n,
        "exterior_class": projected.to_json(),
        "exterior_class_zero": projected.is_zero(),
        "asserted": False,
    }


# -------------
# Random inputs


def random_rational(rng, height=10):
    """
    A non-zero rational with numerator and denominator at most `height`.
    """

    num = 0
    while num == 0:
        num = rng.randint(-height, height)

    return Fraction(num, rng.randint(1, height))


def random_matrix(rng, size, height=3):
    """
    A random invertible rational matrix.
    """

    while True:

        rows = [
            [Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(size)]
            for _ in range(size)
        ]

        try:
            return QMatrix(tuple(tuple(r) for r in rows))

        except InvalidInputError:
            continue


def random_diagonal_family(rng, n, size, height=10):
    return [QMatrix.diag([random_rational(rng, height) for _ in range(size)]) for _ in range(n)]


def random_chain(rng, degree, size, terms=3, height=3):
    return BarChain(
        degree,
        {
            tuple(random_matrix(rng, size, height) for _ in range(degree)): rng.randint(-3, 3)
            for _ in range(terms)
        },
    )


def random_torus_element(rng, support, rank, bound=2):
    return TorusElement(tuple(support.random_unit(rng, bound) for _ in range(rank)))


def random_torus_chain(rng, support, degree, rank, terms=3):
    return BarChain(
        degree,
        {
            tuple(random_torus_element(rng, support, rank) for _ in range(degree)): rng.randint(-3, 3)
            for _ in range(terms)
        },
    )
