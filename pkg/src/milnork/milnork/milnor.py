#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 31dee423-67df-4d7e-82b3-ccc06fe0c887
# date  : 2024-03-02
# -----------

"""
Milnor K-theory of Q and F_p(t): symbols, normal forms and the S-unit
truncated K-groups.

Normal form coordinates by degree m:

- m = 0: an integer
- m = 1: the unit itself
- m = 2 over Q: the dyadic coordinate in Z/2 (1 when the 2-adic Hilbert
  symbol is -1) and the tame symbol at every odd prime in Z/(p-1)
- m = 2 over F_p(t): the tame symbol at every monic irreducible in
  Z/(q-1)
- m >= 3 over Q: one Z/2 coordinate, 1 when every entry is negative
- m >= 3 over F_p(t): nothing, the group is trivial

A `TruncatedKGroup` is the subgroup of K_m generated by symbols of S-unit
basis elements. It is computed as the image of the normal form map on
basis tuples and carried in a reduced diagonal presentation.

"""

# ------------
# System Modules - Included with Python

import logging

from dataclasses import dataclass
from functools import cached_property
from itertools import product

# ------------
# Custom Modules

from .config import Caps
from .errors import (
    CapExceededError,
    InvalidInputError,
    NotInImageError,
)
from .fgab import (
    FgAbGroup,
    GroupMorphism,
    ImageReduction,
    IntMatrix,
    image,
)
from .fields import (
    Place,
    PlaceKind,
    PolyFraction,
    RationalField,
    hilbert_dyadic,
    residue_field,
    tame_residue,
)

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

DEFAULT_CAPS = Caps()

# Bump when the coordinate or generator conventions change. Stored results
# (cache files, golden values) recorded under another version are invalid.
CONVENTION_VERSION = 1


class K3IndLabel:
    """
    Stands for K_3^ind(F). It is never computed.
    """

    def __str__(self):
        return "K_3^ind(F)"

    def __repr__(self):
        return "K3IndLabel()"

    def to_json(self):
        return {"label": str(self), "computed": False}


K3_IND = K3IndLabel()


@dataclass(frozen=True)
class MilnorSymbol:
    """
    {a_1, ..., a_m} with entries UnitVectors of one field.
    """

    field: object
    entries: tuple = ()

    def __post_init__(self):

        object.__setattr__(self, "entries", tuple(self.entries))

        for e in self.entries:
            if e.field != self.field:
                raise InvalidInputError("Symbol entries must belong to one field.")

    @property
    def degree(self):
        return len(self.entries)

    def __str__(self):
        return "{" + ", ".join(str(e) for e in self.entries) + "}"


@dataclass(frozen=True)
class MilnorExpression:
    """
    A formal integer combination of symbols of one degree and field.
    """

    field: object
    degree: int
    terms: tuple = ()

    def __post_init__(self):

        for c, s in self.terms:
            if s.field != self.field or s.degree != self.degree:
                raise InvalidInputError(
                    "All terms of an expression must share a degree and a field."
                )

    @classmethod
    def of(cls, terms):
        """
        Build from [(coefficient, MilnorSymbol), ...]; degree and field are
        taken from the first term.
        """

        terms = tuple((int(c), s) for c, s in terms)

        if not terms:
            raise InvalidInputError("An empty expression has no degree.")

        return cls(terms[0][1].field, terms[0][1].degree, terms)

    @classmethod
    def symbol(cls, field, entries):
        s = MilnorSymbol(field, entries)
        return cls(field, s.degree, ((1, s),))

    def __add__(self, other):
        return MilnorExpression(self.field, self.degree, self.terms + other.terms)

    def __neg__(self):
        return MilnorExpression(self.field, self.degree, tuple((-c, s) for c, s in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return " + ".join(f"{c}{s}" if c != 1 else str(s) for c, s in self.terms) or "0"


# -------------
# Normal forms


def _label(key):

    if key is None:
        return "Z"

    if isinstance(key, str):
        return key

    if key.kind is PlaceKind.DYADIC:
        return "dyadic"

    if key.kind is PlaceKind.REAL:
        return "real"

    return str(key)


def _sort_key(key):

    if key is None or isinstance(key, str):
        return (0, 0, ())

    return key.sort_key


@dataclass(frozen=True)
class KNormalForm:
    """
    Canonical coordinates of a class in K_m.

    # Attributes

    coordinates:tuple((key, value, modulus))
        - key is None (degree 0) or a Place; modulus 0 means Z
        - zero coordinates are not stored

    unit:UnitVector
        - the class itself in degree 1, otherwise None

    """

    field: object
    degree: int
    coordinates: tuple = ()
    unit: object = None

    @classmethod
    def make(cls, field, degree, values, unit=None):
        """
        values: dict key -> (value, modulus)
        """

        coordinates = []
        for key, (value, modulus) in values.items():

            if modulus:
                value %= modulus

            if value:
                coordinates.append((key, value, modulus))

        coordinates.sort(key=lambda c: _sort_key(c[0]))
        return cls(field, degree, tuple(coordinates), unit)

    def values(self):
        return {key: (value, modulus) for key, value, modulus in self.coordinates}

    def value(self, key):
        for k, v, _ in self.coordinates:
            if k == key:
                return v

        return 0

    def __add__(self, other):

        if self.field != other.field or self.degree != other.degree:
            raise InvalidInputError("Cannot add normal forms of different degrees or fields.")

        if self.degree == 1:
            return KNormalForm(self.field, 1, (), self.unit * other.unit)

        values = self.values()
        for key, (value, modulus) in other.values().items():
            v, _ = values.get(key, (0, modulus))
            values[key] = (v + value, modulus)

        return KNormalForm.make(self.field, self.degree, values)

    def scale(self, c):

        if self.degree == 1:
            return KNormalForm(self.field, 1, (), self.unit**c)

        return KNormalForm.make(
            self.field,
            self.degree,
            {key: (c * v, m) for key, (v, m) in self.values().items()},
        )

    def is_zero(self):

        if self.degree == 1:
            return self.unit.is_one()

        return not self.coordinates

    @property
    def hilbert(self):
        """
        The 2-adic Hilbert symbol (±1) of a degree 2 class over Q.
        """

        if not isinstance(self.field, RationalField) or self.degree != 2:
            return None

        return -1 if self.value(Place.dyadic()) else 1

    def to_json(self):

        data = {"field": self.field.tag, "degree": self.degree}

        if self.degree == 1:
            data["unit"] = self.unit.to_json()
            return data

        data["coordinates"] = {_label(k): v for k, v, _ in self.coordinates}
        data["moduli"] = {_label(k): m for k, _, m in self.coordinates}

        if self.hilbert is not None:
            data["hilbert_2"] = self.hilbert

        return data

    def __str__(self):

        if self.degree == 1:
            return str(self.unit)

        if not self.coordinates:
            return "0"

        return ", ".join(
            f"{_label(k)}: {v}" + (f" mod {m}" if m else "")
            for k, v, m in self.coordinates
        )


def tame_symbol(a, b, place, cap=None):
    """
    The discrete log of (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} at a tame
    place (odd prime or monic irreducible), in Z/(q-1).
    """

    if not place.is_tame:
        raise InvalidInputError(
            f"No tame symbol at the {place.kind.value} place; use the Hilbert symbol."
        )

    return residue_field(place, cap).log(tame_residue(a, b, place))


def _symbol_values(field, entries, caps):
    """
    Normal form values of a single symbol of degree >= 2, as a dict
    key -> (value, modulus).
    """

    m = len(entries)

    if m == 2:

        a, b = entries
        values = {}

        for place in sorted(set(a.places) | set(b.places)):

            if place.is_tame:
                values[place] = (
                    tame_symbol(a, b, place, caps.residue_field),
                    place.residue_order - 1,
                )

        if isinstance(field, RationalField):
            values[Place.dyadic()] = (1 if hilbert_dyadic(a, b) == -1 else 0, 2)

        return values

    if isinstance(field, RationalField):
        negative = all(e.torsion < 0 for e in entries)
        return {Place.real(): (1 if negative else 0, 2)}

    return {}


def normal_form(expression, caps=None):
    """
    The normal form of a MilnorExpression. It is additive in the
    expression.
    """

    caps = caps or DEFAULT_CAPS

    field = expression.field
    m = expression.degree

    if m == 0:
        return KNormalForm.make(field, 0, {None: (sum(c for c, _ in expression.terms), 0)})

    if m == 1:
        unit = field.one()
        for c, s in expression.terms:
            unit = unit * s.entries[0] ** c

        return KNormalForm(field, 1, (), unit)

    values = {}
    for c, s in expression.terms:
        for key, (value, modulus) in _symbol_values(field, s.entries, caps).items():
            v, _ = values.get(key, (0, modulus))
            values[key] = (v + c * value, modulus)

    return KNormalForm.make(field, m, values)


def symbol_normal_form(field, entries, caps=None):
    return normal_form(MilnorExpression.symbol(field, entries), caps)


def _one(field):

    if isinstance(field, RationalField):
        return 1

    return PolyFraction.constant(1, field.p)


def steinberg_check(a, field, others=(), caps=None):
    """

    Check the Steinberg relations on the element `a`.

    # Parameters

    a:Fraction|PolyFraction
        - not 0 and not 1

    field:RationalField|FunctionField

    others:iterable
        - elements b used for the antisymmetry check {a,b} + {b,a} = 0

    # Return

    A dict with one boolean per relation. FactorizationError from 1 - a
    propagates so callers can skip and count.

    """

    caps = caps or DEFAULT_CAPS

    one = _one(field)
    if a == one or (a == 0 if isinstance(field, RationalField) else a.is_zero()):
        raise InvalidInputError("The Steinberg check needs a not in {0, 1}.")

    ua = field.factor(a, caps)
    u1a = field.factor(one - a, caps)

    report = {
        "a": str(a),
        "a_one_minus_a": symbol_normal_form(field, [ua, u1a], caps).is_zero(),
        "a_minus_a": symbol_normal_form(field, [ua, -ua], caps).is_zero(),
        "antisymmetry": [],
    }

    for b in others:
        ub = field.factor(b, caps)

        e = MilnorExpression.symbol(field, [ua, ub]) + MilnorExpression.symbol(field, [ub, ua])
        report["antisymmetry"].append(normal_form(e, caps).is_zero())

    report["passed"] = (
        report["a_one_minus_a"] and report["a_minus_a"] and all(report["antisymmetry"])
    )

    return report


# -------------
# Truncated K-groups


class TruncatedKGroup:
    """
    The subgroup of K_m generated by the symbols {b_1, ..., b_m} of S-unit
    basis elements.

    The basis tuples (ordered m-tuples of basis indices, lexicographic) map
    to normal form coordinates by the matrix `phi`. The group is the image
    of that map, carried in a reduced diagonal presentation
    (`reduced_group`); `group` is the presentation on basis tuples modulo
    the kernel, built on demand.

    Build instances with `truncated_k_group`, which memoizes them.
    """

    def __init__(self, field, support, degree, caps=None, state=None):

        caps = caps or DEFAULT_CAPS

        if degree < 0:
            raise InvalidInputError("Degree must be non-negative.")

        if degree > caps.degree:
            raise CapExceededError(f"Degree {degree} > cap {caps.degree}.")

        if support.field != field:
            raise InvalidInputError("The support does not belong to the field.")

        self.field = field
        self.support = support
        self.degree = degree
        self.caps = caps

        self.k = support.rank

        if self.tuple_count > 10**caps.matrix_size:
            raise CapExceededError(
                f"{self.tuple_count} basis tuples exceed the cap 10^{caps.matrix_size}."
            )

        self.layout = self._layout()
        self.target = FgAbGroup.diagonal([m for _, m in self.layout])
        self._row = {key: i for i, (key, _) in enumerate(self.layout)}

        self.phi = self._phi()
        self.morphism = GroupMorphism(
            FgAbGroup.free(self.tuple_count), self.target, self.phi, check=False
        )

        self.reduction = ImageReduction(self.morphism, state)
        self.reduced_group = self.reduction.group

        log.debug(
            "K_%d over %s with S = %s: %d tuples, reduced to %s",
            degree,
            field,
            support,
            self.tuple_count,
            self.reduced_group,
        )

    # ------
    # Layout

    @property
    def tuple_count(self):
        return self.k**self.degree

    def tuple_index(self, t):
        index = 0
        for i in t:
            index = index * self.k + i

        return index

    def tuple_at(self, index):
        t = []
        for _ in range(self.degree):
            index, i = divmod(index, self.k)
            t.append(i)

        return tuple(reversed(t))

    def tuples(self):
        return product(range(self.k), repeat=self.degree)

    def _layout(self):
        return coordinate_layout(self.field, self.support, self.degree)

    def vector(self, nf):
        """
        The target vector of a KNormalForm.
        """

        if nf.degree != self.degree:
            raise InvalidInputError("Degree mismatch.")

        if self.degree == 1:
            return self.support.coordinates(nf.unit)

        v = [0] * len(self.layout)
        for key, value, _ in nf.coordinates:

            if key not in self._row:
                raise NotInImageError(
                    f"Coordinate at {_label(key)} is outside the truncation {self.support}."
                )

            v[self._row[key]] = value

        return v

    def normal_form_of_vector(self, v):

        if self.degree == 1:
            return KNormalForm(self.field, 1, (), self.support.unit(v))

        return KNormalForm.make(
            self.field,
            self.degree,
            {key: (v[i], m) for i, (key, m) in enumerate(self.layout)},
        )

    def _phi(self):

        m = self.degree
        rows = len(self.layout)

        if m == 0:
            return IntMatrix(1, 1, {(0, 0): 1})

        if m == 1:
            return IntMatrix(rows, self.k, {(i, i): 1 for i in range(self.k)})

        if m >= 3:
            if isinstance(self.field, RationalField):
                # only the torsion generator -1 is negative
                return IntMatrix(rows, self.tuple_count, {(0, 0): 1})

            return IntMatrix(rows, self.tuple_count)

        basis = self.support.basis
        columns = []
        for t in self.tuples():
            nf = symbol_normal_form(self.field, [basis[i] for i in t], self.caps)
            columns.append({i: v for i, v in enumerate(self.vector(nf)) if v})

        return IntMatrix.from_columns(rows, columns)

    # ------
    # Presentations

    @cached_property
    def group(self):
        """
        The presentation on basis tuples modulo the kernel of the normal
        form map.
        """

        return image(self.morphism).group

    @property
    def ngens(self):
        return self.reduced_group.ngens

    def zero(self):
        return KClass(self, [0] * self.ngens)

    def generator(self, k):
        return KClass(self, self.reduced_group.generator(k))

    def generators(self):
        return [self.generator(k) for k in range(self.ngens)]

    def lift(self, k):
        return self.reduction.lift(k)

    def class_of_vector(self, v):
        return KClass(self, self.reduction.reduce(v))

    def class_of_tuple(self, t):
        return self.class_of_vector(self.phi.dense_column(self.tuple_index(t)))

    def class_of_symbol(self, entries):
        """
        The class of {a_1, ..., a_m} for S-units a_i.
        """

        for e in entries:
            self.support.coordinates(e)

        nf = symbol_normal_form(self.field, entries, self.caps)
        return self.class_of_vector(self.vector(nf))

    def class_of_tuples(self, combination):
        """
        The class of a combination {tuple index: coefficient}.
        """

        return self.class_of_vector(self.phi.apply(combination))

    def to_reduced(self, x):
        """
        Map an element of `group` (tuple coordinates) to the reduced
        presentation.
        """

        return self.reduction.reduce_source(x)

    @property
    def key(self):
        return f"{self.support.key}:m={self.degree}"

    def convention(self):
        """
        Everything the coordinates depend on. Stored results are keyed by
        its hash.
        """

        return k_group_convention(self.field, self.support, self.degree, self.caps)

    def to_json(self):
        return {
            "support": self.support.to_json(),
            "degree": self.degree,
            "tuples": self.tuple_count,
            "group": self.reduced_group.to_json(),
        }


def _generator_label(place, caps):
    g = residue_field(place, caps.residue_field).generator
    return g if isinstance(g, int) else list(g)


def coordinate_layout(field, support, degree):
    """
    The normal form coordinates of the truncation, as a list of
    (key, modulus).
    """

    if degree == 0:
        return [(None, 0)]

    if degree == 1:
        # coordinates of the S-unit itself
        return [("torsion", field.torsion_order)] + [(p, 0) for p in support.places]

    if degree == 2:
        layout = [(p, p.residue_order - 1) for p in support.places if p.is_tame]

        if isinstance(field, RationalField):
            layout = [(Place.dyadic(), 2)] + layout

        return layout

    if isinstance(field, RationalField):
        return [(Place.real(), 2)]

    return []


def k_group_convention(field, support, degree, caps):
    """
    Everything the coordinates of a truncated K-group depend on. Stored
    results are keyed by its hash.
    """

    return {
        "version": CONVENTION_VERSION,
        "field": field.tag,
        "basis": list(support.labels()),
        "degree": degree,
        "layout": [[_label(k), m] for k, m in coordinate_layout(field, support, degree)],
        "generators": {
            str(p): _generator_label(p, caps)
            for p in support.places
            if p.is_tame and degree == 2
        },
    }


class KClass:
    """
    An element of a TruncatedKGroup in reduced coordinates.
    """

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = tuple(group.reduced_group.reduce(coords))

    @classmethod
    def from_symbol(cls, group, entries):
        return group.class_of_symbol(entries)

    def _check(self, other):
        if other.group is not self.group:
            raise InvalidInputError("Classes of different groups.")

    def __add__(self, other):
        self._check(other)
        return KClass(self.group, [a + b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return KClass(self.group, [-a for a in self.coords])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return KClass(self.group, [c * a for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented

        return self.group is other.group and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.group), self.coords))

    def is_zero(self):
        return not any(self.coords)

    def representative(self):
        """
        A combination of basis tuples {tuple index: coefficient}.
        """

        rep = {}
        for k, c in enumerate(self.coords):
            if c:
                for j, v in self.group.lift(k).items():
                    rep[j] = rep.get(j, 0) + c * v

        return {j: v for j, v in rep.items() if v}

    def normal_form(self):
        return self.group.normal_form_of_vector(self.group.phi.apply(self.representative()))

    def multiply_basis(self, b, target=None):
        """
        {b-th basis unit} · self in degree m + 1.
        """

        target = target or truncated_k_group(
            self.group.field, self.group.support, self.group.degree + 1, self.group.caps
        )

        offset = b * self.group.tuple_count
        return target.class_of_tuples(
            {offset + j: v for j, v in self.representative().items()}
        )

    def __repr__(self):
        return f"KClass(m={self.group.degree}, {self.coords})"

    def to_json(self):
        return {"coords": list(self.coords), "normal_form": self.normal_form().to_json()}


def multiply_unit(u, x, target=None):
    """
    {u} · x for an S-unit u and x in a TruncatedKGroup of degree m. The
    unit is expanded over the S-unit basis, each basis unit is prepended
    to the tuples of x and the result is reduced in degree m + 1.
    """

    group = x.group

    target = target or truncated_k_group(
        group.field, group.support, group.degree + 1, group.caps
    )

    result = target.zero()
    for b, c in enumerate(group.support.coordinates(u)):
        if c:
            result = result + c * x.multiply_basis(b, target)

    return result


# -------------
# Memoized construction

_memo = {}


def truncated_k_group(field, support, degree, caps=None, cache=None):
    """
    The TruncatedKGroup for (field, S, m), memoized in process and, when a
    `KGroupCache` is passed, on disk.
    """

    caps = caps or DEFAULT_CAPS
    key = (field, support, degree, caps)

    if key in _memo:
        group = _memo[key]

        # the memo outlives any one cache folder
        if cache is not None and not cache.path(field, support, degree).exists():
            cache.store(group)

        return group

    group = None

    if cache is not None:
        group = cache.load(field, support, degree, caps)

    if group is None:
        group = TruncatedKGroup(field, support, degree, caps)

        if cache is not None:
            cache.store(group)

    # idempotent: a concurrent builder stores an equal value
    return _memo.setdefault(key, group)


def clear_memo():
    _memo.clear()
