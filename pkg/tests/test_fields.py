#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = f19918b5-d135-47d5-b61b-42639181956c
date       = 2024-03-02
-----------
"""

import random

from fractions import Fraction

import pytest

from milnork.milnork.config import Caps
from milnork.milnork.errors import (
    CapExceededError,
    FactorizationError,
    InvalidInputError,
    ResidueFieldTooLargeError,
    SupportError,
    ValuationError,
)
from milnork.milnork.fields import (
    QQ,
    FunctionField,
    Place,
    PolyFraction,
    Support,
    factor,
    format_poly,
    hilbert_dyadic,
    legendre_from_tame,
    product_formula,
    real_symbol,
    residue,
    residue_field,
    residue_log,
    tame_symbol_at_infinity,
    weil_reciprocity,
)

F3 = FunctionField.create(3)
F5 = FunctionField.create(5)


def t_poly(coefficients, p=3):
    return PolyFraction.make(coefficients, (1,), p)


# ---------
# factor over Q

data = []

data.append(
    {
        "x": Fraction(-12, 35),
        "torsion": -1,
        "exponents": {"2": 2, "3": 1, "5": -1, "7": -1},
    }
)
data.append({"x": 1, "torsion": 1, "exponents": {}})
data.append({"x": -1, "torsion": -1, "exponents": {}})
data.append({"x": Fraction(1, 1024), "torsion": 1, "exponents": {"2": -10}})
data.append({"x": 1009 * 1013, "torsion": 1, "exponents": {"1009": 1, "1013": 1}})


@pytest.mark.parametrize("data", data)
def test_factor_rational(data):

    u = QQ.factor(data["x"])

    assert u.to_json() == {
        "field": "q",
        "torsion": data["torsion"],
        "exponents": data["exponents"],
    }

    assert u.value() == Fraction(data["x"])


def test_factor_with_pollard_rho():

    caps = Caps(trial_division=100)
    u = QQ.factor(1009 * 1013, caps)

    assert u.valuation(Place.odd_prime(1009)) == 1
    assert u.valuation(Place.odd_prime(1013)) == 1


def test_factor_refusals():

    with pytest.raises(InvalidInputError):
        QQ.factor(0)

    with pytest.raises(FactorizationError):
        QQ.factor(2**20 + 7, Caps(max_bits=16))


def test_unit_arithmetic():

    u = QQ.factor(6)
    v = QQ.factor(Fraction(-1, 3))

    assert (u * v).value() == -2
    assert (u**-1).value() == Fraction(1, 6)
    assert (-u).value() == -6
    assert (u / u).is_one()
    assert (v**2).value() == Fraction(1, 9)


# ---------
# factor over F_p(t)


def test_factor_function_field():

    x = PolyFraction.make((2, 2, 0), (1, 0, 1), 3)
    u = factor(x)

    assert u.to_json() == {
        "field": "fp3",
        "torsion": 2,
        "exponents": {"t": 1, "t+1": 1, "t^2+1": -1},
    }

    assert u.value() == x
    assert str(x) == "(2*t^2+2*t)/(t^2+1)@p=3"


def test_function_field_unit_inverse():

    u = F5.factor(PolyFraction.make((3, 0), (1,), 5))

    assert u.torsion == 3
    assert u.inverse().torsion == 2
    assert (u * u.inverse()).is_one()


def test_function_field_refusals():

    with pytest.raises(InvalidInputError):
        FunctionField.create(4)

    with pytest.raises(CapExceededError):
        FunctionField.create(101)

    with pytest.raises(InvalidInputError):
        F3.factor(PolyFraction.make((), (1,), 3))

    with pytest.raises(InvalidInputError):
        F3.factor(t_poly((1, 1), p=5))

    # t^2 + 1 is irreducible mod 3 but exceeds a degree cap of 1
    with pytest.raises(CapExceededError):
        F3.factor(t_poly((1, 0, 1)), Caps(irreducible_degree=1))


def test_poly_fraction_arithmetic():

    a = PolyFraction.make((1, 0), (1, 1), 3)
    b = PolyFraction.make((1,), (1, 1), 3)

    assert (a + b) == PolyFraction.constant(1, 3)
    assert (a - a).is_zero()
    assert (a * b / b) == a

    with pytest.raises(InvalidInputError):
        a / (b - b)


data = []

data.append({"poly": (2, 2, 0), "text": "2*t^2+2*t"})
data.append({"poly": (1, 0), "text": "t"})
data.append({"poly": (1, 0, 1), "text": "t^2+1"})
data.append({"poly": (), "text": "0"})


@pytest.mark.parametrize("data", data)
def test_format_poly(data):
    assert format_poly(data["poly"]) == data["text"]


# ---------
# Places


def test_place_constructors():

    assert Place.rational(2) == Place.dyadic()
    assert Place.rational(7) == Place.odd_prime(7)

    with pytest.raises(InvalidInputError):
        Place.odd_prime(9)

    with pytest.raises(InvalidInputError):
        Place.rational(4)

    # t^2 + 2 = (t + 1)(t + 2) mod 3
    with pytest.raises(InvalidInputError):
        Place.irreducible((1, 0, 2), 3)

    with pytest.raises(InvalidInputError):
        Place.irreducible((2, 1), 3)

    assert Place.irreducible((1, 0, 1), 3).residue_order == 9
    assert sorted([Place.odd_prime(5), Place.dyadic(), Place.real()])[0] == Place.real()


# ---------
# Residue fields

data = []

data.append({"place": Place.odd_prime(7), "x": 3, "log": 1})
data.append({"place": Place.odd_prime(7), "x": 2, "log": 2})
data.append({"place": Place.odd_prime(7), "x": 1, "log": 0})

# F_9 = F_3[t]/(t^2 + 1) is generated by t + 1 and t = (t + 1)^6
data.append({"place": Place.irreducible((1, 0, 1), 3), "x": t_poly((1, 0)), "log": 6})


@pytest.mark.parametrize("data", data)
def test_residue_log(data):
    assert residue_log(data["place"], factor(data["x"])) == data["log"]


def test_residue_field_generator():

    rf = residue_field(Place.irreducible((1, 0, 1), 3))

    assert rf.generator == (1, 1)
    assert rf.order == 9
    assert rf.exp(rf.log((1, 0))) == (1, 0)


def test_residue_refusals():

    with pytest.raises(ResidueFieldTooLargeError):
        residue_field(Place.odd_prime(101), 50)

    with pytest.raises(ValuationError):
        residue(Place.odd_prime(3), QQ.factor(6))

    with pytest.raises(InvalidInputError):
        residue_field(Place.real())


# ---------
# Hilbert symbols over Q

data = []

data.append({"a": 2, "b": -1, "result": 1})
data.append({"a": -1, "b": -1, "result": -1})
data.append({"a": 2, "b": 3, "result": -1})
data.append({"a": 3, "b": 3, "result": -1})
data.append({"a": 5, "b": 5, "result": 1})
data.append({"a": 2, "b": 2, "result": 1})


@pytest.mark.parametrize("data", data)
def test_hilbert_dyadic(data):
    assert hilbert_dyadic(data["a"], data["b"]) == data["result"]


def test_local_symbols():

    assert real_symbol(-2, -3) == -1
    assert real_symbol(-2, 3) == 1

    # (3, 5)_5 is the Legendre symbol of 3 mod 5
    assert legendre_from_tame(3, 5, 5) == -1
    assert legendre_from_tame(4, 5, 5) == 1


data = []

data.append((-1, -1))
data.append((2, 3))
data.append((Fraction(-12, 35), Fraction(7, 6)))
data.append((5, 7))
data.append((-3, 13))


@pytest.mark.parametrize("data", data)
def test_product_formula(data):
    assert product_formula(*data) == 1


def test_product_formula_random():

    rng = random.Random(3)

    for _ in range(50):

        a = Fraction(rng.choice([-1, 1]) * rng.randint(1, 500), rng.randint(1, 500))
        b = Fraction(rng.choice([-1, 1]) * rng.randint(1, 500), rng.randint(1, 500))

        assert product_formula(a, b) == 1


# ---------
# Weil reciprocity over F_p(t)

data = []

data.append((t_poly((1, 0)), t_poly((1, 1))))
data.append((t_poly((2, 0, 1)), t_poly((1, 0, 1))))
data.append((PolyFraction.make((1, 2), (1, 0, 1), 3), t_poly((2, 1, 1))))
data.append((PolyFraction.make((1, 0, 0), (1,), 5), PolyFraction.make((3, 1), (1, 1), 5)))


@pytest.mark.parametrize("data", data)
def test_weil_reciprocity(data):

    a, b = (factor(x) for x in data)

    assert weil_reciprocity(a, b) == 1


def test_tame_symbol_at_infinity():

    # both of degree 1: the unit is -(t+1)/t, leading coefficient -1
    a = factor(t_poly((1, 0)))
    b = factor(t_poly((1, 1)))

    assert tame_symbol_at_infinity(a, b) == 2

    with pytest.raises(InvalidInputError):
        tame_symbol_at_infinity(QQ.factor(2), QQ.factor(3))


# ---------
# Support


def test_rational_support():

    S = Support.of(QQ, [Place.rational(3), Place.rational(2)])

    assert str(S) == "-1,2,3"
    assert S.rank == 3
    assert S.orders == (2, 0, 0)

    u = QQ.factor(-12)

    assert S.coordinates(u) == [1, 2, 1]
    assert S.unit([1, 2, 1]).value() == -12

    with pytest.raises(SupportError):
        S.coordinates(QQ.factor(5))

    assert S.issubset(Support.of(QQ, [Place.rational(2), Place.rational(3), Place.rational(5)]))


def test_function_field_support():

    S = Support.of(F3, [Place.irreducible((1, 0), 3), Place.irreducible((1, 1), 3)])

    assert str(S) == "t,t+1@p=3"

    u = factor(PolyFraction.make((2, 2, 0), (1,), 3))
    assert S.coordinates(u) == [1, 1, 1]
    assert S.unit(S.coordinates(u)) == u


def test_support_refusals():

    with pytest.raises(CapExceededError):
        Support.of(QQ, [Place.rational(2), Place.rational(3)], Caps(support=1))

    with pytest.raises(InvalidInputError):
        Support.of(QQ, [Place.irreducible((1, 0), 3)])

    with pytest.raises(InvalidInputError):
        Support.of(F3, [Place.odd_prime(3)])


def test_random_unit_is_an_s_unit():

    rng = random.Random(5)
    S = Support.of(QQ, [Place.rational(2), Place.rational(5)])

    for _ in range(20):
        assert S.contains(S.random_unit(rng))
