#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = 8127c1eb-863c-4ab2-aee4-1949df62550a
date       = 2024-03-02
-----------
"""

import random

from fractions import Fraction

import pytest

from milnork.milnork.cache import KGroupCache
from milnork.milnork.config import Caps
from milnork.milnork.errors import CapExceededError, InvalidInputError
from milnork.milnork.fgab import FgAbGroup
from milnork.milnork.fields import QQ, FunctionField, Place, PolyFraction, factor
from milnork.milnork.milnor import (
    KClass,
    MilnorExpression,
    MilnorSymbol,
    TruncatedKGroup,
    clear_memo,
    multiply_unit,
    normal_form,
    steinberg_check,
    symbol_normal_form,
    tame_symbol,
    truncated_k_group,
)
from milnork.milnork.parsing import parse_expression, parse_support, parse_symbol

F3 = FunctionField.create(3)


def nf(text):
    field, entries = parse_symbol(text)
    return symbol_normal_form(field, entries)


def expression_nf(text):
    field, terms = parse_expression(text)
    return normal_form(MilnorExpression.of([(c, MilnorSymbol(field, e)) for c, e in terms]))


# ---------
# symbol_normal_form

data = []

data.append({"symbol": "{2, -1}", "zero": True})
data.append({"symbol": "{-1, -1}", "zero": False})
data.append({"symbol": "{2, 3}", "zero": False})
data.append({"symbol": "{-1, -1, -1}", "zero": False})
data.append({"symbol": "{-1, -1, 2}", "zero": True})
data.append({"symbol": "{2, 3, 5}", "zero": True})
data.append({"symbol": "{t, 2*t+1}@p=3", "zero": True})
data.append({"symbol": "{t, t+1}@p=3", "zero": False})
data.append({"symbol": "{t, t+1, t}@p=3", "zero": True})
data.append({"symbol": "{7}", "zero": False})
data.append({"symbol": "{-1, 1}", "zero": True})


@pytest.mark.parametrize("data", data)
def test_symbol_zero(data):
    assert nf(data["symbol"]).is_zero() == data["zero"]


def test_symbol_coordinates():

    x = nf("{2, 3}")

    assert x.value(Place.dyadic()) == 1
    assert x.value(Place.odd_prime(3)) == 1
    assert x.hilbert == -1

    assert x.to_json() == {
        "field": "q",
        "degree": 2,
        "coordinates": {"dyadic": 1, "3": 1},
        "moduli": {"dyadic": 2, "3": 2},
        "hilbert_2": -1,
    }

    y = nf("{t, t+1}@p=3")

    assert y.value(Place.irreducible((1, 1), 3)) == 1
    assert y.value(Place.irreducible((1, 0), 3)) == 0
    assert y.hilbert is None


def test_tame_symbol():

    a = QQ.factor(2)
    b = QQ.factor(7)

    # at 7 the residue of 2 has logarithm 2 to the generator 3
    assert tame_symbol(a, b, Place.odd_prime(7)) == 2

    with pytest.raises(InvalidInputError):
        tame_symbol(a, b, Place.dyadic())


# ---------
# normal_form is additive

data = []

data.append({"expression": "{2, 3} + {2, 3}", "zero": True})
data.append({"expression": "{2, 3} + {3, 2}", "zero": True})
data.append({"expression": "{5, 7} - {5, 7}", "zero": True})
data.append({"expression": "2{-1, -1}", "zero": True})
data.append({"expression": "{-1, -1} + {2, 3}", "zero": False})
data.append({"expression": "{t, t+1} + {t+1, t}@p=3", "zero": True})


@pytest.mark.parametrize("data", data)
def test_expression_zero(data):
    assert expression_nf(data["expression"]).is_zero() == data["zero"]


def test_normal_form_is_additive():

    rng = random.Random(17)

    for _ in range(30):

        a, b, c = (Fraction(rng.choice([-1, 1]) * rng.randint(1, 60), rng.randint(1, 60)) for _ in range(3))
        ua, ub, uc = (QQ.factor(x) for x in (a, b, c))

        lhs = symbol_normal_form(QQ, [ua * ub, uc])
        rhs = symbol_normal_form(QQ, [ua, uc]) + symbol_normal_form(QQ, [ub, uc])

        assert lhs == rhs


def test_degree_one_and_zero():

    x = nf("{6}") + nf("{1/3}")
    assert x.unit.value() == 2

    zero = normal_form(MilnorExpression(QQ, 0, ((3, MilnorSymbol(QQ, ())),)))
    assert zero.value(None) == 3


def test_expression_validation():

    with pytest.raises(InvalidInputError):
        MilnorExpression.of([])

    with pytest.raises(InvalidInputError):
        MilnorExpression.of(
            [
                (1, MilnorSymbol(QQ, (QQ.factor(2),))),
                (1, MilnorSymbol(QQ, (QQ.factor(2), QQ.factor(3)))),
            ]
        )

    with pytest.raises(InvalidInputError):
        MilnorSymbol(QQ, (QQ.factor(2), F3.factor(PolyFraction.make((1, 0), (1,), 3))))


# ---------
# steinberg_check

data = []

data.append({"a": Fraction(2), "field": QQ, "others": [Fraction(3)]})
data.append({"a": Fraction(-5, 7), "field": QQ, "others": [Fraction(11, 4), Fraction(-1)]})
data.append({"a": Fraction(1, 2), "field": QQ, "others": []})
data.append(
    {
        "a": PolyFraction.make((1, 0), (1,), 3),
        "field": F3,
        "others": [PolyFraction.make((1, 1), (1, 0, 1), 3)],
    }
)
data.append(
    {
        "a": PolyFraction.make((2, 0, 1), (1, 1), 3),
        "field": F3,
        "others": [PolyFraction.make((1, 2), (1,), 3)],
    }
)


@pytest.mark.parametrize("data", data)
def test_steinberg(data):

    report = steinberg_check(data["a"], data["field"], data["others"])

    assert report["passed"]
    assert report["a_one_minus_a"]
    assert report["a_minus_a"]


def test_steinberg_refuses_one():

    with pytest.raises(InvalidInputError):
        steinberg_check(Fraction(1), QQ)

    with pytest.raises(InvalidInputError):
        steinberg_check(Fraction(0), QQ)


# ---------
# TruncatedKGroup

data = []

data.append({"field": QQ, "support": "-1,2", "degree": 0, "group": FgAbGroup.free(1)})
data.append({"field": QQ, "support": "-1,2,3", "degree": 1, "group": FgAbGroup.diagonal([2, 0, 0])})
data.append({"field": QQ, "support": "-1,2", "degree": 2, "group": FgAbGroup.cyclic(2)})
data.append({"field": QQ, "support": "-1,2,3", "degree": 2, "group": FgAbGroup.diagonal([2, 2])})
data.append({"field": QQ, "support": "-1,2,3", "degree": 3, "group": FgAbGroup.cyclic(2)})
data.append({"field": F3, "support": "t,t+1", "degree": 1, "group": FgAbGroup.diagonal([2, 0, 0])})
data.append({"field": F3, "support": "t,t+1", "degree": 2, "group": FgAbGroup.diagonal([2, 2])})
data.append({"field": F3, "support": "t,t+1", "degree": 3, "group": FgAbGroup.trivial()})


@pytest.mark.parametrize("data", data)
def test_truncated_k_group(data):

    S = parse_support(data["support"], data["field"])
    K = truncated_k_group(data["field"], S, data["degree"])

    assert K.reduced_group == data["group"]
    assert K.group == data["group"]


def test_truncated_k_group_is_memoized():

    S = parse_support("-1,2,3")

    assert truncated_k_group(QQ, S, 2) is truncated_k_group(QQ, S, 2)

    clear_memo()
    K = truncated_k_group(QQ, S, 2)

    assert K is truncated_k_group(QQ, S, 2)


def test_truncated_k_group_caps():

    S = parse_support("-1,2,3")

    with pytest.raises(CapExceededError):
        TruncatedKGroup(QQ, S, 3, Caps(degree=2))

    # 3^3 tuples against a cap of 10^1
    with pytest.raises(CapExceededError):
        TruncatedKGroup(QQ, S, 3, Caps(matrix_size=1))

    with pytest.raises(InvalidInputError):
        TruncatedKGroup(F3, S, 2)


def test_class_of_symbol():

    S = parse_support("-1,2,3")
    K = truncated_k_group(QQ, S, 2)

    a, b = QQ.factor(2), QQ.factor(3)

    x = KClass.from_symbol(K, [a, b])
    y = KClass.from_symbol(K, [b, a])

    assert not x.is_zero()
    assert (x + y).is_zero()
    assert (2 * x).is_zero()
    assert x.normal_form() == symbol_normal_form(QQ, [a, b])

    with pytest.raises(InvalidInputError):
        K.class_of_symbol([a, QQ.factor(5)])


def test_multiply_unit():

    S = parse_support("-1,2,3")

    K1 = truncated_k_group(QQ, S, 1)
    K2 = truncated_k_group(QQ, S, 2)

    a, b = QQ.factor(2), QQ.factor(-3)

    x = K1.class_of_symbol([b])

    assert multiply_unit(a, x) == K2.class_of_symbol([a, b])
    assert multiply_unit(a, x, K2) == K2.class_of_symbol([a, b])


def test_multiply_unit_function_field():

    S = parse_support("t,t+1@p=3")

    K1 = truncated_k_group(F3, S, 1)
    K2 = truncated_k_group(F3, S, 2)

    a = factor(PolyFraction.make((1, 0), (1,), 3))
    b = factor(PolyFraction.make((2, 2), (1,), 3))

    assert multiply_unit(a, K1.class_of_symbol([b])) == K2.class_of_symbol([a, b])


# ---------
# KGroupCache


def test_cache_round_trip(tmp_path):

    S = parse_support("-1,2,3")
    cache = KGroupCache(tmp_path)

    built = TruncatedKGroup(QQ, S, 2)
    path = cache.store(built)

    assert path.exists()

    loaded = cache.load(QQ, S, 2, built.caps)

    assert loaded is not None
    assert loaded.reduced_group == built.reduced_group

    a, b = QQ.factor(2), QQ.factor(3)
    assert loaded.class_of_symbol([a, b]).coords == built.class_of_symbol([a, b]).coords


def test_cache_ignores_corrupt_files(tmp_path):

    S = parse_support("-1,2")
    cache = KGroupCache(tmp_path)

    assert cache.load(QQ, S, 2, Caps()) is None

    path = cache.path(QQ, S, 2)
    path.write_text("{not json", encoding="utf-8")

    assert cache.load(QQ, S, 2, Caps()) is None

    path.write_text('{"convention": "other"}', encoding="utf-8")

    assert cache.load(QQ, S, 2, Caps()) is None


def test_cached_construction(tmp_path):

    S = parse_support("-1,2,3")
    cache = KGroupCache(tmp_path)

    clear_memo()
    first = truncated_k_group(QQ, S, 2, cache=cache)

    clear_memo()
    second = truncated_k_group(QQ, S, 2, cache=cache)

    assert first is not second
    assert first.reduced_group == second.reduced_group
    assert list(tmp_path.glob("kgroup-*.json"))


def test_memoized_group_reaches_new_cache(tmp_path):

    S = parse_support("-1,2,5")

    clear_memo()
    built = truncated_k_group(QQ, S, 2)

    cache = KGroupCache(tmp_path)

    assert truncated_k_group(QQ, S, 2, cache=cache) is built
    assert cache.path(QQ, S, 2).exists()
    assert cache.load(QQ, S, 2, built.caps).reduced_group == built.reduced_group
