#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = e6a10705-3202-40fb-946e-8363b129f318
date       = 2024-03-02
-----------
"""

import random

from fractions import Fraction
from math import factorial

import pytest

from milnork.milnork.barcycles import (
    BarChain,
    QMatrix,
    TorusElement,
    a_gen,
    bar_boundary,
    block_form_check,
    c_cycle,
    chi_prime_data,
    diag_gen,
    embed_chain,
    exterior_class,
    kappa_chain,
    kappa_torsion_report,
    milnor_cycle,
    random_chain,
    random_diagonal_family,
    random_torus_element,
    signature,
    splitting_chain,
    torus_a_gen,
    torus_diag_gen,
    wedge,
)
from milnork.milnork.bncomplex import BnComplexSpec, build, cycle_basis
from milnork.milnork.errors import InvalidInputError
from milnork.milnork.fields import QQ, PolyFraction
from milnork.milnork.parsing import parse_support

# ---------
# signature

data = []

data.append({"order": (), "sign": 1})
data.append({"order": (0,), "sign": 1})
data.append({"order": (1, 0), "sign": -1})
data.append({"order": (1, 2, 0), "sign": 1})
data.append({"order": (0, 2, 1), "sign": -1})


@pytest.mark.parametrize("data", data)
def test_signature(data):
    assert signature(data["order"]) == data["sign"]


# ---------
# QMatrix


def test_matrix_basics():

    g = QMatrix.diag([2, Fraction(1, 3)])

    assert g.is_diagonal
    assert g.det == Fraction(2, 3)
    assert (g * g).diagonal() == [4, Fraction(1, 9)]

    h = QMatrix(((1, 1), (0, 1)))

    assert not h.is_diagonal
    assert h.det == 1
    assert (h * h).rows == ((1, 2), (0, 1))

    assert g.embed(1).diagonal() == [2, Fraction(1, 3), 1]


def test_matrix_refusals():

    with pytest.raises(InvalidInputError):
        QMatrix(((1, 2), (2, 4)))

    with pytest.raises(InvalidInputError):
        QMatrix(((1, 2),))

    with pytest.raises(InvalidInputError):
        QMatrix.diag([1, 2]) * QMatrix.diag([1, 2, 3])


def test_function_field_matrix():

    t = PolyFraction.make((1, 0), (1,), 3)
    g = QMatrix.diag([t, t])

    assert g.det == t * t
    assert g.p == 3


data = []

data.append({"i": 1, "n": 3, "a": 5, "diagonal": [5, 1, 1]})
data.append({"i": 2, "n": 3, "a": 5, "diagonal": [5, Fraction(1, 5), 1]})
data.append({"i": 3, "n": 3, "a": 2, "diagonal": [2, 2, Fraction(1, 4)]})


@pytest.mark.parametrize("data", data)
def test_a_gen(data):

    g = a_gen(data["i"], data["n"], data["a"])

    assert g.diagonal() == data["diagonal"]

    # every A_{i,n}(a) with i > 1 has determinant 1
    if data["i"] > 1:
        assert g.det == 1


def test_generator_refusals():

    with pytest.raises(InvalidInputError):
        a_gen(4, 3, 2)

    with pytest.raises(InvalidInputError):
        diag_gen(1, 2, 0)


def test_torus_elements():

    S = parse_support("-1,2,3")
    u = S.basis[1]

    g = torus_a_gen(2, 3, u)

    assert g.rank == 3
    assert g.coordinates[1] == u.inverse()
    assert (g * g).coordinates[0] == u**2

    h = torus_diag_gen(3, 3, u)

    assert h.coordinates[2] == u
    assert h.coordinates[0].is_one()

    with pytest.raises(InvalidInputError):
        torus_diag_gen(0, 3, u)

    with pytest.raises(InvalidInputError):
        TorusElement(())


# ---------
# Chains and the bar differential


def test_chain_arithmetic():

    g = QMatrix.diag([2, 1])
    h = QMatrix.diag([3, 1])

    x = BarChain.single(g, h)
    y = BarChain.single(h, g, coefficient=2)

    assert (x - x).is_zero()
    assert len(x + y) == 2
    assert (x.scale(Fraction(1, 2))).denominator() == 2
    assert x.is_integral()

    with pytest.raises(InvalidInputError):
        x + BarChain.single(g)

    with pytest.raises(InvalidInputError):
        BarChain(2, {(g,): 1})


def test_boundary_of_degree_one():

    g = QMatrix.diag([2])

    # ∂[g] = [] - [] = 0
    assert bar_boundary(BarChain.single(g)).is_zero()

    with pytest.raises(InvalidInputError):
        bar_boundary(BarChain.zero(0))


@pytest.mark.parametrize("seed", range(6))
def test_boundary_squares_to_zero(seed):

    rng = random.Random(seed)
    chain = random_chain(rng, rng.randint(2, 4), rng.randint(1, 3), terms=3)

    assert bar_boundary(bar_boundary(chain)).is_zero()


@pytest.mark.parametrize("seed", range(6))
def test_c_cycle_is_a_cycle(seed):

    rng = random.Random(seed)
    family = random_diagonal_family(rng, rng.randint(1, 4), rng.randint(1, 3))

    assert bar_boundary(c_cycle(*family)).is_zero()


def test_c_cycle_needs_commuting_elements():

    g = QMatrix(((1, 1), (0, 1)))
    h = QMatrix(((1, 0), (1, 1)))

    with pytest.raises(InvalidInputError):
        c_cycle(g, h)

    with pytest.raises(InvalidInputError):
        c_cycle()


def test_milnor_cycle():

    chain = milnor_cycle(2, 3, 5)

    assert chain.degree == 3
    assert len(chain) == factorial(3)
    assert bar_boundary(chain).is_zero()

    split = splitting_chain(2, 3, 5)

    assert split == chain.scale(Fraction(1, 2))
    assert split.denominator() == 2


def test_embed_chain():

    chain = embed_chain(milnor_cycle(2, 3), 2)

    assert chain.ambient == ("GL", 4)
    assert bar_boundary(chain).is_zero()


# ---------
# Exterior classes


def test_wedge_is_alternating():

    S = parse_support("-1,2,3,5")
    rng = random.Random(2)

    g = random_torus_element(rng, S, 2)
    h = random_torus_element(rng, S, 2)

    assert wedge(g, g).is_zero()
    assert wedge(g, h) == wedge(h, g).scale(-1)


@pytest.mark.parametrize("seed", range(5))
def test_exterior_class_of_c_cycle(seed):

    S = parse_support("-1,2,3,5")
    rng = random.Random(seed)

    n = rng.randint(1, 3)
    family = [random_torus_element(rng, S, 2) for _ in range(n)]

    assert exterior_class(c_cycle(*family)) == wedge(*family).scale(factorial(n))


def test_exterior_class_kills_boundaries():

    g, h, k = (QMatrix.diag([a, b]) for a, b in ((2, 3), (5, 7), (Fraction(1, 2), 3)))
    chain = BarChain.single(g, h, k)

    assert exterior_class(bar_boundary(chain)).is_zero()


def test_exterior_class_refuses_non_diagonal():

    g = QMatrix(((1, 1), (0, 1)))

    with pytest.raises(InvalidInputError):
        exterior_class(BarChain.single(g))


# ---------
# kappa chains

data = []

data.append({"n": 3, "terms": [(2, 3, [5])]})
data.append({"n": 3, "terms": [(1, Fraction(1, 2), 3, [-1]), (-2, 5, 7, [Fraction(2, 3)])]})
data.append({"n": 4, "terms": [(2, 3, [5, 7])]})
data.append({"n": 4, "terms": [(1, -1, 2, [3, Fraction(1, 5)])]})
data.append({"n": 5, "terms": [(2, 3, [5, 7, 11])]})


@pytest.mark.parametrize("data", data)
def test_kappa_chain(data):

    n = data["n"]
    chain = kappa_chain(n, data["terms"])

    assert chain.degree == n
    assert bar_boundary(chain).is_zero()
    assert block_form_check(chain, n - 1)
    assert factorial(n - 2) % chain.denominator() == 0


def test_kappa_chain_function_field():

    t = PolyFraction.make((1, 0), (1,), 3)
    s = PolyFraction.make((1, 1), (1,), 3)

    chain = kappa_chain(3, [(t, s, [t * s])])

    assert bar_boundary(chain).is_zero()
    assert block_form_check(chain, 2)


def test_kappa_chain_refusals():

    with pytest.raises(InvalidInputError):
        kappa_chain(2, [(2, 3, [])])

    with pytest.raises(InvalidInputError):
        kappa_chain(4, [(2, 3, [5])])

    with pytest.raises(InvalidInputError):
        kappa_chain(3, [(0, 3, [5])])


def test_kappa_torsion_report():

    report = kappa_torsion_report(3, [(2, 3, [5])])

    assert report["n"] == 3
    assert report["asserted"] is False
    assert isinstance(report["exterior_class_zero"], bool)


# ---------
# chi'

data = []

data.append(("-1,2", 3))
data.append(("-1,2", 4))
data.append(("-1,2,3", 3))
data.append(pytest.param(("-1,2,3", 4), marks=pytest.mark.slow))


@pytest.mark.parametrize("data", data)
def test_chi_prime_on_kernel(data):

    support, n = data

    S = parse_support(support)
    C = build(BnComplexSpec.create(QQ, n, S))

    for x in cycle_basis(C, 2):

        chi = chi_prime_data(C, x)

        assert chi.certificate["passed"]
        assert chi.certificate["matches_delta2"]
        assert chi.to_json()["n"] == n


def test_chi_prime_refuses_non_cycles():

    S = parse_support("-1,2,3")
    C = build(BnComplexSpec.create(QQ, 3, S))

    x = None
    for j in range(C.positions[2].ngens):

        e = C.positions[2].generator(j)
        if any(C.delta(2, e)):
            x = e
            break

    assert x is not None

    with pytest.raises(InvalidInputError):
        chi_prime_data(C, x)
