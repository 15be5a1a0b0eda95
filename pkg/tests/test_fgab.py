#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = 0ee7ff64-37ad-4058-9bf8-3fdf5c879dda
date       = 2024-03-02
-----------
"""

import random

import pytest

from sympy import Matrix

from milnork.milnork.errors import InvalidInputError, InvariantViolationError, NotInImageError
from milnork.milnork.fgab import (
    FgAbGroup,
    FgChainComplex,
    GroupMorphism,
    IntMatrix,
    direct_sum,
    element_in_image,
    exterior_square,
    format_group,
    homology_at,
    image,
    invariant_factors_from_orders,
    kernel,
    localize_factors,
    reduced_image,
    smith_decomposition,
    smith_normal_form,
    tensor,
)
from milnork.milnork.oracle import complex_homology, dense_homology, dense_invariant_factors


def random_dense(rng, rows, cols, bound=6, density=0.6):
    return [
        [rng.randint(-bound, bound) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]


# ---------
# smith_normal_form

data = []

data.append({"dense": [[2, 4], [6, 8]], "cols": None, "diagonal": [2, 4]})
data.append({"dense": [[1, 0, 0], [0, 1, 0], [0, 0, 1]], "cols": None, "diagonal": [1, 1, 1]})
data.append({"dense": [[2, 0], [0, 3]], "cols": None, "diagonal": [1, 6]})
data.append({"dense": [[0, 0], [0, 0]], "cols": None, "diagonal": []})
data.append({"dense": [[4, 6, 10]], "cols": None, "diagonal": [2]})
data.append({"dense": [], "cols": 0, "diagonal": []})
data.append({"dense": [], "cols": 3, "diagonal": []})
data.append({"dense": [[], [], []], "cols": None, "diagonal": []})


@pytest.mark.parametrize("data", data)
def test_smith_normal_form(data):

    M = IntMatrix.from_dense(data["dense"], data["cols"])
    U, D, V = smith_normal_form(M)

    assert U @ M @ V == D
    assert list(smith_decomposition(M).diagonal) == data["diagonal"]


# ---------
# smith_normal_form - random matrices against the dense oracle

data = []

for seed in range(12):
    rng = random.Random(seed)
    data.append(random_dense(rng, rng.randint(1, 7), rng.randint(1, 7)))


@pytest.mark.parametrize("data", data)
def test_smith_random(data):

    M = IntMatrix.from_dense(data)
    sf = smith_decomposition(M, track_inverse=True)

    assert sf.U @ M @ sf.V == sf.D

    assert abs(Matrix(sf.U.to_dense()).det()) == 1
    assert abs(Matrix(sf.V.to_dense()).det()) == 1

    diagonal = list(sf.diagonal)

    assert all(d > 0 for d in diagonal)
    assert all(b % a == 0 for a, b in zip(diagonal, diagonal[1:]))

    expected, rank = dense_invariant_factors(data)

    assert diagonal == expected
    assert sf.rank == rank


def test_smith_is_deterministic():

    rng = random.Random(11)
    dense = random_dense(rng, 6, 5)

    first = smith_normal_form(IntMatrix.from_dense(dense))
    second = smith_normal_form(IntMatrix.from_dense(dense))

    assert all(a == b for a, b in zip(first, second))


def test_smith_kernel_and_solve():

    M = IntMatrix.from_dense([[1, 2, 3], [2, 4, 6]])
    sf = smith_decomposition(M)

    for column in sf.kernel_columns():
        assert not any(M.apply(column))

    z = sf.solve([2, 4])
    assert M.apply(z) == [2, 4]

    assert sf.solve([1, 0]) is None


# ---------
# invariant_factors_from_orders

data = []

data.append({"orders": [2, 3, 0], "result": ((6,), 1)})
data.append({"orders": [4, 2, 6], "result": ((2, 2, 12), 0)})
data.append({"orders": [1, 1], "result": ((), 0)})
data.append({"orders": [0, 0, 0], "result": ((), 3)})
data.append({"orders": [], "result": ((), 0)})


@pytest.mark.parametrize("data", data)
def test_invariant_factors_from_orders(data):
    assert invariant_factors_from_orders(data["orders"]) == data["result"]


# ---------
# localize_factors and format_group

data = []

data.append({"factors": (2, 6, 12), "m": 2, "result": (3, 3)})
data.append({"factors": (2, 4), "m": 2, "result": ()})
data.append({"factors": (2, 6), "m": 0, "result": (2, 6)})
data.append({"factors": (6, 30), "m": 6, "result": (5,)})


@pytest.mark.parametrize("data", data)
def test_localize_factors(data):
    assert localize_factors(data["factors"], data["m"]) == data["result"]


data = []

data.append({"factors": (2,), "rank": 1, "result": "Z/2 + Z"})
data.append({"factors": (), "rank": 0, "result": "0"})
data.append({"factors": (), "rank": 3, "result": "Z^3"})
data.append({"factors": (2, 4), "rank": 0, "result": "Z/2 + Z/4"})


@pytest.mark.parametrize("data", data)
def test_format_group(data):
    assert format_group(data["factors"], data["rank"]) == data["result"]


# ---------
# FgAbGroup


def test_group_structure():

    # Z^2 / <(2, 2), (0, 4)>
    G = FgAbGroup(2, IntMatrix.from_columns(2, [[2, 2], [0, 4]]))

    assert G.invariant_factors == (2, 4)
    assert G.free_rank == 0
    assert G.order == 8
    assert str(G) == "Z/2 + Z/4"

    assert G.is_zero([2, 2])
    assert G.is_zero([0, 4])
    assert not G.is_zero([1, 0])
    assert G.reduce([3, 1]) == G.reduce([1, -1])


def test_group_equality_is_isomorphism():

    assert FgAbGroup.diagonal([2, 3]) == FgAbGroup.cyclic(6)
    assert FgAbGroup.diagonal([2, 2]) != FgAbGroup.cyclic(4)
    assert FgAbGroup.diagonal([1, 1, 0]) == FgAbGroup.free(1)
    assert FgAbGroup.trivial().is_trivial()
    assert FgAbGroup.free(2).order is None


def test_group_to_json():

    G = direct_sum(FgAbGroup.cyclic(4), FgAbGroup.free(2), FgAbGroup.cyclic(6))

    assert G.to_json() == {"invariant_factors": [2, 12], "free_rank": 2}


def test_bad_relation_shape():

    with pytest.raises(InvalidInputError):
        FgAbGroup(3, IntMatrix.zeros(2, 1))


# ---------
# GroupMorphism


def test_morphism_rejects_bad_relators():

    with pytest.raises(InvalidInputError):
        GroupMorphism(FgAbGroup.cyclic(2), FgAbGroup.cyclic(3), IntMatrix.from_dense([[1]]))

    f = GroupMorphism(FgAbGroup.cyclic(2), FgAbGroup.cyclic(4), IntMatrix.from_dense([[2]]))
    assert f([1]) == [2]


def test_morphism_shape():

    with pytest.raises(InvalidInputError):
        GroupMorphism(FgAbGroup.free(2), FgAbGroup.free(1), IntMatrix.identity(2))


data = []

# Z -> Z/6, 1 -> 1
data.append(
    {
        "source": FgAbGroup.free(1),
        "target": FgAbGroup.cyclic(6),
        "matrix": [[1]],
        "kernel": FgAbGroup.free(1),
        "image": FgAbGroup.cyclic(6),
    }
)

# Z/4 -> Z/4, 1 -> 2
data.append(
    {
        "source": FgAbGroup.cyclic(4),
        "target": FgAbGroup.cyclic(4),
        "matrix": [[2]],
        "kernel": FgAbGroup.cyclic(2),
        "image": FgAbGroup.cyclic(2),
    }
)

# Z^2 -> Z, (a, b) -> 2a + 4b
data.append(
    {
        "source": FgAbGroup.free(2),
        "target": FgAbGroup.free(1),
        "matrix": [[2, 4]],
        "kernel": FgAbGroup.free(1),
        "image": FgAbGroup.free(1),
    }
)

# Z/2 + Z/3 -> Z/6, the isomorphism
data.append(
    {
        "source": FgAbGroup.diagonal([2, 3]),
        "target": FgAbGroup.cyclic(6),
        "matrix": [[3, 2]],
        "kernel": FgAbGroup.trivial(),
        "image": FgAbGroup.cyclic(6),
    }
)


@pytest.mark.parametrize("data", data)
def test_kernel_image(data):

    f = GroupMorphism(data["source"], data["target"], IntMatrix.from_dense(data["matrix"]))

    K = kernel(f)
    I = image(f)

    assert K.group == data["kernel"]
    assert I.group == data["image"]

    # the kernel maps to zero
    composite = f.compose(K.inclusion)
    assert composite.is_zero()


@pytest.mark.parametrize("data", data)
def test_reduced_image(data):

    f = GroupMorphism(data["source"], data["target"], IntMatrix.from_dense(data["matrix"]))
    R = reduced_image(f)

    assert R.group == data["image"]

    # every lift maps onto its diagonal generator
    for k in range(R.group.ngens):
        assert R.reduce_source(R.lift(k)) == R.group.reduce(R.group.generator(k))


def test_reduced_image_refuses_outside():

    f = GroupMorphism(FgAbGroup.free(1), FgAbGroup.free(1), IntMatrix.from_dense([[2]]))
    R = reduced_image(f)

    assert [abs(v) for v in R.reduce([4])] == [2]

    with pytest.raises(NotInImageError):
        R.reduce([1])


def test_element_in_image():

    f = GroupMorphism(FgAbGroup.free(1), FgAbGroup.free(1), IntMatrix.from_dense([[2]]))

    found, x = element_in_image(f, [4])
    assert found
    assert x == [2]

    found, x = element_in_image(f, [3])
    assert not found
    assert x is None

    # in Z/3 every element is a multiple of 2
    g = GroupMorphism(FgAbGroup.cyclic(3), FgAbGroup.cyclic(3), IntMatrix.from_dense([[2]]))
    found, x = element_in_image(g, [1])
    assert found
    assert g.target.is_zero([a - b for a, b in zip(g(x), [1])])


# ---------
# tensor and exterior_square

data = []

data.append({"A": FgAbGroup.cyclic(4), "B": FgAbGroup.cyclic(6), "result": FgAbGroup.cyclic(2)})
data.append({"A": FgAbGroup.free(1), "B": FgAbGroup.cyclic(3), "result": FgAbGroup.cyclic(3)})
data.append({"A": FgAbGroup.free(2), "B": FgAbGroup.free(3), "result": FgAbGroup.free(6)})
data.append({"A": FgAbGroup.cyclic(5), "B": FgAbGroup.cyclic(7), "result": FgAbGroup.trivial()})
data.append(
    {
        "A": FgAbGroup.diagonal([2, 0]),
        "B": FgAbGroup.diagonal([4, 0]),
        "result": FgAbGroup.diagonal([2, 2, 4, 0]),
    }
)


@pytest.mark.parametrize("data", data)
def test_tensor(data):

    T = tensor(data["A"], data["B"])

    assert T.group == data["result"]
    assert T.pair([1] + [0] * (data["A"].ngens - 1), [1] + [0] * (data["B"].ngens - 1))[0] == 1


data = []

data.append({"A": FgAbGroup.free(3), "result": FgAbGroup.free(3)})
data.append({"A": FgAbGroup.diagonal([2, 0]), "result": FgAbGroup.cyclic(2)})
data.append({"A": FgAbGroup.diagonal([4, 6]), "result": FgAbGroup.cyclic(2)})
data.append({"A": FgAbGroup.cyclic(2), "result": FgAbGroup.trivial()})
data.append({"A": FgAbGroup.free(1), "result": FgAbGroup.trivial()})


@pytest.mark.parametrize("data", data)
def test_exterior_square(data):
    assert exterior_square(data["A"]).group == data["result"]


def test_exterior_square_is_alternating():

    E = exterior_square(FgAbGroup.free(3))

    x = [1, 2, 3]
    y = [0, -1, 5]

    assert not any(E.wedge(x, x))
    assert E.wedge(x, y) == [-v for v in E.wedge(y, x)]


# ---------
# FgChainComplex


def test_homology_of_multiplication():

    Z0 = FgAbGroup.free(1)
    Z1 = FgAbGroup.free(1)

    C = FgChainComplex([Z0, Z1], {1: GroupMorphism(Z1, Z0, IntMatrix.from_dense([[2]]))})

    assert homology_at(C, 0) == FgAbGroup.cyclic(2)
    assert homology_at(C, 1).is_trivial()


def test_complex_rejects_nonzero_composite():

    P = [FgAbGroup.free(1) for _ in range(3)]
    one = IntMatrix.identity(1)

    with pytest.raises(InvariantViolationError):
        FgChainComplex(
            P,
            {
                1: GroupMorphism(P[1], P[0], one),
                2: GroupMorphism(P[2], P[1], one),
            },
        )


def test_complex_with_torsion_positions():

    # Z/4 --2--> Z/4 --2--> Z/4
    P = [FgAbGroup.cyclic(4) for _ in range(3)]
    two = IntMatrix.from_dense([[2]])

    C = FgChainComplex(
        P,
        {
            1: GroupMorphism(P[1], P[0], two),
            2: GroupMorphism(P[2], P[1], two),
        },
    )

    assert homology_at(C, 1).is_trivial()
    assert homology_at(C, 0) == FgAbGroup.cyclic(2)
    assert homology_at(C, 2) == FgAbGroup.cyclic(2)


data = []

for seed in range(8):
    rng = random.Random(100 + seed)
    data.append((rng.randint(1, 5), rng.randint(2, 6), seed))


@pytest.mark.parametrize("data", data)
def test_homology_matches_oracle(data):

    rows, cols, seed = data
    rng = random.Random(seed)

    # d_1 random, d_2 a multiple of a kernel basis of d_1 so that d_1 d_2 = 0
    d1 = IntMatrix.from_dense(random_dense(rng, rows, cols, bound=4))
    basis = smith_decomposition(d1).kernel_columns()

    columns = []
    for column in basis:

        k = rng.randint(1, 3)
        columns.append({r: k * v for r, v in column.items()})

    d2 = IntMatrix.from_columns(cols, columns)

    assert all(not any(d1.apply(column)) for column in columns)

    P0 = FgAbGroup.free(rows)
    P1 = FgAbGroup.free(cols)
    P2 = FgAbGroup.free(len(columns))

    C = FgChainComplex(
        [P0, P1, P2],
        {1: GroupMorphism(P1, P0, d1), 2: GroupMorphism(P2, P1, d2)},
    )

    for i in range(3):

        H = homology_at(C, i)
        factors, free_rank = complex_homology(C, i)

        assert list(H.invariant_factors) == list(factors)
        assert H.free_rank == free_rank


# ---------
# dense_homology

data = []

# Z --2--> Z --0--> Z
data.append({"d_out": [[0]], "target": [], "d_in": [[2]], "relations": [], "g": 1, "result": ([2], 0)})

# Z/4 --2--> Z/4 --0--> Z
data.append({"d_out": [[0]], "target": [], "d_in": [[2]], "relations": [[4]], "g": 1, "result": ([2], 0)})

# Z^2 --(1, 1)--> Z
data.append({"d_out": [[1, 1]], "target": [], "d_in": [], "relations": [], "g": 2, "result": ([], 1)})

# Z --2--> Z/4, the kernel is 2Z
data.append({"d_out": [[2]], "target": [[4]], "d_in": [], "relations": [], "g": 1, "result": ([], 1)})


@pytest.mark.parametrize("data", data)
def test_dense_homology(data):

    factors, free_rank = dense_homology(
        data["d_out"], data["target"], data["d_in"], data["relations"], data["g"]
    )

    assert (list(factors), free_rank) == data["result"]
