#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : d14c60e8-2b9a-426e-96d0-6e464886f0c8
# date  : 2024-03-02
# -----------

"""
Naive dense integer linear algebra, written separately from the sparse
Smith normal form in `fgab`. Golden values are recorded with it and the
regression tests compare the two.

Matrices are lists of rows.
"""

# ------------
# System Modules - Included with Python

import logging

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def _copy(matrix):
    return [list(row) for row in matrix]


def _minimum(a, t):

    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                best = (i, j)

    return best


def dense_invariant_factors(matrix, cols=None):
    """

    Diagonal of the Smith normal form by repeated gcd reduction.

    # Parameters

    matrix:list(list(int))

    cols:int
        - column count, needed when the matrix has no rows

    # Return

    (diagonal, rank) where diagonal holds the non-zero entries d_1 | d_2 | ...

    """

    a = _copy(matrix)
    m = len(a)
    n = len(a[0]) if m else (cols or 0)

    diagonal = []
    t = 0

    while t < min(m, n):

        pivot = _minimum(a, t)
        if pivot is None:
            break

        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]

        while True:

            done = True

            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]

                if a[i][t]:
                    done = False

            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]

                if a[t][j]:
                    done = False

            if not done:

                # bring the smallest remainder of row t or column t to the corner
                candidates = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                candidates += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]

                _, i, j = min(candidates)

                if i != t:
                    a[t], a[i] = a[i], a[t]

                if j != t:
                    for row in a:
                        row[t], row[j] = row[j], row[t]

                continue

            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break

                if bad is not None:
                    break

            if bad is None:
                break

            a[t] = [x + y for x, y in zip(a[t], a[bad])]

        diagonal.append(abs(a[t][t]))
        t += 1

    return diagonal, len(diagonal)


def _column_echelon(columns, rows):
    """
    Unimodular column reduction. Returns (columns, pivot_rows): the first
    len(pivot_rows) columns are in echelon form, the rest vanish on the
    first `rows` entries.
    """

    cols = [list(c) for c in columns]
    n = len(cols)

    pivot = 0
    pivot_rows = []

    for r in range(rows):

        if pivot == n:
            break

        for c in range(pivot + 1, n):
            while cols[c][r]:
                q = cols[pivot][r] // cols[c][r]
                cols[pivot] = [a - q * b for a, b in zip(cols[pivot], cols[c])]
                cols[pivot], cols[c] = cols[c], cols[pivot]

        if cols[pivot][r]:
            pivot_rows.append(r)
            pivot += 1

    return cols, pivot_rows


def integer_kernel(matrix, cols):
    """
    A basis of {x in Z^cols : matrix·x = 0}, as a list of vectors.
    """

    m = len(matrix)
    augmented = [
        [matrix[r][c] for r in range(m)] + [1 if k == c else 0 for k in range(cols)]
        for c in range(cols)
    ]

    reduced, pivot_rows = _column_echelon(augmented, m)

    return [c[m:] for c in reduced[len(pivot_rows) :]]


def _lattice_basis(vectors, dim):

    reduced, pivot_rows = _column_echelon(vectors, dim)
    return reduced[: len(pivot_rows)], pivot_rows


def _coordinates(basis, pivot_rows, y):

    residual = list(y)
    z = []

    for column, r in zip(basis, pivot_rows):

        q, rem = divmod(residual[r], column[r])
        if rem:
            raise ArithmeticError("Vector is not in the lattice.")

        z.append(q)
        residual = [a - q * b for a, b in zip(residual, column)]

    if any(residual):
        raise ArithmeticError("Vector is not in the lattice.")

    return z


def _columns(matrix, rows, cols):
    return [[matrix[r][c] for r in range(rows)] for c in range(cols)]


def dense_cycles(d_out, target_relations, g):
    """
    Generators of the x in Z^g with d_out·x in the span of the columns of
    `target_relations`.
    """

    m = len(d_out)

    if not m:
        return [[1 if k == c else 0 for k in range(g)] for c in range(g)]

    r = len(target_relations[0]) if target_relations else 0
    stacked = [list(d_out[i]) + list(target_relations[i] if r else []) for i in range(m)]

    cycles = [v[:g] for v in integer_kernel(stacked, g + r)]
    return [v for v in cycles if any(v)]


def dense_subquotient(generators, quotient, g):
    """

    The group span(generators) / span(quotient) for vectors in Z^g; the
    quotient must lie in the span of the generators.

    # Return

    (invariant factors greater than 1, free rank)

    """

    basis, pivot_rows = _lattice_basis(generators, g)
    k = len(basis)

    coordinates = [_coordinates(basis, pivot_rows, y) for y in quotient]

    # k x len(quotient)
    matrix = [[z[i] for z in coordinates] for i in range(k)]
    diagonal, rank = dense_invariant_factors(matrix, len(coordinates))

    return [d for d in diagonal if d > 1], k - rank


def dense_homology(d_out, target_relations, d_in, relations, g):
    """

    Homology at a position with g generators: cycles are the x with
    d_out·x in the span of `target_relations`; they are taken modulo the
    columns of `d_in` and `relations`.

    # Parameters

    d_out:list(list(int))
        - m x g

    target_relations:list(list(int))
        - m x r

    d_in:list(list(int))
        - g x h

    relations:list(list(int))
        - g x s

    g:int

    # Return

    (invariant factors greater than 1, free rank)

    """

    quotient = _columns(d_in, g, len(d_in[0]) if d_in else 0)
    quotient += _columns(relations, g, len(relations[0]) if relations else 0)

    return dense_subquotient(dense_cycles(d_out, target_relations, g), quotient, g)


def _dense(matrix):
    """
    Rows of an IntMatrix as lists, keeping the row count when there are
    no columns.
    """

    return [[matrix[r, c] for c in range(matrix.cols)] for r in range(matrix.rows)]


def complex_cycles(C, i):
    d_out = C.differential(i)
    return dense_cycles(_dense(d_out.matrix), _dense(d_out.target.relations), C.positions[i].ngens)


def complex_boundaries(C, i):
    """
    Columns of d_{i+1} together with the relators of position i.
    """

    P = C.positions[i]
    d_in = C.differential(i + 1)

    g = P.ngens

    return _columns(_dense(d_in.matrix), g, d_in.matrix.cols) + _columns(
        _dense(P.relations), g, P.relations.cols
    )


def complex_homology(C, i):
    """
    Homology of an FgChainComplex at position i from its dense matrices.
    """

    return dense_subquotient(
        complex_cycles(C, i), complex_boundaries(C, i), C.positions[i].ngens
    )
