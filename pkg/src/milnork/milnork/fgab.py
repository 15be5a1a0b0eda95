#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : e07df9a7-a5b3-4a5b-925a-c38bb2a8f210
# date  : 2024-03-02
# -----------

"""
Exact arithmetic over the integers for finitely generated abelian groups,
morphisms between them, chain complexes and their homology. Everything is
driven by a deterministic sparse Smith normal form.

A finitely generated abelian group is given by a presentation: `ngens`
generators and an integer matrix whose columns are the relators. Group
elements are integer vectors on the generators (lists, or dicts for very
sparse vectors).

"""

# ------------
# System Modules - Included with Python

import logging

from collections import namedtuple
from functools import cached_property
from itertools import combinations
from math import gcd

# ------------
# 3rd Party - From pip

from sympy import factorint, primefactors

# ------------
# Custom Modules

from .errors import (
    InvalidInputError,
    InvariantViolationError,
    NotInImageError,
)

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

# Switch the Smith normal form work matrix to dense storage once the
# active block is more than this fraction non-zero.
DENSE_FILL_RATIO = 0.5

# ...but only when the active block has at least this many cells.
DENSE_MIN_AREA = 64


def as_dense_vector(x, size):
    """
    Return `x` as a list of `size` integers. `x` may be a list, tuple or a
    dict keyed by index.
    """

    if isinstance(x, dict):
        v = [0] * size
        for k, value in x.items():
            v[k] += value
        return v

    v = [int(value) for value in x]

    if len(v) != size:
        raise InvalidInputError(
            f"Vector has length {len(v)}, expected {size}."
        )

    return v


class IntMatrix:
    """
    An immutable integer matrix with sparse storage keyed by (row, col).
    Explicit zeros are never stored.

    # Attributes

    rows:int
        - number of rows

    cols:int
        - number of columns

    """

    def __init__(self, rows, cols, entries=None):
        """

        # Parameters

        rows:int
        cols:int
            - The shape, both non-negative.

        entries:dict((int, int) -> int)
            - The non-zero entries. Zero values are dropped.
            - Default - None (zero matrix)

        """

        if rows < 0 or cols < 0:
            raise InvalidInputError(f"Invalid matrix shape {rows}x{cols}.")

        self.rows = rows
        self.cols = cols

        self._entries = {}

        if entries:
            for (r, c), v in entries.items():

                if not (0 <= r < rows and 0 <= c < cols):
                    raise InvalidInputError(
                        f"Entry ({r}, {c}) outside of a {rows}x{cols} matrix."
                    )

                v = int(v)
                if v:
                    self._entries[(r, c)] = v

    # ------
    # Constructors

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    @classmethod
    def identity(cls, size):
        return cls(size, size, {(i, i): 1 for i in range(size)})

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        return cls(rows, cols, {(i, i): v for i, v in enumerate(values)})

    @classmethod
    def from_dense(cls, dense, cols=None):
        """
        Build from a list of rows. `cols` is only needed when there are no
        rows.
        """

        rows = len(dense)
        if rows:
            cols = len(dense[0])

        cols = cols or 0

        entries = {}
        for r, row in enumerate(dense):

            if len(row) != cols:
                raise InvalidInputError("Ragged rows in dense matrix.")

            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v

        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, rows, columns):
        """
        Build from a sequence of columns. Each column is a dict
        (row -> value) or a dense sequence of length `rows`.
        """

        entries = {}
        for c, column in enumerate(columns):

            items = (
                column.items() if isinstance(column, dict) else enumerate(column)
            )

            for r, v in items:
                if v:
                    entries[(r, c)] = entries.get((r, c), 0) + v

        return cls(rows, len(columns), entries)

    # ------
    # Views

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def nnz(self):
        return len(self._entries)

    def __getitem__(self, key):
        return self._entries.get(key, 0)

    def items(self):
        """
        The non-zero entries sorted by (row, col).
        """

        return sorted(self._entries.items())

    @cached_property
    def _columns(self):
        columns = [{} for _ in range(self.cols)]
        for (r, c), v in self._entries.items():
            columns[c][r] = v

        return columns

    @cached_property
    def _rows(self):
        rows = [{} for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            rows[r][c] = v

        return rows

    def column(self, c):
        """
        Column `c` as a dict (row -> value). Do not mutate it.
        """
        return self._columns[c]

    def row(self, r):
        return self._rows[r]

    def dense_column(self, c):
        v = [0] * self.rows
        for r, value in self._columns[c].items():
            v[r] = value

        return v

    def to_dense(self):
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self._entries.items():
            dense[r][c] = v

        return dense

    def is_zero(self):
        return not self._entries

    # ------
    # Arithmetic

    def transpose(self):
        return IntMatrix(
            self.cols, self.rows, {(c, r): v for (r, c), v in self._entries.items()}
        )

    def apply(self, x):
        """
        Return M·x as a dense list. `x` is a dense sequence or a dict.
        """

        result = [0] * self.rows

        items = x.items() if isinstance(x, dict) else enumerate(x)

        for c, xv in items:
            if xv:
                for r, v in self._columns[c].items():
                    result[r] += v * xv

        return result

    def __matmul__(self, other):

        if self.cols != other.rows:
            raise InvalidInputError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}."
            )

        entries = {}
        for c in range(other.cols):
            for k, ov in other.column(c).items():
                for r, v in self._columns[k].items():
                    entries[(r, c)] = entries.get((r, c), 0) + v * ov

        return IntMatrix(self.rows, other.cols, entries)

    def __add__(self, other):

        if self.shape != other.shape:
            raise InvalidInputError("Shape mismatch in matrix addition.")

        entries = dict(self._entries)
        for k, v in other._entries.items():
            entries[k] = entries.get(k, 0) + v

        return IntMatrix(self.rows, self.cols, entries)

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other):
        return self + (-other)

    def hstack(self, *others):
        """
        Concatenate matrices with the same number of rows side by side.
        """

        entries = dict(self._entries)
        offset = self.cols

        for other in others:

            if other.rows != self.rows:
                raise InvalidInputError("Row mismatch in hstack.")

            for (r, c), v in other._entries.items():
                entries[(r, c + offset)] = v

            offset += other.cols

        return IntMatrix(self.rows, offset, entries)

    def select_rows(self, indices):
        position = {r: i for i, r in enumerate(indices)}
        return IntMatrix(
            len(indices),
            self.cols,
            {
                (position[r], c): v
                for (r, c), v in self._entries.items()
                if r in position
            },
        )

    def select_columns(self, indices):
        return IntMatrix.from_columns(self.rows, [self._columns[c] for c in indices])

    # ------
    # Dunder

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented

        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._entries.items())))

    def __repr__(self):
        return f"IntMatrix({self.rows}, {self.cols}, nnz={self.nnz})"

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols, "dense": self.to_dense()}

    def items_json(self):
        """
        The non-zero entries as [row, col, value] triples, sorted.
        """

        return [[r, c, v] for (r, c), v in self.items()]


# -------------
# Smith normal form


class _SparseWork:
    """
    Mutable work matrix for the Smith normal form, stored both by rows and
    by columns so either can be walked cheaply.
    """

    def __init__(self, matrix):

        self.m = matrix.rows
        self.n = matrix.cols

        self.rows = [dict() for _ in range(self.m)]
        self.cols = [dict() for _ in range(self.n)]

        for (r, c), v in matrix.items():
            self.rows[r][c] = v
            self.cols[c][r] = v

    def get(self, i, j):
        return self.rows[i].get(j, 0)

    def _set(self, i, j, v):

        if v:
            self.rows[i][j] = v
            self.cols[j][i] = v

        else:
            self.rows[i].pop(j, None)
            self.cols[j].pop(i, None)

    def row_items(self, i):
        return sorted(self.rows[i].items())

    def col_items(self, j):
        return sorted(self.cols[j].items())

    def add_row(self, target, source, q):
        for j, v in list(self.rows[source].items()):
            self._set(target, j, self.get(target, j) + q * v)

    def add_col(self, target, source, q):
        for i, v in list(self.cols[source].items()):
            self._set(i, target, self.get(i, target) + q * v)

    def swap_rows(self, i, k):

        if i == k:
            return

        ri, rk = self.rows[i], self.rows[k]
        self.rows[i], self.rows[k] = rk, ri

        for j in set(ri) | set(rk):
            column = self.cols[j]
            vi = column.pop(i, None)
            vk = column.pop(k, None)

            if vi is not None:
                column[k] = vi

            if vk is not None:
                column[i] = vk

    def swap_cols(self, j, l):

        if j == l:
            return

        cj, cl = self.cols[j], self.cols[l]
        self.cols[j], self.cols[l] = cl, cj

        for i in set(cj) | set(cl):
            row = self.rows[i]
            vj = row.pop(j, None)
            vl = row.pop(l, None)

            if vj is not None:
                row[l] = vj

            if vl is not None:
                row[j] = vl

    def negate_row(self, i):
        for j in list(self.rows[i]):
            self._set(i, j, -self.rows[i][j])

    def active(self, t):
        for i in range(t, self.m):
            for j, v in self.rows[i].items():
                if j >= t:
                    yield i, j, v

    def nnz_active(self, t):
        return sum(1 for _ in self.active(t))

    def to_dense(self):
        return _DenseWork(self.m, self.n, [
            [self.rows[i].get(j, 0) for j in range(self.n)] for i in range(self.m)
        ])


class _DenseWork:
    """
    Dense counterpart of `_SparseWork` with the same interface.
    """

    def __init__(self, m, n, data):
        self.m = m
        self.n = n
        self.data = data

    def get(self, i, j):
        return self.data[i][j]

    def row_items(self, i):
        return [(j, v) for j, v in enumerate(self.data[i]) if v]

    def col_items(self, j):
        return [(i, row[j]) for i, row in enumerate(self.data) if row[j]]

    def add_row(self, target, source, q):
        t = self.data[target]
        for j, v in enumerate(self.data[source]):
            if v:
                t[j] += q * v

    def add_col(self, target, source, q):
        for row in self.data:
            if row[source]:
                row[target] += q * row[source]

    def swap_rows(self, i, k):
        self.data[i], self.data[k] = self.data[k], self.data[i]

    def swap_cols(self, j, l):
        for row in self.data:
            row[j], row[l] = row[l], row[j]

    def negate_row(self, i):
        self.data[i] = [-v for v in self.data[i]]

    def active(self, t):
        for i in range(t, self.m):
            row = self.data[i]
            for j in range(t, self.n):
                if row[j]:
                    yield i, j, row[j]


class _Transform:
    """
    Accumulates the unimodular transform on one side of the reduction.

    For the row side it keeps U by rows and, optionally, U^-1 by columns.
    For the column side it keeps V by columns. The same three operations
    (add, swap, negate) drive both.
    """

    def __init__(self, size, track_inverse=False):

        self.size = size
        self.lines = [{i: 1} for i in range(size)]
        self.inverse = [{i: 1} for i in range(size)] if track_inverse else None

    @staticmethod
    def _axpy(target, source, q):
        for k, v in source.items():
            value = target.get(k, 0) + q * v
            if value:
                target[k] = value

            else:
                target.pop(k, None)

    def add(self, target, source, q):
        # line_target += q * line_source
        self._axpy(self.lines[target], self.lines[source], q)

        if self.inverse is not None:
            # inverse: column_source -= q * column_target
            self._axpy(self.inverse[source], self.inverse[target], -q)

    def swap(self, i, k):
        self.lines[i], self.lines[k] = self.lines[k], self.lines[i]

        if self.inverse is not None:
            self.inverse[i], self.inverse[k] = self.inverse[k], self.inverse[i]

    def negate(self, i):
        self.lines[i] = {k: -v for k, v in self.lines[i].items()}

        if self.inverse is not None:
            self.inverse[i] = {k: -v for k, v in self.inverse[i].items()}

    def as_rows(self):
        return IntMatrix(
            self.size,
            self.size,
            {(i, k): v for i, line in enumerate(self.lines) for k, v in line.items()},
        )

    def as_columns(self):
        return IntMatrix(
            self.size,
            self.size,
            {(k, i): v for i, line in enumerate(self.lines) for k, v in line.items()},
        )

    def inverse_as_columns(self):
        return IntMatrix(
            self.size,
            self.size,
            {(k, i): v for i, line in enumerate(self.inverse) for k, v in line.items()},
        )


class SmithForm:
    """
    The result of reducing a matrix M: unimodular U and V with U·M·V = D,
    D diagonal with d_1 | d_2 | ... | d_rank, all positive.

    Besides the matrices it answers the integer linear algebra questions
    the rest of the library asks: solving M·z = y, the kernel lattice and
    coordinates in the column lattice.
    """

    def __init__(self, matrix, U, diagonal, V_columns, U_inverse=None):

        self.matrix = matrix
        self._U = U
        self.diagonal = diagonal
        self.rank = len(diagonal)
        self._V_columns = V_columns
        self._U_inverse = U_inverse

    @cached_property
    def U(self):
        return self._U.as_rows()

    @cached_property
    def V(self):
        return self._V_columns.as_columns()

    @cached_property
    def D(self):
        return IntMatrix.diagonal(self.diagonal, self.matrix.rows, self.matrix.cols)

    @cached_property
    def U_inverse(self):

        if self._U_inverse is None:
            raise InvalidInputError("The inverse transform was not tracked.")

        return self._U_inverse.inverse_as_columns()

    def transform(self, y):
        """
        Return U·y as a dense list.
        """

        y = as_dense_vector(y, self.matrix.rows)
        return [
            sum(v * y[k] for k, v in line.items()) for line in self._U.lines
        ]

    def image_coordinates(self, y):
        """
        Coordinates of `y` in the basis U^-1·diag(d) of the column lattice
        of M, or None when `y` is not in the lattice.
        """

        w = self.transform(y)

        coords = []
        for i, d in enumerate(self.diagonal):

            if w[i] % d:
                return None

            coords.append(w[i] // d)

        if any(w[self.rank:]):
            return None

        return coords

    def solve(self, y):
        """
        Return an integer vector z with M·z = y, or None if there is none.
        """

        coords = self.image_coordinates(y)

        if coords is None:
            return None

        z = [0] * self.matrix.cols
        for i, c in enumerate(coords):
            if c:
                for k, v in self._V_columns.lines[i].items():
                    z[k] += c * v

        return z

    def kernel_columns(self):
        """
        A basis of the integer kernel of M as a list of sparse columns.
        """

        return [dict(self._V_columns.lines[i]) for i in range(self.rank, self.matrix.cols)]

    def kernel_basis(self):
        return IntMatrix.from_columns(self.matrix.cols, self.kernel_columns())

    def image_basis_column(self, i):
        """
        Column i of U^-1·diag(d), i < rank.
        """

        d = self.diagonal[i]
        return {k: d * v for k, v in self._U_inverse.inverse[i].items()}


def _find_pivot(work, t):

    best = None
    for i, j, v in work.active(t):
        key = (abs(v), i, j)
        if best is None or key < best:
            best = key

    return None if best is None else (best[1], best[2])


def _bring_to(work, rows, cols, i, j, t):
    work.swap_rows(i, t)
    rows.swap(i, t)
    work.swap_cols(j, t)
    cols.swap(j, t)


def smith_decomposition(matrix, track_inverse=False):
    """
    Reduce `matrix` to Smith normal form.

    The pivot is always the non-zero entry of minimal absolute value in the
    active block, ties broken by the lowest (row, col). The work matrix
    starts sparse and switches to dense storage when the active block fills
    in past `DENSE_FILL_RATIO`.

    # Parameters

    matrix:IntMatrix
        - any rectangular integer matrix, including empty

    track_inverse:bool
        - Also accumulate U^-1 (needed for lattice bases).
        - Default - False

    # Return

    A `SmithForm`.

    """

    m, n = matrix.rows, matrix.cols

    work = _SparseWork(matrix)
    rows = _Transform(m, track_inverse=track_inverse)
    cols = _Transform(n)

    diagonal = []
    t = 0

    while t < min(m, n):

        pivot = _find_pivot(work, t)
        if pivot is None:
            break

        _bring_to(work, rows, cols, pivot[0], pivot[1], t)

        while True:

            p = work.get(t, t)

            for i, v in work.col_items(t):
                if i > t:
                    q = v // p
                    if q:
                        work.add_row(i, t, -q)
                        rows.add(i, t, -q)

            for j, v in work.row_items(t):
                if j > t:
                    q = v // p
                    if q:
                        work.add_col(j, t, -q)
                        cols.add(j, t, -q)

            rest = [(abs(v), i, t) for i, v in work.col_items(t) if i > t]
            rest += [(abs(v), t, j) for j, v in work.row_items(t) if j > t]

            if rest:
                _, i, j = min(rest)
                _bring_to(work, rows, cols, i, j, t)
                continue

            bad = None
            for i, j, v in work.active(t + 1):
                if v % p and (bad is None or (i, j) < bad):
                    bad = (i, j)

            if bad is not None:
                work.add_row(t, bad[0], 1)
                rows.add(t, bad[0], 1)
                continue

            break

        if work.get(t, t) < 0:
            work.negate_row(t)
            rows.negate(t)

        diagonal.append(work.get(t, t))
        t += 1

        if isinstance(work, _SparseWork):
            area = (m - t) * (n - t)
            if area >= DENSE_MIN_AREA and work.nnz_active(t) > DENSE_FILL_RATIO * area:
                log.debug("SNF switching to dense storage at step %d (%dx%d)", t, m, n)
                work = work.to_dense()

    return SmithForm(
        matrix,
        rows,
        diagonal,
        cols,
        U_inverse=rows if track_inverse else None,
    )


def smith_normal_form(matrix):
    """
    Return (U, D, V) with U, V unimodular, U·M·V = D and D diagonal with
    d_i | d_{i+1}. The output is deterministic for a fixed input.
    """

    sf = smith_decomposition(matrix)
    return sf.U, sf.D, sf.V


def invariant_factors_from_orders(orders):
    """
    Given the orders of the cyclic summands of a diagonal presentation
    (0 for a free summand), return (invariant factors, free rank). The
    torsion orders are split into prime powers and recombined.
    """

    free_rank = 0
    prime_powers = {}

    for d in orders:

        d = abs(int(d))

        if d == 0:
            free_rank += 1

        elif d > 1:
            for p, e in factorint(d).items():
                prime_powers.setdefault(int(p), []).append(int(e))

    if not prime_powers:
        return (), free_rank

    for p in prime_powers:
        prime_powers[p].sort(reverse=True)

    length = max(len(v) for v in prime_powers.values())

    factors = []
    for k in range(length):
        d = 1
        for p, exponents in prime_powers.items():
            if k < len(exponents):
                d *= p ** exponents[k]

        factors.append(d)

    return tuple(reversed(factors)), free_rank


def localize_factors(factors, m):
    """
    Tensor a list of invariant factors with Z[1/m]: every prime dividing
    `m` is removed from every factor, and factors that become 1 vanish.
    """

    if not m:
        return tuple(factors)

    primes = primefactors(abs(m))

    result = []
    for d in factors:
        for p in primes:
            while d % p == 0:
                d //= p

        if d > 1:
            result.append(d)

    return tuple(result)


def format_group(factors, free_rank):

    parts = [f"Z/{d}" for d in factors]

    if free_rank == 1:
        parts.append("Z")

    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")

    return " + ".join(parts) if parts else "0"


# -------------
# Groups


class FgAbGroup:
    """
    A finitely generated abelian group Z^ngens / (column span of
    `relations`).

    Equality is isomorphism: two groups are equal when their invariant
    factors and free ranks agree.

    # Attributes

    ngens:int
        - the number of generators

    relations:IntMatrix
        - ngens x k, each column a relator

    labels:tuple
        - optional bookkeeping labels, one per generator

    """

    def __init__(self, ngens, relations=None, labels=None):

        if relations is None:
            relations = IntMatrix.zeros(ngens, 0)

        if relations.rows != ngens:
            raise InvalidInputError(
                f"Relation matrix has {relations.rows} rows for {ngens} generators."
            )

        if labels is not None and len(labels) != ngens:
            raise InvalidInputError("One label per generator is required.")

        self.ngens = ngens
        self.relations = relations
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def diagonal(cls, orders, labels=None):
        """
        The group ⊕ Z/orders[i]; order 0 is a free summand.
        """

        columns = [{i: d} for i, d in enumerate(orders) if d]
        return cls(len(orders), IntMatrix.from_columns(len(orders), columns), labels)

    @classmethod
    def free(cls, rank, labels=None):
        return cls(rank, labels=labels)

    @classmethod
    def trivial(cls):
        return cls(0)

    @classmethod
    def cyclic(cls, d):
        return cls.diagonal([d])

    # ------
    # Structure (cached)

    @cached_property
    def diagonal_orders(self):
        """
        If every relator has at most one non-zero entry the presentation is
        diagonal; return the order of each generator (0 = free). Otherwise
        None.
        """

        orders = [0] * self.ngens

        for c in range(self.relations.cols):

            column = self.relations.column(c)

            if len(column) > 1:
                return None

            for r, v in column.items():
                orders[r] = gcd(orders[r], abs(v))

        return tuple(orders)

    @cached_property
    def smith(self):
        return smith_decomposition(self.relations, track_inverse=True)

    @cached_property
    def _structure(self):

        if self.diagonal_orders is not None:
            return invariant_factors_from_orders(self.diagonal_orders)

        factors = tuple(d for d in self.smith.diagonal if d > 1)
        return factors, self.ngens - self.smith.rank

    @property
    def invariant_factors(self):
        return self._structure[0]

    @property
    def free_rank(self):
        return self._structure[1]

    @property
    def order(self):
        """
        The order of the group, None if infinite.
        """

        if self.free_rank:
            return None

        result = 1
        for d in self.invariant_factors:
            result *= d

        return result

    def is_trivial(self):
        return not self.invariant_factors and self.free_rank == 0

    # ------
    # Elements

    def reduce(self, x):
        """
        Canonical coordinates of the element `x`: two vectors represent the
        same element exactly when their reductions agree.
        """

        x = as_dense_vector(x, self.ngens)

        if self.diagonal_orders is not None:
            return tuple(v % d if d else v for v, d in zip(x, self.diagonal_orders))

        w = self.smith.transform(x)

        coords = []
        for i, v in enumerate(w):

            if i < self.smith.rank:
                d = self.smith.diagonal[i]
                if d > 1:
                    coords.append(v % d)

            else:
                coords.append(v)

        return tuple(coords)

    def is_zero(self, x):
        return not any(self.reduce(x))

    def zero(self):
        return [0] * self.ngens

    def generator(self, i):
        v = [0] * self.ngens
        v[i] = 1
        return v

    # ------
    # Dunder

    def __eq__(self, other):
        if not isinstance(other, FgAbGroup):
            return NotImplemented

        return (
            self.invariant_factors == other.invariant_factors
            and self.free_rank == other.free_rank
        )

    def __hash__(self):
        return hash((self.invariant_factors, self.free_rank))

    def __str__(self):
        return format_group(self.invariant_factors, self.free_rank)

    def __repr__(self):
        return f"FgAbGroup({self}, ngens={self.ngens})"

    def to_json(self):
        return {
            "invariant_factors": list(self.invariant_factors),
            "free_rank": self.free_rank,
        }


def direct_sum(*groups):
    """
    The direct sum of the groups, generators concatenated in order.
    """

    ngens = sum(g.ngens for g in groups)

    columns = []
    offset = 0
    for g in groups:
        for c in range(g.relations.cols):
            columns.append({r + offset: v for r, v in g.relations.column(c).items()})

        offset += g.ngens

    return FgAbGroup(ngens, IntMatrix.from_columns(ngens, columns))


class GroupMorphism:
    """
    A homomorphism given by an integer matrix on generators
    (target.ngens x source.ngens).

    On construction the matrix is checked to send every relator of the
    source into the relation lattice of the target.
    """

    def __init__(self, source, target, matrix, check=True):

        if matrix.shape != (target.ngens, source.ngens):
            raise InvalidInputError(
                f"Morphism matrix has shape {matrix.shape}, expected "
                f"{(target.ngens, source.ngens)}."
            )

        self.source = source
        self.target = target
        self.matrix = matrix

        if check:
            for c in range(source.relations.cols):
                image = matrix.apply(source.relations.column(c))

                if not target.is_zero(image):
                    raise InvalidInputError(
                        f"Relator {c} of the source does not map to zero in the target."
                    )

    def __call__(self, x):
        return self.matrix.apply(
            x if isinstance(x, dict) else as_dense_vector(x, self.source.ngens)
        )

    def compose(self, other):
        """
        self ∘ other
        """

        return GroupMorphism(
            other.source, self.target, self.matrix @ other.matrix, check=False
        )

    def is_zero(self):
        return all(
            self.target.is_zero(self.matrix.dense_column(c))
            for c in range(self.matrix.cols)
        )

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens), check=False)

    def __repr__(self):
        return f"GroupMorphism({self.source!r} -> {self.target!r})"


Subgroup = namedtuple(
    "Subgroup",
    [
        "group",  # the FgAbGroup
        "inclusion",  # GroupMorphism into the ambient group
    ],
)


class Subquotient:
    """
    A group of the form L / N where L is a lattice of cycles in Z^g given
    by generators and N ⊆ L. Used for kernels and homology.

    # Attributes

    group:FgAbGroup
        - presented on the generators of L

    cycles:IntMatrix
        - g x k, the generators of L

    """

    def __init__(self, cycles, quotient_columns):

        self.cycles = cycles
        self.solver = smith_decomposition(cycles)

        relations = [dict(c) for c in self.solver.kernel_columns()]

        for y in quotient_columns:
            z = self.solver.solve(y)

            if z is None:
                raise InvariantViolationError(
                    "A boundary or relator does not lie in the cycle lattice."
                )

            relations.append({i: v for i, v in enumerate(z) if v})

        self.group = FgAbGroup(
            cycles.cols, IntMatrix.from_columns(cycles.cols, relations)
        )

    def class_of(self, x):
        """
        Coordinates of the class of the cycle `x` on the group generators.
        """

        z = self.solver.solve(x)

        if z is None:
            raise NotInImageError("The element is not a cycle.")

        return z

    def is_zero_class(self, x):
        return self.group.is_zero(self.class_of(x))


def _cycle_lattice(matrix, target):
    """
    Generators of {x : matrix·x ∈ relation lattice of target}.
    """

    g = matrix.cols
    stacked = matrix.hstack(target.relations)

    sf = smith_decomposition(stacked)

    columns = []
    for column in sf.kernel_columns():
        projected = {r: v for r, v in column.items() if r < g}
        if projected:
            columns.append(projected)

    return IntMatrix.from_columns(g, columns)


def kernel(f):
    """
    The kernel of `f` as a `Subgroup` of the source.
    """

    cycles = _cycle_lattice(f.matrix, f.target)

    sq = Subquotient(
        cycles,
        [f.source.relations.dense_column(c) for c in range(f.source.relations.cols)],
    )

    return Subgroup(sq.group, GroupMorphism(sq.group, f.source, cycles, check=False))


def image(f):
    """
    The image of `f` as a `Subgroup` of the target. It is presented on the
    generators of the source modulo the kernel lattice; the inclusion
    matrix is `f.matrix`.
    """

    relations = _cycle_lattice(f.matrix, f.target)
    group = FgAbGroup(f.source.ngens, relations, f.source.labels)

    return Subgroup(group, GroupMorphism(group, f.target, f.matrix, check=False))


def element_in_image(f, y):
    """
    Decide whether `y` (target coordinates) is in the image of `f`.

    # Return

    (True, preimage) or (False, None). The preimage x satisfies
    f(x) - y ∈ relation lattice of the target.

    """

    stacked = f.matrix.hstack(f.target.relations)
    z = smith_decomposition(stacked).solve(as_dense_vector(y, f.target.ngens))

    if z is None:
        return False, None

    return True, z[: f.source.ngens]


class ImageReduction:
    """
    An isomorphism between the image of a morphism and a diagonal
    (invariant-factor) presentation.

    `reduce(y)` gives the diagonal coordinates of an element of the image
    (given in target coordinates); `lift(k)` gives a source vector mapping
    onto diagonal generator k.

    The state is plain data (`state()` / `ImageReduction(f, state)`) so it
    can be stored and reloaded without redoing the reductions.
    """

    def __init__(self, f, state=None):

        self.morphism = f

        if state is None:
            state = self._compute(f)

        self._outer_rows = [dict(row) for row in state["outer_rows"]]
        self._outer_diagonal = list(state["outer_diagonal"])
        self._inner_rows = [dict(row) for row in state["inner_rows"]]
        self._kept = list(state["kept"])
        self._lifts = [dict(v) for v in state["lifts"]]

        self.group = FgAbGroup.diagonal(state["orders"])

        if len(self._outer_rows) != f.target.ngens or len(self._lifts) != self.group.ngens:
            raise InvalidInputError("Stored reduction does not fit the morphism.")

    @staticmethod
    def _compute(f):

        a = f.source.ngens
        stacked = f.matrix.hstack(f.target.relations)

        outer = smith_decomposition(stacked, track_inverse=True)

        relation_coords = [
            outer.image_coordinates(f.target.relations.dense_column(c))
            for c in range(f.target.relations.cols)
        ]

        r = outer.rank
        inner = smith_decomposition(
            IntMatrix.from_columns(r, relation_coords), track_inverse=True
        )

        orders = []
        kept = []
        for i in range(r):

            if i < inner.rank:
                d = inner.diagonal[i]
                if d == 1:
                    continue

            else:
                d = 0

            kept.append(i)
            orders.append(d)

        lifts = []
        for i in kept:

            # the lattice element B·U2^-1·e_i, B = U1^-1·diag(d)
            y = {}
            for l, v in inner._U_inverse.inverse[i].items():
                for row, value in outer.image_basis_column(l).items():
                    y[row] = y.get(row, 0) + v * value

            z = outer.solve(as_dense_vector(y, f.target.ngens))

            if z is None:
                raise InvariantViolationError("Cannot lift a reduced generator.")

            lifts.append({j: v for j, v in enumerate(z[:a]) if v})

        return {
            "outer_rows": outer._U.lines,
            "outer_diagonal": outer.diagonal,
            "inner_rows": inner._U.lines,
            "kept": kept,
            "orders": orders,
            "lifts": lifts,
        }

    def state(self):
        """
        JSON-ready state: sparse rows as lists of [index, value] pairs.
        """

        def pairs(d):
            return sorted([k, v] for k, v in d.items())

        return {
            "outer_rows": [pairs(r) for r in self._outer_rows],
            "outer_diagonal": self._outer_diagonal,
            "inner_rows": [pairs(r) for r in self._inner_rows],
            "kept": self._kept,
            "orders": list(self.group.diagonal_orders),
            "lifts": [pairs(v) for v in self._lifts],
        }

    @staticmethod
    def _apply(rows, y):

        items = y.items() if isinstance(y, dict) else list(enumerate(y))
        lookup = dict(items)

        return [sum(v * lookup.get(k, 0) for k, v in row.items()) for row in rows]

    def image_coordinates(self, y):
        """
        Coordinates of y in the lattice basis of the image, None if y is
        not in the image.
        """

        w = self._apply(self._outer_rows, y)
        r = len(self._outer_diagonal)

        if any(w[r:]):
            return None

        coords = []
        for v, d in zip(w, self._outer_diagonal):

            if v % d:
                return None

            coords.append(v // d)

        return coords

    def reduce(self, y):

        coords = self.image_coordinates(y)
        if coords is None:
            raise NotInImageError("The element is not in the image.")

        w = self._apply(self._inner_rows, coords) if coords else []

        return self.group.reduce([w[i] for i in self._kept])

    def reduce_source(self, x):
        """
        Diagonal coordinates of f(x).
        """

        return self.reduce(self.morphism(x))

    def lift(self, k):
        """
        A sparse source vector (dict) whose image is diagonal generator k.
        """

        return self._lifts[k]


def reduced_image(f):
    return ImageReduction(f)


# -------------
# Constructions


TensorProduct = namedtuple(
    "TensorProduct",
    [
        "group",  # FgAbGroup on pairs of generators
        "pair",  # bilinear map (x, y) -> x ⊗ y
    ],
)


def tensor(A, B):
    """
    A ⊗ B. Generators are the pairs (i, j), index i * B.ngens + j.
    Relations are the relators of A tensored with the generators of B and
    the generators of A tensored with the relators of B.
    """

    nb = B.ngens
    ngens = A.ngens * nb

    columns = []

    for c in range(A.relations.cols):
        r = A.relations.column(c)
        for j in range(nb):
            columns.append({i * nb + j: v for i, v in r.items()})

    for i in range(A.ngens):
        for c in range(B.relations.cols):
            s = B.relations.column(c)
            columns.append({i * nb + j: v for j, v in s.items()})

    labels = None
    if A.labels is not None and B.labels is not None:
        labels = [(la, lb) for la in A.labels for lb in B.labels]

    group = FgAbGroup(ngens, IntMatrix.from_columns(ngens, columns), labels)

    def pair(x, y):
        x = as_dense_vector(x, A.ngens)
        y = as_dense_vector(y, nb)
        return [xv * yv for xv in x for yv in y]

    return TensorProduct(group, pair)


ExteriorSquare = namedtuple(
    "ExteriorSquare",
    [
        "group",  # FgAbGroup on e_i ∧ e_j, i < j
        "wedge",  # bilinear alternating map (x, y) -> x ∧ y
        "index",  # dict (i, j) -> generator index
    ],
)


def exterior_square(A):
    """
    Λ²A: generators e_i ∧ e_j for i < j (lexicographic), relations r ∧ e_k
    for every relator r of A and generator e_k. a ∧ a = 0 holds because
    only i < j pairs are generators.
    """

    pairs = list(combinations(range(A.ngens), 2))
    index = {p: k for k, p in enumerate(pairs)}
    ngens = len(pairs)

    def wedge_basis(i, k, coefficient, column):
        if i < k:
            column[index[(i, k)]] = column.get(index[(i, k)], 0) + coefficient

        elif i > k:
            column[index[(k, i)]] = column.get(index[(k, i)], 0) - coefficient

    columns = []
    for c in range(A.relations.cols):
        r = A.relations.column(c)

        for k in range(A.ngens):
            column = {}
            for i, v in r.items():
                wedge_basis(i, k, v, column)

            column = {key: v for key, v in column.items() if v}
            if column:
                columns.append(column)

    labels = None
    if A.labels is not None:
        labels = [(A.labels[i], A.labels[j]) for i, j in pairs]

    group = FgAbGroup(ngens, IntMatrix.from_columns(ngens, columns), labels)

    def wedge(x, y):
        x = as_dense_vector(x, A.ngens)
        y = as_dense_vector(y, A.ngens)
        return [x[i] * y[j] - x[j] * y[i] for i, j in pairs]

    return ExteriorSquare(group, wedge, index)


# -------------
# Chain complexes


class FgChainComplex:
    """
    A chain complex of finitely generated abelian groups.

    # Attributes

    positions:list(FgAbGroup)
        - the group at position i is positions[i]

    differentials:dict(int -> GroupMorphism)
        - d_i : positions[i] -> positions[i-1] for 1 <= i < len(positions)
        - missing entries are zero maps

    """

    def __init__(self, positions, differentials, check=True):

        self.positions = list(positions)
        self.differentials = {}

        for i in range(1, len(self.positions)):

            d = differentials.get(i)

            if d is None:
                d = GroupMorphism.zero(self.positions[i], self.positions[i - 1])

            elif d.source is not self.positions[i] or d.target is not self.positions[i - 1]:
                raise InvalidInputError(f"Differential {i} has the wrong endpoints.")

            self.differentials[i] = d

        if check:
            self.verify()

    def differential(self, i):
        """
        d_i, with zero maps at the boundary positions.
        """

        if i in self.differentials:
            return self.differentials[i]

        source = self.positions[i] if 0 <= i < len(self.positions) else FgAbGroup.trivial()
        target = (
            self.positions[i - 1]
            if 0 <= i - 1 < len(self.positions)
            else FgAbGroup.trivial()
        )

        return GroupMorphism.zero(source, target)

    def verify(self):
        """
        Check d_i ∘ d_{i+1} = 0 modulo the relations of the target.
        """

        for i in range(1, len(self.positions) - 1):

            composite = self.differentials[i].matrix @ self.differentials[i + 1].matrix
            target = self.positions[i - 1]

            for c in range(composite.cols):
                if not target.is_zero(composite.dense_column(c)):
                    raise InvariantViolationError(
                        f"d_{i} ∘ d_{i + 1} is not zero on generator {c}."
                    )

        return True


def homology_data(C, i):
    """
    ker(d_i) / im(d_{i+1}) at position i, with the cycle representatives.

    # Return

    A `Subquotient`.

    """

    P = C.positions[i]
    d_out = C.differential(i)
    d_in = C.differential(i + 1)

    cycles = _cycle_lattice(d_out.matrix, d_out.target)

    boundaries = [d_in.matrix.dense_column(c) for c in range(d_in.matrix.cols)]
    boundaries += [P.relations.dense_column(c) for c in range(P.relations.cols)]

    return Subquotient(cycles, boundaries)


def homology_at(C, i):
    """
    The homology group at position i.
    """

    return homology_data(C, i).group
