#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : e53b20d0-3a24-43f6-9ad3-de9fe334311e
# date  : 2024-03-02
# -----------

"""
The complex

    U^{⊗n} ⊗ K_0 -> ... -> U^{⊗2} ⊗ K_{n-2} -> U ⊗ K_{n-1} -> K_n

at S-unit truncation, where U is the S-unit group and K_m the truncated
Milnor K-group. Position i holds U^{⊗i} ⊗ K_{n-i}; the differential is

    δ_i(u_1 ⊗ ... ⊗ u_i ⊗ β) = Σ_j u_1 ⊗ ... û_j ... ⊗ u_i ⊗ {u_j}·β

with no signs. B_n is the homology at position 2.

Both U and the K_m are carried in diagonal presentations, so every
position is a diagonal group: the generator (unit tuple, κ) has order
gcd of the orders of its factors. Generators are ordered
lexicographically by (unit tuple, K index).

"""

# ------------
# System Modules - Included with Python

import logging

from dataclasses import dataclass, field
from functools import partial
from itertools import product
from math import gcd
from multiprocessing import Pool

# ------------
# Custom Modules

from .common import Timer
from .config import Caps
from .errors import (
    CapExceededError,
    InvalidInputError,
    InvariantViolationError,
    K3IndUnavailableError,
    SupportError,
)
from .fgab import (
    FgAbGroup,
    FgChainComplex,
    GroupMorphism,
    IntMatrix,
    element_in_image,
    homology_data,
    image,
    kernel,
    localize_factors,
)
from .milnor import K3_IND, KClass, truncated_k_group

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class BnComplexSpec:
    """
    (field, n, S). Use `create` to apply the caps.
    """

    field: object
    n: int
    support: object

    @classmethod
    def create(cls, field, n, support, caps=None):

        caps = caps or DEFAULT_CAPS

        if n < 1:
            raise InvalidInputError(f"n must be at least 1, got {n}.")

        if n > caps.n:
            raise CapExceededError(f"n = {n} exceeds the cap {caps.n}.")

        if support.field != field:
            raise InvalidInputError(f"Support {support} does not belong to {field}.")

        return cls(field, n, support)

    def to_json(self):
        return {"field": self.field.tag, "n": self.n, "support": str(self.support)}


class TruncatedBnComplex:
    """

    # Attributes

    spec:BnComplexSpec

    kgroups:list(TruncatedKGroup)
        - kgroups[m] is the truncated K_m, 0 <= m <= n

    positions:list(FgAbGroup)
        - positions[i] = U^{⊗i} ⊗ K_{n-i}

    complex:FgChainComplex

    """

    def __init__(self, spec, caps=None, cache=None):

        caps = caps or DEFAULT_CAPS

        self.spec = spec
        self.caps = caps
        self.n = spec.n
        self.support = spec.support
        self.k = spec.support.rank
        self.unit_orders = spec.support.orders

        self.timings_ms = {}

        with Timer() as t:
            self.kgroups = [
                truncated_k_group(spec.field, spec.support, m, caps, cache)
                for m in range(self.n + 1)
            ]

        self.timings_ms["k_groups"] = t.ms

        # {b}·κ in reduced coordinates: _mult[m][b][κ] in K_{m+1}
        self._mult = {}

        with Timer() as t:
            self.positions = [self._position(i) for i in range(self.n + 1)]

            if self.positions[0].ngens != self.kgroups[self.n].ngens:
                raise InvariantViolationError(
                    "Position 0 does not match the generators of the truncated K_n."
                )

            differentials = {
                i: GroupMorphism(
                    self.positions[i], self.positions[i - 1], self._differential(i)
                )
                for i in range(1, self.n + 1)
            }

        self.timings_ms["differentials"] = t.ms

        with Timer() as t:
            self.complex = FgChainComplex(self.positions, differentials)

        self.timings_ms["dd_check"] = t.ms

        log.info(
            "built truncated complex n=%d S=%s, generators %s",
            self.n,
            self.support,
            [P.ngens for P in self.positions],
        )

    # ------
    # Layout

    def r(self, i):
        """
        Generator count of the K-factor at position i.
        """

        return self.kgroups[self.n - i].ngens

    def index(self, units, kappa):
        """
        Generator index of unit tuple ⊗ K generator kappa at position
        len(units).
        """

        u = 0
        for b in units:
            u = u * self.k + b

        return u * self.r(len(units)) + kappa

    def split(self, i, index):
        """
        Inverse of `index`: (unit tuple, kappa).
        """

        u, kappa = divmod(index, self.r(i))

        units = []
        for _ in range(i):
            u, b = divmod(u, self.k)
            units.append(b)

        return tuple(reversed(units)), kappa

    def _position(self, i):

        K = self.kgroups[self.n - i].reduced_group
        count = self.k**i * K.ngens

        if count > 10**self.caps.matrix_size:
            raise CapExceededError(
                f"Position {i} has {count} generators, more than 10^{self.caps.matrix_size}."
            )

        orders = []
        for units in product(range(self.k), repeat=i):

            unit_order = 0
            for b in units:
                unit_order = gcd(unit_order, self.unit_orders[b])

            for d in K.diagonal_orders:
                orders.append(gcd(unit_order, d))

        return FgAbGroup.diagonal(orders)

    def _multiplication(self, m):
        """
        Table [b][κ] of {b-th basis unit}·κ for κ in K_m, reduced in
        K_{m+1}.
        """

        if m not in self._mult:

            source = self.kgroups[m]
            target = self.kgroups[m + 1]

            self._mult[m] = [
                [source.generator(kappa).multiply_basis(b, target).coords for kappa in range(source.ngens)]
                for b in range(self.k)
            ]

        return self._mult[m]

    def _differential(self, i):

        m = self.n - i
        table = self._multiplication(m)

        source = self.positions[i]
        entries = {}

        for col in range(source.ngens):

            units, kappa = self.split(i, col)

            for j in range(i):

                rest = units[:j] + units[j + 1 :]
                coords = table[units[j]][kappa]

                for lam, v in enumerate(coords):
                    if v:
                        row = self.index(rest, lam)
                        entries[(row, col)] = entries.get((row, col), 0) + v

        return IntMatrix(self.positions[i - 1].ngens, source.ngens, entries)

    # ------
    # Operations

    def delta(self, i, x):
        """
        δ_i applied to x in P_i; the result is reduced in P_{i-1}.
        """

        if not 1 <= i <= self.n:
            raise InvalidInputError(f"δ_{i} is not defined for n = {self.n}.")

        return list(self.positions[i - 1].reduce(self.complex.differentials[i](x)))

    def zero(self, i):
        return [0] * self.positions[i].ngens

    def random_element(self, i, rng, bound=3):
        return [rng.randint(-bound, bound) for _ in range(self.positions[i].ngens)]

    def k_class(self, x):
        """
        The element x of P_0 as a class of the truncated K_n.
        """

        return KClass(self.kgroups[self.n], x)

    def encode(self, units, symbol):
        """

        The element u_1 ⊗ ... ⊗ u_i ⊗ {b_1, ..., b_{n-i}} of P_i for
        arbitrary S-units, expanded multilinearly over the basis.

        # Parameters

        units:list(UnitVector)
            - u_1, ..., u_i

        symbol:list(UnitVector)
            - b_1, ..., b_{n-i}

        # Return

        A dense vector in P_i.

        """

        i = len(units)

        if i + len(symbol) != self.n:
            raise InvalidInputError(
                f"A pure tensor at position {i} needs {self.n - i} symbol entries."
            )

        kappa = self.kgroups[self.n - i].class_of_symbol(symbol).coords

        expansion = {(): 1}
        for u in units:

            c = self.support.coordinates(u)
            expansion = {
                t + (b,): v * cb
                for t, v in expansion.items()
                for b, cb in enumerate(c)
                if cb
            }

        x = self.zero(i)
        for t, v in expansion.items():
            for lam, kv in enumerate(kappa):
                if kv:
                    x[self.index(t, lam)] += v * kv

        return list(self.positions[i].reduce(x))

    def homology(self, i):
        return homology_data(self.complex, i)

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "position_dims": [P.ngens for P in self.positions],
        }


def build(spec, caps=None, cache=None):
    return TruncatedBnComplex(spec, caps, cache)


def cycle_basis(C, i):
    """
    Generators of the kernel of δ_i as dense vectors of P_i.
    """

    inclusion = kernel(C.complex.differential(i)).inclusion.matrix
    return [inclusion.dense_column(j) for j in range(inclusion.cols)]


def shuffled_complex(C, rng):
    """
    The complex of C with the generators of every position permuted by
    `rng`. Its homology is isomorphic to that of C.
    """

    perms = []
    positions = []
    for P in C.positions:

        perm = list(range(P.ngens))
        rng.shuffle(perm)

        perms.append(perm)
        positions.append(FgAbGroup.diagonal([P.diagonal_orders[j] for j in perm]))

    differentials = {}
    for i in range(1, len(positions)):

        matrix = C.complex.differentials[i].matrix
        matrix = matrix.select_rows(perms[i - 1]).select_columns(perms[i])

        differentials[i] = GroupMorphism(positions[i], positions[i - 1], matrix)

    return FgChainComplex(positions, differentials)


def b_n(spec, caps=None, cache=None):
    """
    B_n at truncation S: trivial for n = 1, refused for n = 2, the
    homology at position 2 for n >= 3.
    """

    if spec.n == 1:
        return FgAbGroup.trivial()

    if spec.n == 2:
        raise K3IndUnavailableError()

    return build(spec, caps, cache).homology(2).group


@dataclass
class H1Check:
    passed: bool
    group: FgAbGroup
    witness: list = None

    def to_json(self):
        return {
            "passed": self.passed,
            "h1": self.group.to_json(),
            "witness": self.witness,
        }


def h1_check(C):
    """
    Check that the homology at position 1 is trivial. On failure the
    witness is a cycle of P_1 that is not a boundary.
    """

    if C.n < 3:
        raise InvalidInputError("The position 1 check needs n >= 3.")

    data = C.homology(1)

    if data.group.is_trivial():
        return H1Check(True, data.group)

    for j in range(data.group.ngens):

        e = data.group.generator(j)
        if not data.group.is_zero(e):
            return H1Check(False, data.group, data.cycles.dense_column(j))

    raise InvariantViolationError("Non-trivial group without a non-zero generator.")


def section_delta1(C, x):
    """
    The inverse of δ̄_1 : P_1 / im δ_2 -> K_n: a class of K_n, written
    as a combination of symbols {a_1, ..., a_n}, goes to
    Σ a_1 ⊗ {a_2, ..., a_n}.
    """

    if C.n < 3:
        raise InvalidInputError("The section of δ_1 needs n >= 3.")

    if not isinstance(x, KClass):
        x = C.k_class(x)

    K = C.kgroups[C.n - 1]
    block = K.tuple_count

    y = C.zero(1)
    for t, c in x.representative().items():

        first, rest = divmod(t, block)
        kappa = K.class_of_tuples({rest: c}).coords

        for lam, v in enumerate(kappa):
            if v:
                y[C.index((first,), lam)] += v

    return list(C.positions[1].reduce(y))


def section_inverse_check(C, samples=100, rng=None):
    """
    δ̄_1 ∘ section = id on every K_n generator, and
    section ∘ δ̄_1 = id modulo im δ_2 on random elements of P_1.
    """

    report = {"generators": 0, "generator_failures": 0, "samples": 0, "sample_failures": 0}

    K = C.kgroups[C.n]
    for g in K.generators():

        report["generators"] += 1
        back = C.k_class(C.delta(1, section_delta1(C, g)))

        if back != g:
            report["generator_failures"] += 1

    if rng is not None:

        d2 = C.complex.differentials[2]

        for _ in range(samples):

            report["samples"] += 1

            x = C.random_element(1, rng)
            y = section_delta1(C, C.delta(1, x))

            found, _ = element_in_image(d2, [a - b for a, b in zip(y, x)])
            if not found:
                report["sample_failures"] += 1

    report["passed"] = not (report["generator_failures"] or report["sample_failures"])

    return report


def theta(C, c, a, b):
    """
    θ(c ⊗ (a ∧ b)) = -a ⊗ {b, c} + b ⊗ {a, c} in P_1 of the n = 3
    complex.
    """

    if C.n != 3:
        raise InvalidInputError("θ lands in position 1 of the n = 3 complex.")

    left = C.encode([a], [b, c])
    right = C.encode([b], [a, c])

    return list(C.positions[1].reduce([-x + y for x, y in zip(left, right)]))


def theta_generator(C, c, i, j):
    """
    θ on the generator c ⊗ (e_i ∧ e_j) of U ⊗ Λ²U.
    """

    basis = C.support.basis
    return theta(C, c, basis[i], basis[j])


# -------------
# Reports


def _group_json(group, invert=0):

    data = group.to_json()

    if invert:
        data["invariant_factors"] = list(localize_factors(group.invariant_factors, invert))

    return data


@dataclass
class BnReport:
    """
    Homology of one truncated complex. Everything is labelled truncated:
    the groups map to, but need not equal, the groups of the field.
    """

    spec: BnComplexSpec
    position_dims: list
    h2: object
    h1: object = None
    h1_passed: bool = None
    positions: list = field(default_factory=list)
    induced_maps: list = field(default_factory=list)
    timings_ms: dict = field(default_factory=dict)

    def to_json(self, timings=False, invert=0):

        data = {
            "spec": self.spec.to_json(),
            "truncated": True,
            "position_dims": self.position_dims,
            "positions": self.positions,
            "induced_maps": self.induced_maps,
        }

        if self.h2 is K3_IND:
            data["H2"] = K3_IND.to_json()
            data["invariant_factors_H2"] = None

        else:
            h2 = _group_json(self.h2, invert)
            data["H2"] = h2
            data["invariant_factors_H2"] = h2["invariant_factors"]

        if self.h1 is not None:
            h1 = _group_json(self.h1, invert)
            data["H1"] = h1
            data["invariant_factors_H1"] = h1["invariant_factors"]
            data["h1_check"] = self.h1_passed

        if invert:
            data["localisation"] = f"Z[1/{invert}]"

        if timings:
            data["timings_ms"] = self.timings_ms

        return data


def _position_summary(C, i):

    d_out = C.complex.differential(i)
    d_in = C.complex.differential(i + 1)

    return {
        "position": i,
        "generators": C.positions[i].ngens,
        "group": C.positions[i].to_json(),
        "kernel": kernel(d_out).group.to_json(),
        "image": image(d_in).group.to_json(),
    }


def bn_report(spec, caps=None, cache=None, details=True):
    """

    Build the complex for `spec` and report the homology at positions 1
    and 2.

    # Parameters

    spec:BnComplexSpec

    caps:Caps

    cache:KGroupCache
        - Default - None, no disk cache

    details:bool
        - Include kernel and image groups for positions 0 to 2.
        - Default - True

    # Return

    A BnReport.

    """

    if spec.n == 2:
        raise K3IndUnavailableError()

    timings = {}

    with Timer() as total:

        C = build(spec, caps, cache)
        timings.update(C.timings_ms)

        if spec.n == 1:
            h2 = FgAbGroup.trivial()
            h1 = C.homology(1).group
            passed = None

        else:
            with Timer() as t:
                h2 = C.homology(2).group

            timings["h2"] = t.ms

            with Timer() as t:
                check = h1_check(C)

            timings["h1"] = t.ms
            h1, passed = check.group, check.passed

        positions = []
        if details:
            positions = [_position_summary(C, i) for i in range(min(3, C.n + 1))]

    timings["total"] = total.ms

    return BnReport(
        spec=spec,
        position_dims=[P.ngens for P in C.positions],
        h2=h2,
        h1=h1,
        h1_passed=passed,
        positions=positions,
        timings_ms=timings,
    )


def bn_reports(specs, caps=None, cache=None, jobs=1, details=True):
    """
    Reports for independent specs, in a process pool when jobs > 1. The
    order of the results follows `specs`.
    """

    job = partial(bn_report, caps=caps, cache=cache, details=details)

    if jobs <= 1 or len(specs) <= 1:
        return [job(s) for s in specs]

    with Pool(min(jobs, len(specs))) as pool:
        return pool.map(job, specs)


# -------------
# Stabilization


def _basis_map(small, large):
    """
    Index of each basis unit of `small` in the basis of `large`.
    """

    position = {u: k for k, u in enumerate(large.basis)}
    return [position[u] for u in small.basis]


def position2_map(C, D):
    """
    The map P_2(C) -> P_2(D) induced by the inclusion of supports.
    """

    remap = _basis_map(C.support, D.support)

    K = C.kgroups[C.n - 2]
    L = D.kgroups[D.n - 2]

    # K generators of C pushed into L
    pushed = []
    for kappa in range(K.ngens):

        combination = {}
        for t, v in K.lift(kappa).items():
            image_tuple = tuple(remap[b] for b in K.tuple_at(t))
            j = L.tuple_index(image_tuple)
            combination[j] = combination.get(j, 0) + v

        pushed.append(L.class_of_tuples(combination).coords)

    entries = {}
    for col in range(C.positions[2].ngens):

        units, kappa = C.split(2, col)
        mapped = tuple(remap[b] for b in units)

        for lam, v in enumerate(pushed[kappa]):
            if v:
                row = D.index(mapped, lam)
                entries[(row, col)] = entries.get((row, col), 0) + v

    return IntMatrix(D.positions[2].ngens, C.positions[2].ngens, entries)


def induced_map(C, D, HC=None, HD=None):
    """
    The map on position 2 homology induced by S ⊂ S'. Checked to be a
    well defined morphism.
    """

    HC = HC or C.homology(2)
    HD = HD or D.homology(2)

    chain = position2_map(C, D)

    columns = []
    for j in range(HC.group.ngens):
        columns.append(HD.class_of(chain.apply(HC.cycles.column(j))))

    matrix = IntMatrix.from_columns(HD.group.ngens, columns)

    return GroupMorphism(HC.group, HD.group, matrix)


def _map_json(f, source_label, target_label):

    im = image(f).group
    ker = kernel(f).group

    return {
        "source": source_label,
        "target": target_label,
        "image": im.to_json(),
        "kernel": ker.to_json(),
        "image_free_rank": im.free_rank,
        "image_order": im.order,
    }


def stabilization_scan(field, n, supports, caps=None, cache=None):
    """

    B_n at each support of a nested chain S_1 ⊂ ... ⊂ S_k, with the maps
    induced between consecutive levels and from every level to the last.
    The kernels report which classes die.

    # Return

    A list of BnReports; the induced maps are attached to the report of
    their source level.

    """

    for small, large in zip(supports, supports[1:]):
        if not small.issubset(large):
            raise SupportError(f"Supports are not nested: {small} is not inside {large}.")

    specs = [BnComplexSpec.create(field, n, S, caps) for S in supports]

    if n == 2:
        raise K3IndUnavailableError()

    if n == 1:
        # B_1 vanishes at every level, so do the maps
        zero = FgAbGroup.trivial().to_json()

        reports = []
        for k, spec in enumerate(specs):

            report = BnReport(spec, [], FgAbGroup.trivial())

            for j in range(k + 1, len(specs)):
                entry = {
                    "source": str(spec.support),
                    "target": str(specs[j].support),
                    "image": zero,
                    "kernel": zero,
                    "image_free_rank": 0,
                    "image_order": 1,
                }
                entry["kind"] = "consecutive" if j == k + 1 else "to_level"
                entry["level"] = j
                report.induced_maps.append(entry)

            reports.append(report)

        return reports

    complexes = [build(spec, caps, cache) for spec in specs]
    homologies = [C.homology(2) for C in complexes]

    reports = []
    for k, (C, H) in enumerate(zip(complexes, homologies)):

        report = BnReport(
            spec=C.spec,
            position_dims=[P.ngens for P in C.positions],
            h2=H.group,
            timings_ms=dict(C.timings_ms),
        )

        for j in range(k + 1, len(complexes)):

            f = induced_map(C, complexes[j], H, homologies[j])

            entry = _map_json(f, str(C.support), str(complexes[j].support))
            entry["kind"] = "consecutive" if j == k + 1 else "to_level"
            entry["level"] = j
            report.induced_maps.append(entry)

        reports.append(report)

    return reports
