#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : f295c71b-4494-42c4-861e-bf55498fa355
# date  : 2024-03-02
# -----------

"""
Golden values: results recorded by the dense oracle and checked against
the sparse path. Entries are keyed by (command, field, S, n) and the
coordinate convention version; entries recorded under another version
are stale and are never compared.
"""

# ------------
# System Modules - Included with Python

import json
import logging

from pathlib import Path

# ------------
# Custom Modules

from .bncomplex import BnComplexSpec, build, induced_map, position2_map
from .common import atomic_write_text, canonical_json
from .errors import InvalidInputError, K3IndUnavailableError
from .fgab import image
from .milnor import CONVENTION_VERSION
from .oracle import complex_boundaries, complex_cycles, complex_homology, dense_subquotient

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

# (field, n, support chain) recorded by default
DEFAULT_CASES = [
    ("q", 3, "-1,2;-1,2,3;-1,2,3,5"),
]


def group_value(factors, free_rank):
    return {"invariant_factors": list(factors), "free_rank": free_rank}


class GoldenStore:
    """

    # Parameters

    path:pathlib.Path
        - the JSON file, created on the first record

    """

    def __init__(self, path):
        self.path = Path(path)

    def load(self):

        if not self.path.exists():
            return {"version": CONVENTION_VERSION, "entries": {}}

        try:
            data = json.loads(self.path.read_text(encoding="utf-8"))

        except json.JSONDecodeError as e:
            raise InvalidInputError(f"Golden file {self.path} is not valid JSON: {e}") from e

        data.setdefault("entries", {})
        return data

    @staticmethod
    def key(command, field, support, n):
        return f"{command}|{field}|{support}|n={n}"

    def record(self, command, field, support, n, value):

        data = self.load()
        data["version"] = CONVENTION_VERSION

        data["entries"][self.key(command, field, support, n)] = {
            "command": command,
            "field": field,
            "support": support,
            "n": n,
            "convention": CONVENTION_VERSION,
            "value": value,
        }

        atomic_write_text(self.path, canonical_json(data) + "\n")
        log.debug("recorded %s %s %s n=%d", command, field, support, n)

    def check(self, command, field, support, n, value):
        """
        Return "match", "mismatch", "missing" or "stale".
        """

        entry = self.load()["entries"].get(self.key(command, field, support, n))

        if entry is None:
            return "missing"

        if entry.get("convention") != CONVENTION_VERSION:
            return "stale"

        return "match" if entry["value"] == value else "mismatch"


# -------------
# Values


def oracle_bn(C):
    """
    B_n of a built complex by the dense oracle.
    """

    return group_value(*complex_homology(C.complex, 2))


def oracle_induced_image(C, D):
    """
    The image of H_2(C) -> H_2(D) by the dense oracle: pushed cycles of C
    plus the boundaries of D, modulo the boundaries of D.
    """

    chain = position2_map(C, D)
    pushed = [chain.apply(v) for v in complex_cycles(C.complex, 2)]
    boundaries = complex_boundaries(D.complex, 2)

    return group_value(*dense_subquotient(pushed + boundaries, boundaries, D.positions[2].ngens))


def sparse_bn(C):
    h = C.homology(2).group
    return group_value(h.invariant_factors, h.free_rank)


def sparse_induced_image(C, D):
    im = image(induced_map(C, D)).group
    return group_value(im.invariant_factors, im.free_rank)


def _complexes(field, n, supports, caps, cache):
    return [build(BnComplexSpec.create(field, n, S, caps), caps, cache) for S in supports]


def _trivial_values(field, n, supports, caps):
    """
    B_1 vanishes at every level, and so do the induced images.
    """

    for S in supports:
        BnComplexSpec.create(field, n, S, caps)

    zero = group_value([], 0)

    values = [("bn", str(S), zero) for S in supports]
    values.extend(("scan", f"{S}->{T}", zero) for S, T in zip(supports, supports[1:]))

    return values


def golden_values(field, n, supports, caps=None, cache=None, oracle=True):
    """

    The golden entries of a support chain: B_n at each level and the
    image of the induced map between consecutive levels.

    # Parameters

    oracle:bool
        - compute with the dense oracle (True) or the sparse path

    # Return

    A list of (command, support label, value). n = 1 gives trivial
    values; n = 2 raises K3IndUnavailableError.

    """

    if n == 2:
        raise K3IndUnavailableError()

    if n == 1:
        return _trivial_values(field, n, supports, caps)

    complexes = _complexes(field, n, supports, caps, cache)

    bn = oracle_bn if oracle else sparse_bn
    induced = oracle_induced_image if oracle else sparse_induced_image

    values = [("bn", str(C.support), bn(C)) for C in complexes]

    for C, D in zip(complexes, complexes[1:]):
        values.append(("scan", f"{C.support}->{D.support}", induced(C, D)))

    return values


def record(store, field, n, supports, caps=None, cache=None):
    """
    Record oracle values. Returns the number of entries written.
    """

    values = golden_values(field, n, supports, caps, cache, oracle=True)

    for command, label, value in values:
        store.record(command, field.tag, label, n, value)

    return len(values)


def check(store, field, n, supports, caps=None, cache=None):
    """
    Compare sparse values against the store.

    # Return

    A list of dicts with the key, status and computed value.

    """

    results = []
    for command, label, value in golden_values(field, n, supports, caps, cache, oracle=False):

        status = store.check(command, field.tag, label, n, value)

        if status != "match":
            log.warning("golden %s %s n=%d: %s", command, label, n, status)

        results.append(
            {
                "command": command,
                "field": field.tag,
                "support": label,
                "n": n,
                "status": status,
                "value": value,
            }
        )

    return results
