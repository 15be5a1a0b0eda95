#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = 9a61f3c5-0d4e-4b87-a2c9-6e1d58b07f23
date       = 2024-03-02
-----------
"""

import json

from pathlib import Path

import pytest

from milnork.milnork import golden
from milnork.milnork.errors import InvalidInputError, K3IndUnavailableError
from milnork.milnork.fields import QQ
from milnork.milnork.golden import DEFAULT_CASES, GoldenStore, golden_values
from milnork.milnork.milnor import CONVENTION_VERSION
from milnork.milnork.parsing import parse_field, parse_support_chain

VALUE = {"invariant_factors": [2], "free_rank": 0}

# ---------
# GoldenStore


def test_store_statuses(tmp_path):

    store = GoldenStore(tmp_path / "golden.json")

    assert store.check("bn", "q", "-1,2", 3, VALUE) == "missing"

    store.record("bn", "q", "-1,2", 3, VALUE)

    assert store.check("bn", "q", "-1,2", 3, VALUE) == "match"
    assert store.check("bn", "q", "-1,2", 3, {"invariant_factors": [], "free_rank": 0}) == "mismatch"
    assert store.check("bn", "q", "-1,2", 4, VALUE) == "missing"


def test_store_stale(tmp_path):

    store = GoldenStore(tmp_path / "golden.json")
    store.record("bn", "q", "-1,2", 3, VALUE)

    data = json.loads(store.path.read_text(encoding="utf-8"))

    for entry in data["entries"].values():
        entry["convention"] = CONVENTION_VERSION + 1

    store.path.write_text(json.dumps(data), encoding="utf-8")

    assert store.check("bn", "q", "-1,2", 3, VALUE) == "stale"


def test_store_file_is_canonical(tmp_path):

    store = GoldenStore(tmp_path / "golden.json")

    store.record("scan", "q", "-1,2->-1,2,3", 3, VALUE)
    store.record("bn", "q", "-1,2", 3, VALUE)

    first = store.path.read_text(encoding="utf-8")

    store.record("bn", "q", "-1,2", 3, VALUE)

    assert store.path.read_text(encoding="utf-8") == first
    assert json.loads(first)["version"] == CONVENTION_VERSION


def test_store_invalid_file(tmp_path):

    path = tmp_path / "golden.json"
    path.write_text("{", encoding="utf-8")

    with pytest.raises(InvalidInputError):
        GoldenStore(path).load()


def test_shipped_golden_file():

    path = Path(__file__).parent.parent / "golden" / "golden.json"
    data = GoldenStore(path).load()

    assert data["version"] == CONVENTION_VERSION


# ---------
# Oracle against the sparse path

data = []

data.append({"field": "q", "n": 3, "chain": "-1,2;-1,2,3"})
data.append({"field": "q", "n": 4, "chain": "-1,2;-1,2,3"})
data.append({"field": "q", "n": 1, "chain": "-1,2;-1,2,3"})
data.append({"field": "fp3", "n": 3, "chain": "t;t,t+1"})


@pytest.mark.parametrize("data", data)
def test_oracle_matches_sparse(data):

    field = parse_field(data["field"])
    supports = parse_support_chain(data["chain"], field)

    dense = golden_values(field, data["n"], supports, oracle=True)
    sparse = golden_values(field, data["n"], supports, oracle=False)

    assert dense == sparse
    assert [command for command, _, _ in dense] == ["bn", "bn", "scan"]


def test_record_then_check(tmp_path):

    store = GoldenStore(tmp_path / "golden.json")
    supports = parse_support_chain("-1,2;-1,2,3")

    assert golden.record(store, QQ, 3, supports) == 3

    results = golden.check(store, QQ, 3, supports)

    assert [r["status"] for r in results] == ["match"] * 3
    assert [r["support"] for r in results] == ["-1,2", "-1,2,3", "-1,2->-1,2,3"]


@pytest.mark.parametrize("oracle", [True, False])
def test_degree_one_is_trivial(oracle):

    supports = parse_support_chain("-1,2;-1,2,3")
    zero = {"invariant_factors": [], "free_rank": 0}

    assert golden_values(QQ, 1, supports, oracle=oracle) == [
        ("bn", "-1,2", zero),
        ("bn", "-1,2,3", zero),
        ("scan", "-1,2->-1,2,3", zero),
    ]


@pytest.mark.parametrize("oracle", [True, False])
def test_degree_two_is_refused(oracle):

    supports = parse_support_chain("-1,2;-1,2,3")

    with pytest.raises(K3IndUnavailableError):
        golden_values(QQ, 2, supports, oracle=oracle)


def test_record_refuses_degree_two(tmp_path):

    store = GoldenStore(tmp_path / "golden.json")

    with pytest.raises(K3IndUnavailableError):
        golden.record(store, QQ, 2, parse_support_chain("-1,2"))

    assert not store.path.exists()


# ---------
# Recorded values

SHIPPED = Path(__file__).parent.parent / "golden" / "golden.json"

data = []

data.append({"command": "bn", "support": "-1,2", "factors": [6], "free_rank": 0})
data.append({"command": "bn", "support": "-1,2,3", "factors": [3, 6], "free_rank": 2})
data.append({"command": "bn", "support": "-1,2,3,5", "factors": [3, 3, 6], "free_rank": 8})
data.append({"command": "scan", "support": "-1,2->-1,2,3", "factors": [6], "free_rank": 0})
data.append({"command": "scan", "support": "-1,2,3->-1,2,3,5", "factors": [3, 6], "free_rank": 2})


@pytest.mark.parametrize("data", data)
def test_shipped_value(data):

    entries = GoldenStore(SHIPPED).load()["entries"]
    entry = entries[GoldenStore.key(data["command"], "q", data["support"], 3)]

    assert entry["convention"] == CONVENTION_VERSION
    assert entry["value"] == {"invariant_factors": data["factors"], "free_rank": data["free_rank"]}


def test_shipped_values_match_the_oracle():

    tag, n, chain = DEFAULT_CASES[0]
    field = parse_field(tag)

    values = golden_values(field, n, parse_support_chain(chain, field), oracle=True)
    expected = {(d["command"], d["support"]): d for d in data}

    assert len(values) == len(expected)

    for command, label, value in values:

        d = expected[(command, label)]
        assert value == {"invariant_factors": d["factors"], "free_rank": d["free_rank"]}


def test_shipped_values_match_the_sparse_path():

    store = GoldenStore(SHIPPED)

    for tag, n, chain in DEFAULT_CASES:

        field = parse_field(tag)
        results = golden.check(store, field, n, parse_support_chain(chain, field))

        assert [r["status"] for r in results] == ["match"] * len(results)
