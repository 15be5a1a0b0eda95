#!/usr/bin/env python3
# -*- coding:utf-8 -*-

"""
-----------
SPDX-License-Identifier: MIT
Copyright (c) 2024 milnork contributors

uuid       = 3e8b07d2-91c4-4f6a-b5e0-7c2a4d19f86b
date       = 2024-03-02
-----------
"""

import pytest

from milnork.milnork.common import (
    Timer,
    atomic_write_text,
    canonical_json,
    content_hash,
    find_file_on_path,
)

# ---------
# find_file_on_path


def test_find_file_on_path(tmp_path):

    nested = tmp_path / "a" / "b" / "c"
    nested.mkdir(parents=True)

    target = tmp_path / "a" / "milnork.toml"
    target.write_text("", encoding="utf-8")

    assert find_file_on_path(nested, "milnork.toml") == target
    assert find_file_on_path(target.parent, "milnork.toml") == target
    assert find_file_on_path(nested, "no-such-file.toml") is None


# ---------
# canonical_json and content_hash

data = []

data.append({"left": {"b": 1, "a": [1, 2]}, "right": {"a": [1, 2], "b": 1}, "equal": True})
data.append({"left": {"a": [1, 2]}, "right": {"a": [2, 1]}, "equal": False})
data.append({"left": {"x": "∂"}, "right": {"x": "∂"}, "equal": True})


@pytest.mark.parametrize("data", data)
def test_canonical_json(data):

    left, right = data["left"], data["right"]

    assert (canonical_json(left) == canonical_json(right)) == data["equal"]
    assert (content_hash(left) == content_hash(right)) == data["equal"]


def test_content_hash_format():

    digest = content_hash({"field": "q"})

    assert len(digest) == 64
    assert int(digest, 16) >= 0


# ---------
# atomic_write_text


def test_atomic_write_text(tmp_path):

    path = tmp_path / "out" / "report.json"

    atomic_write_text(path, "first")
    assert path.read_text(encoding="utf-8") == "first"

    atomic_write_text(path, "second")
    assert path.read_text(encoding="utf-8") == "second"

    # no temporary files are left behind
    assert [p.name for p in path.parent.iterdir()] == ["report.json"]


# ---------
# Timer


def test_timer():

    with Timer() as t:
        sum(range(1000))

    assert t.ms >= 0
