#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 882e7567-2716-4ddb-8b95-094cfc2aee5d
# date  : 2024-03-02
# -----------

"""
Common methods shared among the rest of the code base.
"""

# ------------
# System Modules - Included with Python

import os
import json
import hashlib
import tempfile

from pathlib import Path
from time import perf_counter

# ------------


def find_file_on_path(path, target):
    """

    Search `path` and each of its parents for `target`. This method will
    traverse up the tree, searching each level.

    # Parameters

    path:pathlib.Path
        - the folder to start the search from.

    target:str
        - The name of the file (or folder) to search for.

    # Return

    The full path to the first `target` found, otherwise None.

    """

    search = [path] + list(path.parents)

    for p in search:

        candidate = p.joinpath(target)
        if candidate.exists():
            return candidate

    return None


def canonical_json(data, indent=2):
    """
    Serialize `data` with sorted keys so that equal data gives identical
    text.
    """

    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False)


def content_hash(data):
    """
    A stable SHA-256 hex digest of JSON-serializable data.
    """

    text = json.dumps(data, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def atomic_write_text(path, text):
    """

    Write `text` to `path` by writing a temporary file in the same folder
    and replacing the target with it. Readers see the old file or the new
    one, never a partial write.

    # Parameters

    path:pathlib.Path
        - the file to write, parent folders are created

    text:str
        - the contents

    """

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)

    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")

    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fo:
            fo.write(text)

        os.replace(tmp, path)

    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


class Timer:
    """
    Context manager recording elapsed wall time in milliseconds.

    ```
    with Timer() as t:
        ...

    t.ms
    ```
    """

    def __enter__(self):
        self._start = perf_counter()
        self.ms = 0.0
        return self

    def __exit__(self, *args):
        self.ms = round((perf_counter() - self._start) * 1000.0, 3)
        return False
