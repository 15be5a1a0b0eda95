#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 8e024ee3-b35b-434d-8495-82a2b3a85b84
# date  : 2024-03-02
# -----------

"""
On-disk cache of truncated K-groups. One JSON file per (field, S, m)
holding the presentation matrix and the conversion maps, keyed by a hash
of the coordinate convention. Files are written once per key with an
atomic replace; a convention mismatch makes the entry stale and it is
rebuilt.
"""

# ------------
# System Modules - Included with Python

import json
import logging

from pathlib import Path

# ------------
# Custom Modules

from .common import atomic_write_text, canonical_json, content_hash
from .errors import InvalidInputError
from .milnor import TruncatedKGroup, k_group_convention

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


class KGroupCache:
    """

    # Parameters

    folder:pathlib.Path
        - where the cache files live, created on first write

    """

    def __init__(self, folder):
        self.folder = Path(folder)

    def path(self, field, support, degree):
        name = content_hash({"key": f"{support.key}:m={degree}"})[:24]
        return self.folder / f"kgroup-{name}.json"

    def load(self, field, support, degree, caps):
        """
        Return the cached TruncatedKGroup or None on a miss, a stale entry
        or an unreadable file.
        """

        path = self.path(field, support, degree)

        if not path.exists():
            return None

        try:
            data = json.loads(path.read_text(encoding="utf-8"))

        except (OSError, json.JSONDecodeError) as e:
            log.warning("Ignoring unreadable cache file %s: %s", path, e)
            return None

        convention = content_hash(k_group_convention(field, support, degree, caps))

        if data.get("convention") != convention:
            log.info("Stale cache entry %s (convention changed)", path)
            return None

        try:
            group = TruncatedKGroup(
                field, support, degree, caps, state=data["reduction"]
            )

        except (KeyError, TypeError, InvalidInputError) as e:
            log.warning("Ignoring corrupt cache file %s: %s", path, e)
            return None

        if content_hash(group.phi.items_json()) != data.get("presentation_hash"):
            log.warning("Cache file %s does not match the presentation", path)
            return None

        log.debug("cache hit %s", path)
        return group

    def store(self, group):
        """
        Write the group unless a current entry exists.
        """

        path = self.path(group.field, group.support, group.degree)
        convention = content_hash(group.convention())

        if path.exists():
            try:
                if json.loads(path.read_text(encoding="utf-8")).get("convention") == convention:
                    return path

            except (OSError, json.JSONDecodeError):
                pass

        presentation = group.phi.items_json()

        data = {
            "key": group.key,
            "convention": convention,
            "convention_data": group.convention(),
            "presentation": {
                "rows": group.phi.rows,
                "cols": group.phi.cols,
                "entries": presentation,
                "moduli": [m for _, m in group.layout],
            },
            "presentation_hash": content_hash(presentation),
            "reduction": group.reduction.state(),
        }

        atomic_write_text(path, canonical_json(data, indent=None))
        log.debug("cache store %s", path)

        return path
