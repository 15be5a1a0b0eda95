#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : d0d58793-530f-44a9-b46b-3f8596bb7020
# date  : 2024-03-02
# -----------

"""
Run configuration. Settings come from an ordered list of TOML files, later
files overriding earlier ones section by section. With no files, a
`milnork.toml` found by walking up from the current folder is used, and
failing that the built-in defaults.

```
[caps]
residue_field = 1000000
support = 6

[run]
seed = 7
format = "json"

[paths]
cache = "~/.cache/milnork"
golden = "golden/golden.json"
```

"""

# ------------
# System Modules - Included with Python

import os
import logging

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

# ------------
# 3rd Party - From pip

import toml

from appdirs import user_cache_dir

# ------------
# Custom Modules

from .common import find_file_on_path
from .errors import InvalidInputError

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

CONFIG_FILENAME = "milnork.toml"

CACHE_ENV = "MILNORK_CACHE_DIR"

FORMATS = ("json", "text")


@dataclass(frozen=True)
class Caps:
    """
    Size limits. Every cap must be a positive integer.
    """

    residue_field: int = 10**6
    support: int = 6
    degree: int = 6
    n: int = 6
    matrix_size: int = 6
    trial_division: int = 10**6
    max_bits: int = 256
    rho_retries: int = 8
    function_field_prime: int = 97
    irreducible_degree: int = 8

    def __post_init__(self):

        for f in fields(self):
            value = getattr(self, f.name)

            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise InvalidInputError(
                    f"Cap `{f.name}` must be a positive integer, got {value!r}."
                )


@dataclass(frozen=True)
class RunSettings:
    seed: int = 7
    format: str = "json"
    jobs: int = 1
    timings: bool = False
    invert: int = 0

    def __post_init__(self):

        if self.format not in FORMATS:
            raise InvalidInputError(
                f"Unknown output format `{self.format}`, expected one of {FORMATS}."
            )

        if self.jobs < 1:
            raise InvalidInputError("`jobs` must be at least 1.")

        if self.invert < 0:
            raise InvalidInputError("`invert` must be non-negative.")


def default_cache_dir():
    """
    The cache folder: the `MILNORK_CACHE_DIR` environment variable if set,
    otherwise the per-user cache folder.
    """

    override = os.environ.get(CACHE_ENV)

    if override:
        return Path(override).expanduser()

    return Path(user_cache_dir("milnork"))


@dataclass(frozen=True)
class Paths:
    root: Path = field(default_factory=Path.cwd)
    cache: Path = field(default_factory=default_cache_dir)
    golden: Path = Path("golden/golden.json")
    plugin_path: Path = None

    def resolve(self, p):
        """
        Resolve a configured path against the configuration root.
        """

        p = Path(p).expanduser()
        return p if p.is_absolute() else self.root / p


@dataclass(frozen=True)
class RunConfig:
    """
    Everything a command needs to run reproducibly. The request fields
    (field, support, n, acceptance) are filled in by the commands.
    """

    caps: Caps = field(default_factory=Caps)
    run: RunSettings = field(default_factory=RunSettings)
    paths: Paths = field(default_factory=Paths)
    field: str = None
    support: str = None
    n: tuple = ()
    acceptance: bool = False

    def with_request(self, **kwargs):
        return replace(self, **kwargs)

    def with_run(self, **kwargs):
        """
        Override run settings, ignoring values that are None (unset
        command line switches).
        """

        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, run=replace(self.run, **kwargs))


def _section(cls, values, name):

    known = {f.name for f in fields(cls)}
    unknown = set(values) - known

    if unknown:
        raise InvalidInputError(
            f"Unknown keys in [{name}]: {', '.join(sorted(unknown))}."
        )

    try:
        return cls(**values)

    except TypeError as e:
        raise InvalidInputError(f"Invalid [{name}] section: {e}") from e


def merge(configs):
    """
    Merge a list of configuration dictionaries. Sections are merged key by
    key, the last value wins.
    """

    merged = {}
    for cfg in configs:
        for section, values in cfg.items():

            if isinstance(values, dict):
                merged.setdefault(section, {}).update(values)

            else:
                merged[section] = values

    return merged


def load_config(files=None, cwd=None):
    """

    Load the configuration and return a `RunConfig`.

    # Parameters

    files:list(pathlib.Path)
        - TOML files to merge in order. Duplicate keys are overwritten by
          the last file.
        - Default - None, search for `milnork.toml` from `cwd` upwards

    cwd:pathlib.Path
        - Where to start the search.
        - Default - None, the current working directory

    # Return

    A RunConfig.

    """

    cwd = cwd or Path.cwd()
    files = list(files or [])

    if not files:
        discovered = find_file_on_path(cwd.resolve(), CONFIG_FILENAME)

        if discovered is not None:
            log.info("Using configuration %s", discovered)
            files = [discovered]

    configs = []
    for f in files:

        try:
            configs.append(toml.load(f))

        except toml.decoder.TomlDecodeError as e:
            raise InvalidInputError(
                f"{f}: TOML error on line {e.lineno} at column {e.colno}."
            ) from e

    config = merge(configs)

    unknown = set(config) - {"caps", "run", "paths"}
    if unknown:
        raise InvalidInputError(f"Unknown sections: {', '.join(sorted(unknown))}.")

    root = Path(files[-1]).resolve().parent if files else cwd.resolve()

    paths = dict(config.get("paths", {}))
    paths["root"] = root

    for key in ("cache", "golden", "plugin_path"):
        if key in paths:
            p = Path(paths[key]).expanduser()
            paths[key] = p if p.is_absolute() else root / p

    if os.environ.get(CACHE_ENV):
        paths["cache"] = default_cache_dir()

    return RunConfig(
        caps=_section(Caps, config.get("caps", {}), "caps"),
        run=_section(RunSettings, config.get("run", {}), "run"),
        paths=_section(Paths, paths, "paths"),
    )
