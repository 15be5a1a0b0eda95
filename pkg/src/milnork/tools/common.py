#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 945bda45-18ce-4573-b77b-6827e85da4ca
# date  : 2024-03-02
# -----------

"""
Methods shared among the various commands.
"""

# ------------
# System Modules - Included with Python

import logging
import random

from functools import wraps
from pathlib import Path

# ------------
# 3rd Party - From pip

import click
import yaml

from rich.console import Console

# ------------
# Custom Modules

from ..milnork.cache import KGroupCache
from ..milnork.common import atomic_write_text
from ..milnork.errors import InvalidInputError, MilnorkError

from .plugins import registered_plugins

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

console = Console()

# errors and log records go to stderr so stdout stays clean JSON
err_console = Console(stderr=True)


def handle_errors(func):
    """
    Map library exceptions to exit codes: 2 for invalid input, 1 for
    invariant violations.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):

        try:
            return func(*args, **kwargs)

        except MilnorkError as e:
            err_console.print(f"[red]{type(e).__name__}: {e}[/red]")
            raise click.exceptions.Exit(e.exit_code) from e

    return wrapper


def get_config(ctx):
    return ctx.obj["cfg"]


def get_rng(config, seed=None):
    """
    The single random generator of a run.
    """

    return random.Random(config.run.seed if seed is None else seed)


def get_cache(config, enabled=True):

    if not enabled:
        return None

    return KGroupCache(config.paths.cache)


def emit(data, kind, config, output=None):
    """

    Render `data` with the configured report format and write it to
    `output` or stdout.

    # Parameters

    data:dict|list
        - JSON-ready report

    kind:str
        - the command name, used by the text format to pick a layout

    config:RunConfig

    output:str|pathlib.Path
        - Default - None, stdout

    """

    fmt = config.run.format
    plugin = registered_plugins["report format"].get(fmt)

    if plugin is None:
        raise InvalidInputError(f"No report format plugin named `{fmt}`.")

    text = plugin(data, kind=kind, console=console)

    if text is None:
        return

    if output:
        atomic_write_text(Path(output), text)
        log.info("wrote %s", output)

    else:
        click.echo(text, nl=False)


def read_yaml(path):
    """
    Load a YAML input file into a dictionary.
    """

    try:
        with Path(path).open("r", encoding="utf-8") as fi:
            data = yaml.safe_load(fi)

    except yaml.YAMLError as e:
        raise InvalidInputError(f"{path}: invalid YAML: {e}") from e

    if not isinstance(data, dict):
        raise InvalidInputError(f"{path}: expected a mapping at the top level.")

    return data
