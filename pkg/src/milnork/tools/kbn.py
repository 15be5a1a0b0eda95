#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 5cf0d890-7e2a-446e-8813-a3ce94f7dc56
# date  : 2024-03-02
# -----------

"""
This module is the main entry point into the `kbn` app. It loads the
configuration and user plugins, configures logging and hands over to
the commands.

JSON goes to stdout (or `--output`), log records and errors go to
stderr. Exit codes: 0 success, 1 invariant violation or failed check,
2 invalid input.
"""

# ------------
# System Modules - Included with Python

import logging

from pathlib import Path

# ------------
# 3rd Party - From pip

import click

from rich.logging import RichHandler

from rich.traceback import install
install(show_locals=False)

# ------------
# Custom Modules

from ..milnork.config import load_config

from .bn import bn
from .chains import chiprime, kappa
from .common import err_console, handle_errors
from .factor import factor
from .golden import golden
from .nf import nf
from .plugins import load_module
from .scan import scan
from .verify import verify

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def setup_logging(verbose=0):
    """
    Configure the root logger once, writing to stderr.
    """

    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO

    elif verbose > 1:
        level = logging.DEBUG

    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def load_plugins(plugin_path):
    """
    Import every python file in `plugin_path` so their `register`
    decorators run.
    """

    if plugin_path is None:
        return

    plugin_path = Path(plugin_path)

    if plugin_path.exists() and plugin_path.is_dir():
        log.info("Searching for plugins (%s)...", plugin_path)

        for f in sorted(plugin_path.glob("*.py")):
            log.info("Found %s, attempting to import...", f)
            load_module(f.stem, str(f))

    else:
        log.warning("Plugin path %s is not a folder.", plugin_path)


@click.group()
@click.version_option(package_name="milnork")
@click.option(
    "--config",
    "-c",
    multiple=True,
    type=click.Path(exists=True),
    help="Pass in the configuration file to control the process. You can pass in multiple files by calling the switch multiple times. The order you pass the files in matters. Any duplicate values will be overwritten by the last file. Default - `milnork.toml` found in the current folder or above.",
)
@click.option(
    "--verbose",
    "-v",
    count=True,
    help="Log to stderr: once for INFO, twice for DEBUG.",
)
@click.pass_context
@handle_errors
def main(*args, **kwargs):
    """
    \b
    Exact computations with the truncated complex of Milnor K-groups,
    its homology B_n and the bar cycles behind it.

    # Usage

    $ kbn factor -- -12/35

    $ kbn nf "{2, 3} + {-1, -1}"

    $ kbn bn --field q --support -1,2,3 --n 3 --json

    $ kbn --config=milnork.toml verify --suite steinberg --count 10000 --seed 7

    $ kbn scan --field q --n 3 --chain "-1,2;-1,2,3;-1,2,3,5"

    """

    # Initialize the shared context object to a dictionary and configure
    # it for the app
    ctx = args[0]
    ctx.ensure_object(dict)

    setup_logging(kwargs["verbose"])

    config = load_config([Path(p) for p in kwargs["config"]])

    # Do we have any plugins that we need to load?
    load_plugins(config.paths.plugin_path)

    # Add the configuration to the context object that will be made
    # available to all the commands
    ctx.obj["cfg"] = config


# --------
# Commands

main.add_command(factor)
main.add_command(nf)
main.add_command(verify)
main.add_command(bn)
main.add_command(scan)
main.add_command(kappa)
main.add_command(chiprime)
main.add_command(golden)
