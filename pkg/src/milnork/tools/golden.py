#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : e15620a8-9d3e-42d8-a24f-4bd8c88f1cdb
# date  : 2024-03-02
# -----------

"""
`golden record` stores values computed by the dense oracle; `golden
check` compares the sparse path against them.
"""

# ------------
# System Modules - Included with Python

import logging

from pathlib import Path

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork import golden as store_values
from ..milnork.golden import DEFAULT_CASES, GoldenStore
from ..milnork.parsing import parse_field, parse_support_chain

from .common import console, emit, get_cache, get_config, handle_errors

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def golden_cases(config, kwargs):
    """
    (field, n, supports) for the requested case, or the default cases.
    """

    caps = config.caps

    if kwargs["field"] or kwargs["chain"] or kwargs["n"]:
        cases = [(kwargs["field"] or "q", kwargs["n"] or 3, kwargs["chain"] or DEFAULT_CASES[0][2])]

    else:
        cases = DEFAULT_CASES

    for tag, n, chain in cases:
        field = parse_field(tag, caps)
        yield field, n, parse_support_chain(chain, field, caps)


def case_options(func):

    options = [
        click.option("--field", "-f", type=str, help="`q` or `fp<p>`."),
        click.option("--n", "n", type=int, help="The degree n."),
        click.option("--chain", type=str, help="Supports separated by `;`."),
        click.option(
            "--file",
            "golden_file",
            type=click.Path(dir_okay=False),
            help="The golden file. Default - the configured `paths.golden`.",
        ),
    ]

    for option in reversed(options):
        func = option(func)

    return func


def get_store(config, kwargs):

    path = Path(kwargs["golden_file"]) if kwargs["golden_file"] else config.paths.resolve(config.paths.golden)
    return GoldenStore(path)


@click.group("golden")
def golden():
    """
    \b
    Record and check golden values.
    """

    pass


@golden.command("record")
@case_options
@click.pass_context
@handle_errors
def record(*args, **kwargs):
    """
    \b
    Compute B_n and the induced images with the dense oracle and store
    them.

    # Usage

    $ kbn golden record

    $ kbn golden record --field q --n 3 --chain "-1,2;-1,2,3"

    """

    config = get_config(args[0])
    store = get_store(config, kwargs)

    total = 0
    for field, n, supports in golden_cases(config, kwargs):
        total += store_values.record(store, field, n, supports, config.caps, get_cache(config))

    console.print(f"Recorded {total} entries in {store.path}")


@golden.command("check")
@case_options
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def check(*args, **kwargs):
    """
    \b
    Compare the sparse results with the golden file. Exits 1 unless
    every entry matches: a missing or stale entry fails like a mismatch.

    # Usage

    $ kbn golden check

    """

    ctx = args[0]
    config = get_config(ctx)
    store = get_store(config, kwargs)

    results = []
    for field, n, supports in golden_cases(config, kwargs):
        results.extend(store_values.check(store, field, n, supports, config.caps, get_cache(config)))

    emit(results, "golden", config, kwargs["output"])

    if any(r["status"] != "match" for r in results):
        ctx.exit(1)
