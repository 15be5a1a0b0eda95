#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : f64ef72e-e59b-49ee-a953-9472144f97a5
# date  : 2024-03-02
# -----------

"""
`verify` runs the registered verification suites with a seeded
generator.
"""

# ------------
# System Modules - Included with Python

import logging

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.errors import InvalidInputError

from .common import console, emit, get_config, get_rng, handle_errors
from .plugins import registered_plugins

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def run_suites(config, names, count, seed=None):
    """

    Run the named suites, each with its own generator seeded from the run
    seed, so that adding a suite does not change the others.

    # Return

    A list of SuiteResult.

    """

    suites = registered_plugins["suite"]

    unknown = [n for n in names if n not in suites]
    if unknown:
        raise InvalidInputError(
            f"Unknown suite(s): {', '.join(unknown)}. Known: {', '.join(sorted(suites))}."
        )

    results = []
    for name in names:

        rng = get_rng(config, seed)
        log.info("running suite %s with %d cases", name, count)

        results.append(suites[name](config=config, count=count, rng=rng))

    return results


@click.command("verify")
@click.option(
    "--suite",
    "-s",
    "suites",
    multiple=True,
    type=str,
    help="The suite to run. Repeat the switch to run several. Default - every registered suite.",
)
@click.option("--count", type=int, default=100, show_default=True, help="Random cases per suite.")
@click.option("--seed", type=int, help="Override the configured random seed.")
@click.option("--field", type=str, help="Field of the complexes used by the complex suites.")
@click.option("--support", type=str, help="Support of the complexes used by the complex suites.")
@click.option("--n", "n", multiple=True, type=int, help="n of the complexes used by the complex suites.")
@click.option(
    "--acceptance",
    is_flag=True,
    help="Also run the complex suites on the wide acceptance supports, n up to 6. Slow.",
)
@click.option("--list", "list_suites", is_flag=True, help="List the registered suites and exit.")
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def verify(*args, **kwargs):
    """
    \b
    Run property suites. Exits 1 when any case fails.

    # Usage

    $ kbn verify --suite steinberg --count 10000 --seed 7

    $ kbn verify --suite dd-zero --field q --support -1,2,3,5,7 --n 3 --n 4

    $ kbn verify --suite h1 --acceptance

    $ kbn verify --list

    """

    ctx = args[0]
    config = get_config(ctx)

    if kwargs["list_suites"]:
        for name, plugin in sorted(registered_plugins["suite"].items()):
            console.print(f"[bold]{name}[/bold] - {plugin.description}")

        return

    if kwargs["count"] < 0:
        raise InvalidInputError("`--count` must be non-negative.")

    if kwargs["field"] or kwargs["support"] or kwargs["n"]:

        if not (kwargs["field"] and kwargs["support"] and kwargs["n"]):
            raise InvalidInputError("`--field`, `--support` and `--n` go together.")

        config = config.with_request(
            field=kwargs["field"], support=kwargs["support"], n=tuple(kwargs["n"])
        )

    if kwargs["acceptance"]:
        config = config.with_request(acceptance=True)

    names = list(kwargs["suites"]) or sorted(registered_plugins["suite"])

    results = run_suites(config, names, kwargs["count"], kwargs["seed"])

    emit([r.to_json() for r in results], "verify", config, kwargs["output"])

    if not all(r.success for r in results):
        ctx.exit(1)
