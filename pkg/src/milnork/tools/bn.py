#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 161e441f-97e4-467e-80e5-00807231a46f
# date  : 2024-03-02
# -----------

"""
`bn` computes the homology of the truncated complex for one field and
support and one or more n.
"""

# ------------
# System Modules - Included with Python

import logging

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.bncomplex import BnComplexSpec, bn_reports
from ..milnork.config import FORMATS
from ..milnork.parsing import parse_field, parse_support

from .common import emit, get_cache, get_config, handle_errors

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def output_options(func):
    """
    The switches shared by the report commands.
    """

    options = [
        click.option(
            "--format",
            "fmt",
            type=click.Choice(FORMATS),
            help="Report format. Default - the configured `run.format`.",
        ),
        click.option("--json", "as_json", is_flag=True, help="Same as `--format json`."),
        click.option("--output", "-o", type=click.Path(), help="Write the report to a file."),
        click.option(
            "--timings/--no-timings",
            default=None,
            help="Include wall times in the report. Default - the configured `run.timings`.",
        ),
        click.option(
            "--no-cache",
            is_flag=True,
            help="Do not read or write the on-disk K-group cache.",
        ),
    ]

    for option in reversed(options):
        func = option(func)

    return func


def run_settings(config, kwargs):
    """
    Apply the command line overrides to the configured run settings.
    """

    fmt = "json" if kwargs.get("as_json") else kwargs.get("fmt")

    return config.with_run(
        format=fmt,
        timings=kwargs.get("timings"),
        jobs=kwargs.get("jobs"),
        invert=kwargs.get("invert"),
    )


@click.command("bn")
@click.option("--field", "-f", required=True, type=str, help="`q` or `fp<p>`.")
@click.option(
    "--support",
    "-S",
    required=True,
    type=str,
    help="Comma separated places, e.g. `-1,2,3` or `t,t+1@p=3`.",
)
@click.option(
    "--n",
    "n",
    required=True,
    multiple=True,
    type=int,
    help="The degree n. Repeat the switch for several independent complexes.",
)
@click.option("--jobs", "-j", type=int, help="Worker processes for several n. Default - `run.jobs`.")
@click.option(
    "--invert",
    type=int,
    help="Report invariant factors over Z[1/m]. Default - `run.invert` (0, no localisation).",
)
@click.option("--summary", is_flag=True, help="Leave out the per-position kernel and image groups.")
@output_options
@click.pass_context
@handle_errors
def bn(*args, **kwargs):
    """
    \b
    Compute H_2 (B_n) and H_1 of the truncated complex.

    # Usage

    $ kbn bn --field q --support -1,2,3 --n 3 --json

    $ kbn bn --field fp3 --support "t,t+1@p=3" --n 3 --n 4 --jobs 2

    $ kbn bn --field q --support -1,2,3 --n 5 --invert 2

    """

    config = run_settings(get_config(args[0]), kwargs)
    caps = config.caps

    field = parse_field(kwargs["field"], caps)
    support = parse_support(kwargs["support"], field, caps)

    specs = [BnComplexSpec.create(field, n, support, caps) for n in kwargs["n"]]

    reports = bn_reports(
        specs,
        caps,
        get_cache(config, not kwargs["no_cache"]),
        jobs=config.run.jobs,
        details=not kwargs["summary"],
    )

    data = [r.to_json(timings=config.run.timings, invert=config.run.invert) for r in reports]

    emit(data, "bn", config, kwargs["output"])
