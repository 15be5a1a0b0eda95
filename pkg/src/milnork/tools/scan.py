#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : fda66b30-ca9f-4ea6-b9f1-9d257d6535e5
# date  : 2024-03-02
# -----------

"""
`scan` follows B_n along a chain of nested supports.
"""

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.bncomplex import stabilization_scan
from ..milnork.parsing import parse_field, parse_support_chain

from .bn import output_options, run_settings
from .common import emit, get_cache, get_config, handle_errors

# -------------


@click.command("scan")
@click.option("--field", "-f", required=True, type=str, help="`q` or `fp<p>`.")
@click.option("--n", "n", required=True, type=int, help="The degree n.")
@click.option(
    "--chain",
    required=True,
    type=str,
    help="Nested supports separated by `;`, e.g. `-1,2;-1,2,3;-1,2,3,5`.",
)
@click.option("--invert", type=int, help="Report invariant factors over Z[1/m].")
@output_options
@click.pass_context
@handle_errors
def scan(*args, **kwargs):
    """
    \b
    Compute B_n at every level of S_1 ⊂ S_2 ⊂ ... ⊂ S_k and the maps
    induced between the levels. The kernels show which classes die.

    # Usage

    $ kbn scan --field q --n 3 --chain "-1,2;-1,2,3;-1,2,3,5"

    """

    config = run_settings(get_config(args[0]), kwargs)
    caps = config.caps

    field = parse_field(kwargs["field"], caps)
    supports = parse_support_chain(kwargs["chain"], field, caps)

    reports = stabilization_scan(
        field,
        kwargs["n"],
        supports,
        caps,
        get_cache(config, not kwargs["no_cache"]),
    )

    data = {
        "field": field.tag,
        "n": kwargs["n"],
        "chain": [str(S) for S in supports],
        "levels": [
            r.to_json(timings=config.run.timings, invert=config.run.invert) for r in reports
        ],
    }

    emit(data, "scan", config, kwargs["output"])
