#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 98bec54c-1fbb-496b-a86f-f303e1b3f97a
# date  : 2024-03-02
# -----------

"""
`factor` prints the factored form of a field element.
"""

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.parsing import parse_field, parse_unit

from .common import emit, get_config, handle_errors

# -------------


@click.command("factor")
@click.argument("element")
@click.option(
    "--field",
    "-f",
    type=str,
    help="The field: `q` or `fp<p>`. Default - inferred from the `@p=` suffix.",
)
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def factor(*args, **kwargs):
    """
    \b
    Factor a non-zero field element into its torsion part and the
    exponents at finitely many places.

    # Usage

    $ kbn factor -- -12/35

    $ kbn factor "(2*t^2+2*t)/(t^2+1)@p=3"

    """

    config = get_config(args[0])
    caps = config.caps

    field = parse_field(kwargs["field"], caps) if kwargs["field"] else None
    u = parse_unit(kwargs["element"], field, caps)

    data = {
        "input": kwargs["element"],
        "unit": u.to_json(),
        "value": str(u),
        "places": [str(p) for p in u.places],
    }

    emit(data, "factor", config, kwargs["output"])
