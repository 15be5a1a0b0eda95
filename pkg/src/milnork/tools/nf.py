#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 1981d27d-095a-46ab-aa9c-36bfbac9542d
# date  : 2024-03-02
# -----------

"""
`nf` prints the canonical coordinates of a Milnor K-class.
"""

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.milnor import MilnorExpression, MilnorSymbol, normal_form
from ..milnork.parsing import parse_expression, parse_field

from .common import emit, get_config, handle_errors

# -------------


@click.command("nf")
@click.argument("expression")
@click.option(
    "--field",
    "-f",
    type=str,
    help="The field: `q` or `fp<p>`. Default - inferred from the `@p=` suffix.",
)
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def nf(*args, **kwargs):
    """
    \b
    Normal form of a symbol or of an integer combination of symbols.

    # Usage

    $ kbn nf "{2, 3}"

    $ kbn nf "{2, 3} + 2{-1, -1} - {5, 7}"

    $ kbn nf "{t, t+1}@p=3"

    """

    config = get_config(args[0])
    caps = config.caps

    field = parse_field(kwargs["field"], caps) if kwargs["field"] else None
    field, terms = parse_expression(kwargs["expression"], field, caps)

    expression = MilnorExpression.of([(c, MilnorSymbol(field, entries)) for c, entries in terms])
    result = normal_form(expression, caps)

    data = {
        "input": kwargs["expression"],
        "expression": str(expression),
        "normal_form": result.to_json(),
        "zero": result.is_zero(),
        "text": str(result),
    }

    emit(data, "nf", config, kwargs["output"])
