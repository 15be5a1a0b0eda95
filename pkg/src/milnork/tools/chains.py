#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 79b8cb62-ffb0-4db4-8011-7af57a1a7b67
# date  : 2024-03-02
# -----------

"""
`kappa` and `chiprime` write explicit bar chains together with the
certificates that were checked on them.
"""

# ------------
# System Modules - Included with Python

import logging

from math import factorial

# ------------
# 3rd Party - From pip

import click

# ------------
# Custom Modules

from ..milnork.barcycles import (
    bar_boundary,
    block_form_check,
    chi_prime_data,
    kappa_chain,
    kappa_torsion_report,
)
from ..milnork.bncomplex import BnComplexSpec, build, cycle_basis
from ..milnork.errors import InvalidInputError
from ..milnork.parsing import parse_element, parse_field, parse_support

from .common import emit, get_cache, get_config, handle_errors, read_yaml

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


def read_kappa_terms(data, field, caps):
    """

    Read the terms of a kappa input file.

    ```yaml
    n: 3
    field: q
    terms:
      - coefficient: 1
        a: 2
        b: 3
        c: [5]
    ```

    # Return

    A list of (coefficient, a, b, [c_1, ...]).

    """

    terms = data.get("terms")

    if not isinstance(terms, list) or not terms:
        raise InvalidInputError("The input needs a non-empty `terms` list.")

    result = []
    for k, t in enumerate(terms):

        if not isinstance(t, dict) or not {"a", "b"} <= set(t):
            raise InvalidInputError(f"Term {k} needs the keys `a` and `b`.")

        cs = t.get("c", [])
        if not isinstance(cs, list):
            cs = [cs]

        result.append(
            (
                int(t.get("coefficient", 1)),
                parse_element(str(t["a"]), field, caps),
                parse_element(str(t["b"]), field, caps),
                [parse_element(str(c), field, caps) for c in cs],
            )
        )

    return result


@click.command("kappa")
@click.argument("input_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--n", "n", type=int, help="Override the `n` of the input file.")
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def kappa(*args, **kwargs):
    """
    \b
    Build the kappa chain of Σ a ⊗ b ⊗ {c_1, ..., c_{n-2}} read from a
    YAML file and check it. Exits 1 when a check fails.

    # Usage

    $ kbn kappa samples/inputs/kappa3.yaml

    """

    ctx = args[0]
    config = get_config(ctx)
    caps = config.caps

    data = read_yaml(kwargs["input_file"])

    n = kwargs["n"] or data.get("n")
    if not isinstance(n, int):
        raise InvalidInputError("The degree `n` is missing.")

    field = parse_field(str(data.get("field", "q")), caps)
    terms = read_kappa_terms(data, field, caps)

    chain = kappa_chain(n, terms)
    denominator = chain.denominator()

    certificate = {
        "cycle": bar_boundary(chain).is_zero(),
        "block_form": block_form_check(chain, n - 1),
        "denominator": denominator,
        "denominator_divides": factorial(n - 2) % denominator == 0,
        "integral": chain.is_integral(),
    }
    certificate["passed"] = (
        certificate["cycle"] and certificate["block_form"] and certificate["denominator_divides"]
    )

    report = {
        "n": n,
        "field": field.tag,
        "chain": chain.to_json(),
        "certificate": certificate,
        "torsion": kappa_torsion_report(n, terms, caps),
    }

    emit(report, "kappa", config, kwargs["output"])

    if not certificate["passed"]:
        ctx.exit(1)


def read_elements(data, C):
    """
    The `elements` list of a chiprime input file: vectors of P_2.
    """

    elements = data.get("elements")

    if not isinstance(elements, list):
        raise InvalidInputError("The input needs an `elements` list of integer vectors.")

    width = C.positions[2].ngens

    for k, x in enumerate(elements):
        if not isinstance(x, list) or len(x) != width or not all(isinstance(v, int) for v in x):
            raise InvalidInputError(f"Element {k} must be a list of {width} integers.")

    return elements


@click.command("chiprime")
@click.option("--field", "-f", required=True, type=str, help="`q` or `fp<p>`.")
@click.option("--support", "-S", required=True, type=str, help="Comma separated places.")
@click.option("--n", "n", required=True, type=int, help="The degree n, at least 3.")
@click.option(
    "--input",
    "input_file",
    type=click.Path(exists=True, dir_okay=False),
    help="YAML file with `elements` of P_2. Default - a basis of the kernel of δ_2.",
)
@click.option("--no-cache", is_flag=True, help="Do not use the on-disk K-group cache.")
@click.option("--output", "-o", type=click.Path(), help="Write the report to a file.")
@click.pass_context
@handle_errors
def chiprime(*args, **kwargs):
    """
    \b
    For elements x of the kernel of δ_2, write the u_31 chains of chi'
    and the certificate that the t_2'' component vanishes. Exits 1 when
    a certificate fails.

    # Usage

    $ kbn chiprime --field q --support -1,2 --n 3

    """

    ctx = args[0]
    config = get_config(ctx)
    caps = config.caps

    field = parse_field(kwargs["field"], caps)
    support = parse_support(kwargs["support"], field, caps)

    C = build(
        BnComplexSpec.create(field, kwargs["n"], support, caps),
        caps,
        get_cache(config, not kwargs["no_cache"]),
    )

    if kwargs["input_file"]:
        elements = read_elements(read_yaml(kwargs["input_file"]), C)

    else:
        elements = cycle_basis(C, 2)

    results = [chi_prime_data(C, x).to_json() for x in elements]
    log.info("chi' certificates for %d elements", len(results))

    report = {
        "spec": C.spec.to_json(),
        "elements": results,
        "passed": all(r["certificate"]["passed"] for r in results),
    }

    emit(report, "chiprime", config, kwargs["output"])

    if not report["passed"]:
        ctx.exit(1)
