#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 869f94c0-cc0c-4b7c-a48f-ac95b58d8200
# date  : 2024-03-02
# -----------

"""
The default verification suites. Each draws its random cases from the
generator it is handed, so a fixed seed gives a fixed run.
"""

# ------------
# System Modules - Included with Python

import logging

from math import factorial

# ------------
# Custom Modules

from ..milnork.barcycles import (
    bar_boundary,
    block_form_check,
    c_cycle,
    exterior_class,
    kappa_chain,
    random_chain,
    random_diagonal_family,
    random_rational,
    random_torus_chain,
    random_torus_element,
    wedge,
    chi_prime_data,
)
from ..milnork.bncomplex import (
    BnComplexSpec,
    build,
    cycle_basis,
    h1_check,
    section_inverse_check,
    theta,
)
from ..milnork.config import RunConfig
from ..milnork.errors import FactorizationError, InvalidInputError
from ..milnork.fields import QQ, PolyFraction, factor, product_formula, weil_reciprocity
from ..milnork.milnor import steinberg_check
from ..milnork.parsing import parse_field, parse_support

from ..tools.plugins import SuitePlugin, SuiteResult, register

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------

# (field, support, n) used when the run configuration names none
DEFAULT_COMPLEXES = [
    ("q", "-1,2,3", 3),
    ("q", "-1,2,3", 4),
    ("fp3", "t,t+1@p=3", 3),
]

# the widest supports the acceptance runs build
WIDE_Q = "-1,2,3,5,7"
WIDE_FP3 = "t,t+1,t^2+1@p=3"

# added per suite by `kbn verify --acceptance`
ACCEPTANCE_COMPLEXES = {
    "dd-zero": [(tag, S, n) for tag, S in (("q", WIDE_Q), ("fp3", WIDE_FP3)) for n in (3, 4, 5, 6)],
    "h1": [(tag, S, n) for tag, S in (("q", WIDE_Q), ("fp3", WIDE_FP3)) for n in (3, 4, 5)],
    "section-inverse": [("q", "-1,2,3,5", n) for n in (3, 4, 5)],
    "chi-prime": [("q", "-1,2,3", 4)],
}


def complexes(config, cases=None, minimum_n=1, suite=None):
    """

    Build the complexes for the configured request, or for `cases`. With
    `config.acceptance` set, the acceptance cases of `suite` follow.

    # Parameters

    cases:list((str, str, int))
        - (field tag, support, n)
        - Default - None, DEFAULT_COMPLEXES

    minimum_n:int
        - smaller n are skipped, as is n = 2

    suite:str
        - key into ACCEPTANCE_COMPLEXES

    """

    config = config or RunConfig()
    caps = config.caps

    cases = list(cases or DEFAULT_COMPLEXES)

    if config.field and config.support and config.n:
        cases = [(config.field, config.support, n) for n in config.n]

    elif config.acceptance:
        cases.extend(ACCEPTANCE_COMPLEXES.get(suite, []))

    for tag, support, n in cases:

        if n < minimum_n or n == 2:
            continue

        field = parse_field(tag, caps)
        S = parse_support(support, field, caps)

        yield build(BnComplexSpec.create(field, n, S, caps), caps)


def _caps(config):
    return (config or RunConfig()).caps


@register(name="steinberg")
class Steinberg(SuitePlugin):
    """
    {a, 1-a} = 0, {a, -a} = 0 and {a, b} = -{b, a} on random rationals.
    """

    @property
    def description(self):
        return "Steinberg relations on random rationals of height <= 1000"

    def __call__(self, config=None, count=100, rng=None):

        caps = _caps(config)
        result = SuiteResult("steinberg", count)

        for _ in range(count):

            a = random_rational(rng, 1000)
            b = random_rational(rng, 1000)

            if a == 1:
                result.skip()
                continue

            try:
                report = steinberg_check(a, QQ, [b], caps)

            except FactorizationError:
                result.skip()
                continue

            result.check(report["passed"], {"a": str(a), "b": str(b)})

        return result


@register(name="product-formula")
class ProductFormula(SuitePlugin):
    """
    The product of the Hilbert symbols over all places of Q is 1.
    """

    @property
    def description(self):
        return "Hilbert product formula on random rational pairs"

    def __call__(self, config=None, count=100, rng=None):

        caps = _caps(config)
        result = SuiteResult("product-formula", count)

        for _ in range(count):

            a = random_rational(rng, 1000)
            b = random_rational(rng, 1000)

            try:
                value = product_formula(a, b, caps)

            except FactorizationError:
                result.skip()
                continue

            result.check(value == 1, {"a": str(a), "b": str(b)})

        return result


@register(name="weil-reciprocity")
class WeilReciprocity(SuitePlugin):
    """
    The norms of the tame symbols over all places of F_3(t), infinity
    included, multiply to 1.
    """

    @property
    def description(self):
        return "Weil reciprocity on random elements of F_3(t)"

    def __call__(self, config=None, count=100, rng=None):

        caps = _caps(config)
        p = 3

        result = SuiteResult("weil-reciprocity", count)

        def element():
            while True:
                num = [rng.randint(0, p - 1) for _ in range(rng.randint(1, 4))]
                den = [1] + [rng.randint(0, p - 1) for _ in range(rng.randint(0, 3))]

                x = PolyFraction.make(num, den, p)
                if not x.is_zero():
                    return x

        for _ in range(count):

            a, b = element(), element()

            try:
                ua = factor(a, caps)
                ub = factor(b, caps)

            except InvalidInputError:
                result.skip()
                continue

            result.check(
                weil_reciprocity(ua, ub, caps.residue_field) == 1,
                {"a": str(a), "b": str(b)},
            )

        return result


@register(name="dd-zero")
class DDZero(SuitePlugin):
    """
    δ_i ∘ δ_{i+1} = 0: the matrix check done at build time plus random
    elements of every position.
    """

    @property
    def description(self):
        return "d∘d = 0 on built complexes and random elements"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("dd-zero", count)

        for C in complexes(config, suite="dd-zero"):

            result.check(C.complex.verify(), {"spec": C.spec.to_json()})

            for i in range(2, C.n + 1):
                for _ in range(count):

                    x = C.random_element(i, rng)
                    y = C.delta(i - 1, C.delta(i, x))

                    result.check(not any(y), {"spec": C.spec.to_json(), "position": i, "x": x})

        return result


@register(name="bar-cycles")
class BarCycles(SuitePlugin):
    """
    ∂∂ = 0 on random chains and ∂c = 0 for random commuting diagonal
    families.
    """

    @property
    def description(self):
        return "bar differential and c-cycles on random matrices"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("bar-cycles", count)

        for _ in range(count):

            n = rng.randint(1, 5)
            size = rng.randint(1, 4)

            family = random_diagonal_family(rng, n, size)
            result.check(
                bar_boundary(c_cycle(*family)).is_zero(),
                {"test": "c-cycle", "n": n, "size": size},
            )

            degree = rng.randint(2, 4)
            size = rng.randint(1, 3)

            chain = random_chain(rng, degree, size, terms=2)
            result.check(
                bar_boundary(bar_boundary(chain)).is_zero(),
                {"test": "boundary", "degree": degree, "size": size},
            )

        return result


@register(name="exterior")
class Exterior(SuitePlugin):
    """
    The exterior class kills boundaries, sends c(g_1, ..., g_n) to
    n!·(g_1 ∧ ... ∧ g_n) and is additive in each argument.
    """

    @property
    def description(self):
        return "exterior class projection on random torus chains"

    def __call__(self, config=None, count=100, rng=None):

        caps = _caps(config)
        result = SuiteResult("exterior", count)

        S = parse_support("-1,2,3,5", QQ, caps)

        for _ in range(count):

            rank = rng.randint(1, 3)
            degree = rng.randint(2, 5)

            chain = random_torus_chain(rng, S, degree, rank, terms=2)
            result.check(
                exterior_class(bar_boundary(chain), caps).is_zero(),
                {"test": "boundary", "degree": degree, "rank": rank},
            )

            n = rng.randint(1, 4)
            family = [random_torus_element(rng, S, rank) for _ in range(n)]

            result.check(
                exterior_class(c_cycle(*family), caps) == wedge(*family, caps=caps).scale(factorial(n)),
                {"test": "c-cycle", "n": n, "rank": rank},
            )

            g = random_torus_element(rng, S, rank)
            h = random_torus_element(rng, S, rank)

            lhs = exterior_class(c_cycle(g * h, *family[1:]), caps)
            rhs = exterior_class(c_cycle(g, *family[1:]), caps) + exterior_class(
                c_cycle(h, *family[1:]), caps
            )

            result.check(lhs == rhs, {"test": "multiplicativity", "n": n, "rank": rank})

        return result


@register(name="section-inverse")
class SectionInverse(SuitePlugin):
    """
    The section of δ_1 is inverse to δ̄_1 on generators and on random
    elements modulo im δ_2.
    """

    @property
    def description(self):
        return "section of δ_1 inverts δ̄_1"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("section-inverse", count)

        for C in complexes(config, minimum_n=3, suite="section-inverse"):

            report = section_inverse_check(C, samples=count, rng=rng)
            result.check(report["passed"], {"spec": C.spec.to_json(), "report": report})

        return result


@register(name="h1")
class H1(SuitePlugin):
    """
    ker δ_1 = im δ_2 for n >= 3.
    """

    @property
    def description(self):
        return "homology at position 1 is trivial for n >= 3"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("h1", count)

        for C in complexes(config, minimum_n=3, suite="h1"):

            check = h1_check(C)
            result.check(check.passed, {"spec": C.spec.to_json(), "witness": check.witness})

        return result


@register(name="theta")
class Theta(SuitePlugin):
    """
    δ̄_1(θ(c ⊗ (a ∧ b))) = 0 for random S-unit triples.
    """

    @property
    def description(self):
        return "θ lands in the kernel of δ̄_1"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("theta", count)

        for C in complexes(config, cases=[("q", "-1,2,3", 3), ("fp3", "t,t+1@p=3", 3)], minimum_n=3):

            if C.n != 3:
                continue

            for _ in range(count):

                a, b, c = (C.support.random_unit(rng) for _ in range(3))
                y = C.delta(1, theta(C, c, a, b))

                result.check(
                    not any(y), {"a": str(a), "b": str(b), "c": str(c), "spec": C.spec.to_json()}
                )

        return result


@register(name="kappa")
class Kappa(SuitePlugin):
    """
    The kappa chains are cycles made of diagonal diag(M, 1) blocks with
    denominators dividing (n - 2)!.
    """

    @property
    def description(self):
        return "kappa chains for n = 3, 4"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("kappa", count)

        for n in (3, 4):
            for _ in range(count):

                terms = [
                    (
                        rng.randint(-2, 2) or 1,
                        random_rational(rng, 6),
                        random_rational(rng, 6),
                        [random_rational(rng, 6) for _ in range(n - 2)],
                    )
                    for _ in range(rng.randint(1, 2))
                ]

                chain = kappa_chain(n, terms)
                case = {"n": n, "terms": [[str(x) for x in t[:3]] + [[str(c) for c in t[3]]] for t in terms]}

                result.check(bar_boundary(chain).is_zero(), dict(case, test="cycle"))
                result.check(block_form_check(chain, n - 1), dict(case, test="block form"))
                result.check(
                    factorial(n - 2) % chain.denominator() == 0,
                    dict(case, test="denominator"),
                )

        return result


@register(name="chi-prime")
class ChiPrime(SuitePlugin):
    """
    Every generator of ker δ_2 gives a passing chi' certificate.
    """

    @property
    def description(self):
        return "chi' certificates on the kernel of δ_2"

    def __call__(self, config=None, count=100, rng=None):

        result = SuiteResult("chi-prime", count)

        cases = [("q", "-1,2", 3), ("q", "-1,2", 4), ("q", "-1,2,3", 3)]

        for C in complexes(config, cases=cases, minimum_n=3, suite="chi-prime"):
            for x in cycle_basis(C, 2)[:count]:

                data = chi_prime_data(C, x)
                result.check(
                    data.certificate["passed"], {"spec": C.spec.to_json(), "x": list(x)}
                )

        return result
