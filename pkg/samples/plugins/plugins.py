#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid:   ae681041-9a55-4d58-b54b-8379cc4d9191
# date:   2024-03-02
# -----------

"""
This is a sample file demonstrating how to construct the types of
plugins the system recognizes. Point `paths.plugin_path` at the folder
holding it and run:

```
$ kbn --config=milnork.toml verify --suite hilbert-bimultiplicative
$ kbn --config=milnork.toml --verbose bn --field q --support -1,2 --n 3 --format text
```

"""

# ------------
# System Modules - Included with Python

import logging

# ------------
# Custom Modules

from milnork.milnork.barcycles import random_rational
from milnork.milnork.config import RunConfig
from milnork.milnork.errors import FactorizationError
from milnork.milnork.fields import QQ
from milnork.milnork.milnor import symbol_normal_form

from milnork.tools.plugins import SuitePlugin, SuiteResult, register

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


@register(name="hilbert-bimultiplicative")
class HilbertBimultiplicative(SuitePlugin):
    """
    The 2-adic Hilbert symbol is multiplicative in its first argument:
    (ab, c)_2 = (a, c)_2 (b, c)_2.
    """

    @property
    def description(self):
        return "(ab, c)_2 = (a, c)_2 (b, c)_2 on random rationals"

    def __call__(self, config=None, count=100, rng=None):

        caps = (config or RunConfig()).caps
        result = SuiteResult("hilbert-bimultiplicative", count)

        for _ in range(count):

            a, b, c = (random_rational(rng, 100) for _ in range(3))

            try:
                ua, ub, uc = (QQ.factor(x, caps) for x in (a, b, c))

            except FactorizationError:
                result.skip()
                continue

            lhs = symbol_normal_form(QQ, [ua * ub, uc], caps).hilbert
            rhs = (
                symbol_normal_form(QQ, [ua, uc], caps).hilbert
                * symbol_normal_form(QQ, [ub, uc], caps).hilbert
            )

            result.check(lhs == rhs, {"a": str(a), "b": str(b), "c": str(c)})

        return result
