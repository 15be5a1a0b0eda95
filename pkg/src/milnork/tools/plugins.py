#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : 9e278d25-6876-4f99-b746-5e1cb65d9118
# date  : 2024-03-02
# -----------

"""
The plugin registry: verification suites for `kbn verify` and the report
formats behind `--format`, with the result type the suites fill in.
"""

# ------------
# System Modules - Included with Python

import importlib.util
import logging

from abc import ABC, abstractmethod

# -------------
# Logging

log = logging.getLogger(__name__)

# -------------


# kind -> {name -> plugin instance}
registered_plugins = {
    "suite": {},  # verification suites run by `kbn verify --suite <name>`
    "report format": {},  # renderers selected by `--format`
}


class SuitePlugin(ABC):
    """
    A verification suite. It draws `count` random cases from `rng` and
    checks one family of identities.

    ```
    @register(name="steinberg")
    class Steinberg(SuitePlugin):
        def __call__(self, config=None, count=100, rng=None):
            # draw `count` cases from rng, result.check(...) each one
    ```
    """

    @property
    @abstractmethod
    def description(self):
        """
        One line shown by `kbn verify --list`.
        """

        pass

    @abstractmethod
    def __call__(self, config=None, count=100, rng=None):
        """

        Run the suite.

        # Parameters

        config:RunConfig
            - caps, cache folder and run settings

        count:int
            - how many random cases to draw

        rng:random.Random
            - the only source of randomness

        # Return

        A SuiteResult.

        """

        pass


class SuiteResult:
    """
    Counts of passed, failed and skipped cases plus the failing inputs.
    """

    def __init__(self, name, count=0):
        self.name = name
        self.count = count
        self.passed = 0
        self.failed = 0
        self.skipped = 0
        self.failures = []

    def ok(self):
        self.passed += 1

    def fail(self, case):

        self.failed += 1

        # keep the report small
        if len(self.failures) < 20:
            self.failures.append(case)

    def skip(self):
        self.skipped += 1

    def check(self, condition, case):

        if condition:
            self.ok()

        else:
            self.fail(case)

    @property
    def success(self):
        return self.failed == 0

    def to_json(self):
        return {
            "suite": self.name,
            "count": self.count,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "success": self.success,
            "failures": self.failures,
        }


class ReportFormatPlugin(ABC):
    """
    Render a report (JSON-ready data) for output.

    ```
    @register(name="json")
    class JSONFormat(ReportFormatPlugin):
        def __call__(self, data, kind=None, console=None):
            return canonical_json(data)
    ```
    """

    @abstractmethod
    def __call__(self, data, kind=None, console=None):
        """

        # Parameters

        data:dict|list
            - the report, as produced by the `to_json` methods

        kind:str
            - the command that produced it (`bn`, `scan`, `verify`...)

        console:rich.console.Console
            - where human readable output goes

        # Return

        The text to write, or None when the plugin printed to the console
        itself.

        """

        pass


def register(name):
    """

    Class decorator: instantiate the plugin and file it under its kind,
    `suite` for a SuitePlugin and `report format` for a
    ReportFormatPlugin.

    # Parameters

    name:str
        - the suite name given to `--suite`, or the format name given to
          `--format`. Names are unique within a kind.

    # Usage

    ```
    @register(name="steinberg")
    class Steinberg(SuitePlugin):
    ```

    """

    def wrapper_register(cls):

        if issubclass(cls, SuitePlugin):
            key = "suite"

        elif issubclass(cls, ReportFormatPlugin):
            key = "report format"

        else:
            raise TypeError(
                f"`{cls.__name__}` is neither a SuitePlugin nor a ReportFormatPlugin."
            )

        if name in registered_plugins[key]:
            raise KeyError(f"A {key} plugin named `{name}` is already registered.")

        registered_plugins[key][name] = cls()

        return cls

    return wrapper_register


def load_module(module_name=None, path=None):
    """
    Execute a python file of user suites or report formats so that its
    `register` decorators run. Called for every file in
    `paths.plugin_path` before a command looks up its plugins.

    # Parameters

    module_name:str
        - the module name, usually the file stem

    path:str
        - the python file, for example `samples/plugins/plugins.py`

    """

    spec = importlib.util.spec_from_file_location(module_name, path)
    mod = importlib.util.module_from_spec(spec)

    spec.loader.exec_module(mod)
    log.debug("loaded plugin module %s", path)
