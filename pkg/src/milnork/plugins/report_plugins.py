#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : e6b59428-47b0-400d-8299-c157c4dd4bab
# date  : 2024-03-02
# -----------

"""
Define the report format plugins: canonical JSON for machines and rich
tables for humans.
"""

# ------------
# System Modules - Included with Python

import json

# ------------
# 3rd Party - From pip

from rich.table import Table

# ------------
# Custom Modules

from ..milnork.common import canonical_json

from ..tools.plugins import ReportFormatPlugin, register

# -------------


def _cell(value):
    """
    Compact text for a table cell.
    """

    if isinstance(value, str):
        return value

    if isinstance(value, bool):
        return "yes" if value else "no"

    return json.dumps(value, sort_keys=True, ensure_ascii=False)


def _group_text(group):

    if not isinstance(group, dict):
        return _cell(group)

    parts = [f"Z/{d}" for d in group.get("invariant_factors", [])]

    rank = group.get("free_rank", 0)
    if rank:
        parts.append("Z" if rank == 1 else f"Z^{rank}")

    return " + ".join(parts) or "0"


@register(name="json")
class JSONFormat(ReportFormatPlugin):
    """
    Sorted keys and a fixed indent: the same data always gives the same
    bytes.
    """

    def __call__(self, data, kind=None, console=None):
        return canonical_json(data) + "\n"


@register(name="text")
class TextFormat(ReportFormatPlugin):
    """
    Print rich tables to the console.
    """

    def __call__(self, data, kind=None, console=None):

        if kind == "bn":
            console.print(self.bn_table(data))

        elif kind == "scan":
            console.print(self.scan_table(data))

        elif kind == "verify":
            console.print(self.verify_table(data))

        elif isinstance(data, list):
            for item in data:
                console.print(self.key_value_table(item, kind))

        else:
            console.print(self.key_value_table(data, kind))

        return None

    @staticmethod
    def bn_table(reports):

        table = Table(title="B_n (truncated)")

        for column in ("field", "S", "n", "H2", "H1", "position generators"):
            table.add_column(column)

        for r in reports:

            spec = r.get("spec", {})
            table.add_row(
                _cell(spec.get("field")),
                _cell(spec.get("support")),
                _cell(spec.get("n")),
                _group_text(r.get("H2")),
                _group_text(r.get("H1")),
                _cell(r.get("position_dims")),
            )

        return table

    @staticmethod
    def scan_table(report):

        table = Table(title=f"stabilization n={report.get('n')} over {report.get('field')}")

        for column in ("S", "H2", "kind", "target", "image", "kernel"):
            table.add_column(column)

        for level in report.get("levels", []):

            support = _cell(level["spec"]["support"])
            h2 = _group_text(level.get("H2"))

            if not level["induced_maps"]:
                table.add_row(support, h2, "", "", "", "")

            for entry in level["induced_maps"]:
                table.add_row(
                    support,
                    h2,
                    _cell(entry.get("kind")),
                    _cell(entry.get("target")),
                    _group_text(entry.get("image")),
                    _group_text(entry.get("kernel")),
                )

        return table

    @staticmethod
    def verify_table(results):

        table = Table(title="verification")

        for column in ("suite", "count", "passed", "failed", "skipped", "success"):
            table.add_column(column)

        for r in results:
            table.add_row(
                r["suite"],
                _cell(r["count"]),
                _cell(r["passed"]),
                _cell(r["failed"]),
                _cell(r["skipped"]),
                "[green]yes[/green]" if r["success"] else "[red]no[/red]",
            )

        return table

    @staticmethod
    def key_value_table(data, kind=None):

        table = Table(title=kind, show_header=False)
        table.add_column("key", style="bold")
        table.add_column("value")

        if not isinstance(data, dict):
            table.add_row("value", _cell(data))
            return table

        for key in sorted(data):
            table.add_row(key, _cell(data[key]))

        return table
