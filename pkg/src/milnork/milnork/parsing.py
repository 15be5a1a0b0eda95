#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : f35d740c-7019-4db1-925d-b2d9afdfa1f0
# date  : 2024-03-02
# -----------

"""
Rules for reading the text syntaxes used on the command line and in input
files:

- fields: `q`, `fp3` (also `f3`)
- rationals: `-12/5`, `7`
- elements of F_p(t): `(2*t^2+2*t)/(t^2+1)@p=3`, `t+1@p=3`
- symbols: `{3, -2}`, `{t, t+1}@p=3`
- expressions: `{2, 3} + 2{-1, -1} - {5, 7}`
- supports: `-1,2,3`, `t,t+1,t^2+1@p=3`

"""

# ------------
# System Modules - Included with Python

import re

from abc import ABC, abstractmethod
from fractions import Fraction

# ------------
# Custom Modules

from .errors import InvalidInputError
from .fields import (
    QQ,
    FunctionField,
    Place,
    PolyFraction,
    RationalField,
    Support,
)

# -------------


class MatchRule(ABC):
    """
    A regex based rule. Given a string, it decides whether the string
    matches and extracts the data it describes. Results are memoized per
    string.
    """

    def __init__(self, **kwargs):
        """

        # Parameters (kwargs)

        key: str
            - A reference key to identify this rule

        """

        self.kwargs = kwargs
        self.key = kwargs.get("key")

        # memoization - store the match results keyed by string
        self.cache_results = {}

        self.regex = None
        self._build_regex()

    def _get_match_result(self, line):

        if line not in self.cache_results:
            self.cache_results[line] = self._find_result(line)

        return self.cache_results[line]

    @abstractmethod
    def _build_regex(self):
        pass

    def _find_result(self, line):
        return self.regex.match(line.strip())

    def match(self, line):
        return self._get_match_result(line) is not None

    @abstractmethod
    def extract_data(self, line, **kwargs):
        """
        Return the parsed value. Raises InvalidInputError if the line does
        not match.
        """
        pass

    def _require(self, line):

        result = self._get_match_result(line)

        if result is None:
            raise InvalidInputError(f"Cannot read {self.key or 'value'}: `{line}`.")

        return result


class FieldRule(MatchRule):
    """
    `q` for the rationals, `fp<p>` or `f<p>` for F_p(t).
    """

    def _build_regex(self):
        self.regex = re.compile(r"^(?:(?P<q>[qQ])|[fF][pP]?(?P<p>\d+))$")

    def extract_data(self, line, **kwargs):

        result = self._require(line)

        if result.group("q"):
            return QQ

        return FunctionField.create(int(result.group("p")), kwargs.get("caps"))


class RationalRule(MatchRule):
    """
    A rational `±a/b` or an integer.
    """

    def _build_regex(self):
        self.regex = re.compile(
            r"^(?P<sign>[+-]?)\s*(?P<num>\d+)\s*(?:/\s*(?P<den>\d+))?$"
        )

    def extract_data(self, line, **kwargs):

        result = self._require(line)

        den = int(result.group("den") or 1)
        if den == 0:
            raise InvalidInputError(f"Zero denominator in `{line}`.")

        x = Fraction(int(result.group("num")), den)
        return -x if result.group("sign") == "-" else x


class PolyRule(MatchRule):
    """
    A polynomial in `t` with integer coefficients, e.g. `2*t^2+2*t+1`.
    Returns the coefficient list, highest degree first.
    """

    def _build_regex(self):
        self.regex = re.compile(r"^[+-]?[0-9t*^+-]+$")
        self.term = re.compile(r"^(?:(?P<c>\d+)\*?)?(?P<t>t(?:\^(?P<e>\d+))?)?$")

    def _find_result(self, line):

        text = re.sub(r"\s+", "", line)

        while text.startswith("(") and text.endswith(")"):
            text = text[1:-1]

        if not text or self.regex.match(text) is None:
            return None

        degrees = {}
        for sign, body in re.findall(r"([+-]?)([^+-]+)", text):

            m = self.term.match(body)

            if m is None or not (m.group("c") or m.group("t")):
                return None

            c = int(m.group("c") or 1)
            d = 0
            if m.group("t"):
                d = int(m.group("e") or 1)

            degrees[d] = degrees.get(d, 0) + (-c if sign == "-" else c)

        top = max(degrees)
        return [degrees.get(d, 0) for d in range(top, -1, -1)]

    def extract_data(self, line, **kwargs):
        return self._require(line)


class PolyFractionRule(MatchRule):
    """
    An element of F_p(t): `num/den@p=3`, `poly@p=3`. The `@p=` suffix can
    be omitted when the field is passed in.
    """

    def __init__(self, **kwargs):
        self.poly = PolyRule(key="polynomial")
        super().__init__(**kwargs)

    def _build_regex(self):
        self.regex = re.compile(r"^(?P<body>[^@]+?)\s*(?:@\s*p\s*=\s*(?P<p>\d+))?$")

    def extract_data(self, line, **kwargs):

        result = self._require(line)

        field = kwargs.get("field")
        p = int(result.group("p")) if result.group("p") else None

        if p is None:
            if not isinstance(field, FunctionField):
                raise InvalidInputError(f"`{line}` needs a `@p=` suffix.")

            p = field.p

        elif isinstance(field, FunctionField) and field.p != p:
            raise InvalidInputError(f"`{line}` is not an element of {field}.")

        body = re.sub(r"\s+", "", result.group("body"))

        depth = 0
        split = None
        for k, ch in enumerate(body):
            if ch == "(":
                depth += 1

            elif ch == ")":
                depth -= 1

            elif ch == "/" and depth == 0:
                split = k

        num, den = (body, "1") if split is None else (body[:split], body[split + 1 :])

        return PolyFraction.make(
            self.poly.extract_data(num), self.poly.extract_data(den), p
        )


field_rule = FieldRule(key="field")
rational_rule = RationalRule(key="rational")
poly_rule = PolyRule(key="polynomial")
poly_fraction_rule = PolyFractionRule(key="rational function")

_suffix = re.compile(r"@\s*p\s*=\s*(?P<p>\d+)\s*$")


def split_suffix(text):
    """
    Split a trailing `@p=...` suffix: returns (text, p or None).
    """

    m = _suffix.search(text)

    if m is None:
        return text.strip(), None

    return text[: m.start()].strip(), int(m.group("p"))


def parse_field(text, caps=None):
    return field_rule.extract_data(text.strip(), caps=caps)


def infer_field(text, caps=None):
    """
    The field implied by the text: F_p(t) when there is a `@p=` suffix,
    otherwise Q.
    """

    m = re.search(r"@\s*p\s*=\s*(\d+)", text)

    if m is None:
        return QQ

    return FunctionField.create(int(m.group(1)), caps)


def parse_element(text, field=None, caps=None):
    """
    A field element: a Fraction over Q or a PolyFraction over F_p(t).
    """

    field = field or infer_field(text, caps)

    if isinstance(field, RationalField):

        if "@" in text:
            raise InvalidInputError(f"`{text}` is not a rational number.")

        return rational_rule.extract_data(text.strip())

    return poly_fraction_rule.extract_data(text.strip(), field=field)


def parse_unit(text, field=None, caps=None):
    """
    Parse and factor a non-zero field element.
    """

    field = field or infer_field(text, caps)
    return field.factor(parse_element(text, field, caps), caps)


class SymbolRule(MatchRule):
    """
    `{a, b, c}` with an optional trailing `@p=` applying to every entry.
    """

    def _build_regex(self):
        self.regex = re.compile(
            r"^\{(?P<entries>[^{}]*)\}\s*(?:@\s*p\s*=\s*(?P<p>\d+))?$"
        )

    def extract_data(self, line, **kwargs):

        result = self._require(line)

        field = kwargs.get("field")
        caps = kwargs.get("caps")

        if result.group("p"):
            field = FunctionField.create(int(result.group("p")), caps)

        entries = [e for e in result.group("entries").split(",") if e.strip()]

        if field is None:
            field = infer_field(line, caps)

        return field, [parse_unit(e, field, caps) for e in entries]


class ExpressionRule(MatchRule):
    """
    A formal integer combination of symbols: `{2, 3} + 2{-1, -1} - {5, 7}`.
    """

    def _build_regex(self):
        self.regex = re.compile(
            r"^\s*(?:[+-]?\s*\d*\s*\*?\s*\{[^{}]*\}\s*)+(?:@\s*p\s*=\s*\d+)?$"
        )
        self.term = re.compile(r"(?P<sign>[+-]?)\s*(?P<c>\d*)\s*\*?\s*\{(?P<body>[^{}]*)\}")

    def extract_data(self, line, **kwargs):

        self._require(line)

        caps = kwargs.get("caps")
        text, p = split_suffix(line)

        field = kwargs.get("field")
        if p is not None:
            field = FunctionField.create(p, caps)

        if field is None:
            field = QQ

        terms = []
        for m in self.term.finditer(text):

            c = int(m.group("c") or 1)
            if m.group("sign") == "-":
                c = -c

            entries = [e for e in m.group("body").split(",") if e.strip()]
            terms.append((c, [parse_unit(e, field, caps) for e in entries]))

        return field, terms


symbol_rule = SymbolRule(key="symbol")
expression_rule = ExpressionRule(key="expression")


def parse_symbol(text, field=None, caps=None):
    """
    Return (field, entries) for a symbol `{a, b, ...}`.
    """

    return symbol_rule.extract_data(text.strip(), field=field, caps=caps)


def parse_expression(text, field=None, caps=None):
    """
    Return (field, [(coefficient, entries), ...]).
    """

    return expression_rule.extract_data(text.strip(), field=field, caps=caps)


def parse_support(text, field=None, caps=None):
    """
    A comma separated list of places. Over Q, `-1` names the (implicit)
    sign generator and the other entries are primes. Over F_p(t) the
    entries are monic irreducible polynomials.
    """

    body, p = split_suffix(text)

    if p is not None:
        suffixed = FunctionField.create(p, caps)

        if field is not None and field != suffixed:
            raise InvalidInputError(f"Support `{text}` does not belong to {field}.")

        field = suffixed

    field = field or QQ

    places = []
    for entry in (e.strip() for e in body.split(",")):

        if not entry:
            continue

        if isinstance(field, RationalField):

            value = rational_rule.extract_data(entry)

            if value == -1:
                continue

            if value.denominator != 1 or value <= 1:
                raise InvalidInputError(f"Support entry `{entry}` is not a prime.")

            places.append(Place.rational(int(value)))

        else:
            places.append(Place.irreducible(poly_rule.extract_data(entry), field.p))

    return Support.of(field, places, caps)


def parse_support_chain(text, field=None, caps=None):
    """
    Supports separated by `;`, e.g. `-1,2;-1,2,3`.
    """

    return [parse_support(s, field, caps) for s in text.split(";") if s.strip()]
