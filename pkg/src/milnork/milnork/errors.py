#!/usr/bin/env python3
# -*- coding:utf-8 -*-

# -----------
# SPDX-License-Identifier: MIT
# Copyright (c) 2024 milnork contributors

# uuid  : bc8a489c-f609-4e50-a113-af52fc75a496
# date  : 2024-03-02
# -----------

"""
The exceptions raised by the library. The command line tools map them to
exit codes:

- `InvalidInputError` and its children -> 2
- `InvariantViolationError` -> 1

"""

# -------------


class MilnorkError(Exception):
    """
    Root of all library exceptions.
    """

    exit_code = 1


class InvalidInputError(MilnorkError, ValueError):
    """
    The input is malformed, unsupported or refused.
    """

    exit_code = 2


class CapExceededError(InvalidInputError):
    """
    A configured size cap (support size, degree, residue field order,
    matrix size...) would be exceeded.
    """


class FactorizationError(InvalidInputError):
    """
    A field element could not be factored within the configured bounds.
    """


class ValuationError(InvalidInputError):
    """
    An element has the wrong valuation at a place (e.g. a residue is
    requested for a non-unit).
    """


class ResidueFieldTooLargeError(CapExceededError):
    """
    The residue field of a place is larger than the configured cap.
    """


class SupportError(InvalidInputError):
    """
    An element is not an S-unit for the support, or a chain of supports
    is not nested.
    """


class K3IndUnavailableError(InvalidInputError):
    """
    B_2(F) is K_3^ind(F). There is no algorithm for it, so the request is
    refused rather than approximated.
    """

    def __init__(self, message=None):

        super().__init__(
            message
            or (
                "B_2(F) is K_3^ind(F), the indecomposable part of K_3(F). "
                "It is admitted only as a label and cannot be computed; "
                "choose n = 1 or n >= 3."
            )
        )


class NotInImageError(InvalidInputError):
    """
    A requested preimage or lattice coordinate does not exist.
    """


class InvariantViolationError(MilnorkError, AssertionError):
    """
    An invariant that must hold by construction failed (d∘d = 0, a cycle
    check, a certificate...). Signals an implementation bug.
    """

    exit_code = 1
