# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""General exceptions and errors raised by divgraph and its command line tool."""


class DivgraphError(Exception):
    """
    Base class for all divgraph exceptions.

    Attributes:
        exit_code: Process exit status the CLI reports for this error.
    """

    exit_code: int = 1

    def __init__(self, message: str) -> None:
        self.message: str = message
        super().__init__(message)


class InvalidArgumentError(DivgraphError):
    """
    A precondition of an operation was violated (bad n, odd type in A_n, etc).
    """

    exit_code = 2


class CapacityRefusedError(DivgraphError):
    """
    A documented capacity cap or budget would be exceeded.

    Args:
        what: Short name of the cap (e.g. "oracle tally").
        limit: The configured limit.
        requested: The value that was asked for.
    """

    exit_code = 3

    def __init__(self, what: str, limit: int, requested: int) -> None:
        self.what: str = what
        self.limit: int = limit
        self.requested: int = requested
        super().__init__(
            f"Capacity refused for {what}: requested {requested}, limit is {limit}; "
            "raise the budget explicitly to continue"
        )


class InternalInconsistencyError(DivgraphError):
    """
    An internal arithmetic invariant failed; this always signals a bug.
    """

    exit_code = 1


class InputParseError(DivgraphError):
    """
    A line of a user supplied integer file could not be parsed.

    Args:
        line_number: 1-based line number in the input file.
        text: The offending raw line.
    """

    exit_code = 2

    def __init__(self, line_number: int, text: str) -> None:
        self.line_number: int = line_number
        self.text: str = text
        super().__init__(
            f"Line {line_number}: expected a positive decimal integer, got {text!r}"
        )


class UnsupportedInputError(DivgraphError):
    """
    An input integer has a prime factor beyond the trial division bound.
    """

    exit_code = 2
