# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""argparse definition of the divgraph command line."""

import argparse

from divgraph.graphs.v1.schemas import GraphKind
from divgraph.theorems.v1.runner import CLAIMS

FORMATS = ("json", "dot", "csv", "text")
GROUPS = ("S", "A")
KINDS = tuple(kind.value for kind in GraphKind)


class UsageError(Exception):
    """Raised instead of exiting when argparse rejects the command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    budgets = parser.add_argument_group(
        "budgets", "raising a budget above its default logs a cost warning"
    )
    budgets.add_argument("--max-build-n", type=int, metavar="N")
    budgets.add_argument("--max-diameter-n", type=int, metavar="N")
    budgets.add_argument("--oracle-tally-n", type=int, metavar="N")
    budgets.add_argument("--oracle-orbit-n", type=int, metavar="N")
    budgets.add_argument("--diameter-vertex-limit", type=int, metavar="V")
    budgets.add_argument("--workers", type=int, metavar="W")


def _add_output_flags(parser: argparse.ArgumentParser, kind: bool = True) -> None:
    if kind:
        parser.add_argument("--kind", choices=KINDS, default=GraphKind.D.value)
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--output", "-o", metavar="PATH")
    parser.add_argument(
        "--factored",
        action="store_true",
        help="add a factors column to csv output (json always has them)",
    )


def build_parser() -> argparse.ArgumentParser:
    """
    Create the top level parser with its sub-commands.

    Returns:
        argparse.ArgumentParser: Parser that raises UsageError on bad input.
    """
    parser = _Parser(
        prog="divgraph",
        description="Divisibility graphs of conjugacy class sizes of S_n and A_n",
    )
    parser.add_argument(
        "--config",
        action="append",
        default=[],
        metavar="FILE",
        help="YAML file merged after the default search list (repeatable)",
    )
    parser.add_argument(
        "--log-level",
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
    )
    parser.add_argument(
        "--timings",
        action="store_true",
        help="include wall times in verdicts and sweep rows",
    )

    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    build = sub.add_parser("build", help="build and export D, Gamma, Delta or B")
    build.add_argument("--group", choices=GROUPS, required=True)
    build.add_argument("--n", type=int, required=True)
    _add_output_flags(build)
    _add_budget_flags(build)

    verify = sub.add_parser("verify", help="run a claim verifier")
    verify.add_argument("claim", choices=CLAIMS)
    verify.add_argument("--group", choices=GROUPS)
    verify.add_argument("--n", type=int, help="check a single degree")
    verify.add_argument("--from", dest="n_from", type=int, metavar="N")
    verify.add_argument("--to", dest="n_to", type=int, metavar="N")
    verify.add_argument("--max-n", type=int, help="oracle: check degrees 1..N")
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.add_argument("--output", "-o", metavar="PATH")
    _add_budget_flags(verify)

    fromfile = sub.add_parser("fromfile", help="build a graph from a file of integers")
    fromfile.add_argument("path")
    _add_output_flags(fromfile)
    _add_budget_flags(fromfile)

    sweep = sub.add_parser("sweep", help="one CSV row of graph statistics per n")
    sweep.add_argument("--group", choices=GROUPS, required=True)
    sweep.add_argument("--from", dest="n_from", type=int, required=True, metavar="N")
    sweep.add_argument("--to", dest="n_to", type=int, required=True, metavar="N")
    sweep.add_argument("--kind", choices=KINDS, default=GraphKind.D.value)
    sweep.add_argument("--output", "-o", metavar="PATH")
    _add_budget_flags(sweep)

    oracle = sub.add_parser("oracle", help="brute force class sizes for one group")
    oracle.add_argument("--group", choices=GROUPS, required=True)
    oracle.add_argument("--n", type=int, required=True)
    oracle.add_argument("--mode", choices=("tally", "orbit"), default="tally")
    oracle.add_argument("--output", "-o", metavar="PATH")
    _add_budget_flags(oracle)

    return parser
