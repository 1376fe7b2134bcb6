# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Entry point of the divgraph command line.

Exit statuses: 0 success or pass, 1 verifier fail or internal error, 2 usage
or invalid input, 3 capacity refused.
"""

import logging
import sys
from typing import Optional, Sequence

from divgraph.cli.v1.commands import COMMANDS, apply_overrides
from divgraph.cli.v1.parser import UsageError, build_parser
from divgraph.errors.v1.exceptions import DivgraphError
from divgraph.logging.v1.config import configure_logging
from divgraph.logging.v1.context import new_run_id
from divgraph.settings.v1.config_files import load_settings

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse the command line, load settings, and run one sub-command.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None.

    Returns:
        int: Process exit status.
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE

    run_id = new_run_id()
    try:
        settings = load_settings(args.config)
        if args.log_level:
            settings.logging.level = args.log_level
        configure_logging(settings.logging)
        logger.debug(f"Run {run_id}: {args.command}")

        settings = apply_overrides(settings, args)
        return COMMANDS[args.command](args, settings)
    except DivgraphError as exc:
        logger.debug("Command failed", exc_info=True)
        sys.stderr.write(f"divgraph: {exc.message}\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
