# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Run IDs for correlating the log lines of one invocation.

The CLI creates one ID per run. Worker processes adopt the parent's ID so that
their log lines carry the same `rid` field.
"""

import contextvars
import logging
import secrets
from typing import Optional

RUN_ID_CONTEXTVAR: contextvars.ContextVar[str | None] = contextvars.ContextVar(
    "run_id", default=None
)


def new_run_id() -> str:
    """
    Generate a short run ID and make it current.

    Returns:
        str: The run ID, "R" followed by 5 hex characters.
    """
    run_id = f"R{secrets.token_hex(64)[:5]}"
    RUN_ID_CONTEXTVAR.set(run_id)
    return run_id


def adopt_run_id(run_id: Optional[str]) -> None:
    """
    Make a run ID handed over from another process current.

    Args:
        run_id: The parent's run ID, or None outside a CLI run.
    """
    RUN_ID_CONTEXTVAR.set(run_id)


class RunIDFilter(logging.Filter):
    """Stamp every record with the current run ID as `record.run_id`."""

    def filter(self, record: logging.LogRecord) -> bool:
        """
        Add the run ID to the log record.

        Args:
            record: The log record to be filtered.

        Returns:
            bool: Always True; records are annotated, never dropped.
        """
        record.run_id = RUN_ID_CONTEXTVAR.get()
        return True
