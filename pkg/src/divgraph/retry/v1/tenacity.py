# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Helper functions for retrying storage calls with tenacity."""

import logging
from typing import Callable

from tenacity import RetryCallState, stop_after_attempt


def tenacity_retry_log(
    logger: logging.Logger,
    log_level: int = logging.WARNING,
) -> Callable[[RetryCallState], None]:
    """
    Log retry attempts after an exception has occurred.

    Pass the result as the after= argument of a tenacity.retry decorator.

    Args:
        logger: Logger of the module doing the retries.
        log_level: Level for the retry messages.

    Returns:
        Callable[[RetryCallState], None]: The after= hook.
    """

    def log_attempt(retry_state: RetryCallState) -> None:
        """
        Inner function to log retry message.
        """
        stop_strategy = retry_state.retry_object.stop
        max_attempt_str = ""
        if isinstance(stop_strategy, stop_after_attempt):
            max_attempt_str = f" of {stop_strategy.max_attempt_number}"

        if retry_state.outcome is None:
            logger.log(
                log_level,
                f"Retry {retry_state.attempt_number}{max_attempt_str}: "
                "outcome is None.",
            )
            return

        exc = retry_state.outcome.exception()
        where = "unknown call site"
        tb = exc.__traceback__ if exc is not None else None

        # NOTE: with @retry the first frame is tenacity itself
        if tb is not None and retry_state.fn is not None and tb.tb_next is not None:
            tb = tb.tb_next
        if tb is not None:
            where = f"{tb.tb_frame.f_code.co_name} line {tb.tb_lineno}"

        logger.log(
            log_level,
            f"Retry {retry_state.attempt_number}{max_attempt_str}: "
            f"{where} raised {type(exc).__name__}: {exc}",
        )

    return log_attempt
