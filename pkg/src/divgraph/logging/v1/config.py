# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Logging configuration for divgraph runs.

Everything goes to stderr: stdout carries artifacts and verdict streams only.
"""

import logging
import logging.config

from divgraph.logging.v1.context import RunIDFilter
from divgraph.settings.v1.protocols import LoggingSettingsProtocol

# third-party loggers that are chatty at INFO unless configured otherwise
QUIET_LOGGERS = ("huey",)


def _logger_levels(logging_settings: LoggingSettingsProtocol) -> dict[str, dict]:
    levels = {name: {"level": "WARNING"} for name in QUIET_LOGGERS}
    for name, override in logging_settings.loggers.items():
        levels[name] = {"level": str(override.get("level", "NOTSET")).upper()}
    return levels


def create_logging_config(logging_settings: LoggingSettingsProtocol) -> dict:
    """
    Build a dictConfig dictionary with one stderr handler stamped with run IDs.

    Args:
        logging_settings: Any object shaped like LoggingSettings.

    Returns:
        dict: A dictionary for logging.config.dictConfig.

    Raises:
        ValueError: Raised if the root level is not a logging level name.
    """
    root_level = logging.getLevelName(logging_settings.level.upper())
    if not isinstance(root_level, int):
        raise ValueError(f"Unknown log level: {logging_settings.level}")

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {"default": {"format": logging_settings.format}},
        "filters": {"run_id_filter": {"()": RunIDFilter}},
        "handlers": {
            "stderr": {
                "class": "logging.StreamHandler",
                "formatter": "default",
                "stream": "ext://sys.stderr",
                "filters": ["run_id_filter"],
            },
        },
        "loggers": _logger_levels(logging_settings),
        "root": {"handlers": ["stderr"], "level": root_level},
    }


def configure_logging(logging_settings: LoggingSettingsProtocol) -> None:
    """
    Apply create_logging_config.

    Args:
        logging_settings: Any object shaped like LoggingSettings.
    """
    logging.config.dictConfig(create_logging_config(logging_settings))
