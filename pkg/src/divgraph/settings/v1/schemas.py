# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""pydantic settings schemas for divgraph runs."""

import logging
from typing import Literal

from pydantic import BaseModel, Field, field_validator


class LoggingSettings(BaseModel):
    """
    Logging configuration.

    Attributes:
        level: Logging level.
        format: Log message format string.
        loggers: Dictionary of logger-specific configurations.
    """

    level: str = "WARNING"
    format: str = (
        "[ts=%(asctime)s] [pid=%(process)d] [rid=%(run_id)s] "
        "[level=%(levelname)s] [name=%(name)s] [message=%(message)s]"
    )
    loggers: dict = {}

    @field_validator("level")
    @classmethod
    def known_level(cls, value: str) -> str:
        """
        Normalize the level name and reject unknown ones.

        Args:
            value: Level name in any case.

        Returns:
            str: The upper-case level name.

        Raises:
            ValueError: Raised if logging has no such level.
        """
        if not isinstance(logging.getLevelName(value.upper()), int):
            raise ValueError(f"unknown log level {value!r}")
        return value.upper()


class BudgetSettings(BaseModel):
    """
    Degree caps and size budgets; raising one above its default logs a warning.

    Attributes:
        max_build_n: Largest n for which D(S_n) or D(A_n) is built.
        max_diameter_n: Largest n for which diameters are computed.
        oracle_tally_n: Largest n for brute-force tallies.
        oracle_orbit_n: Largest n for brute-force conjugation orbits.
        diameter_vertex_limit: Largest component for the dense distance pass.
    """

    max_build_n: int = Field(default=40, ge=1)
    max_diameter_n: int = Field(default=25, ge=1)
    oracle_tally_n: int = Field(default=8, ge=1)
    oracle_orbit_n: int = Field(default=7, ge=1)
    diameter_vertex_limit: int = Field(default=6000, ge=1)


class CacheSettings(BaseModel):
    """
    Result cache for built graph documents.

    Attributes:
        enabled: Whether build and sweep consult the cache.
        backend: huey storage to use.
        name: Prefix for all keys stored in the cache.
        sqlite_filename: Path to sqlite file (ignored unless backend="sqlite").
        compress_threshold: Minimum payload size in bytes to compress.
    """

    enabled: bool = False
    backend: Literal["sqlite", "memory"] = "sqlite"
    name: str = "divgraph"
    sqlite_filename: str = "./.local/divgraph-cache.sqlite"
    compress_threshold: int = 4096


class DivgraphSettings(BaseModel):
    """
    Top level settings.

    Attributes:
        logging: Logging configuration.
        budgets: Degree caps and budgets.
        cache: Result cache configuration.
        workers: Worker processes for multi-n runs (threads inside one build).
    """

    logging: LoggingSettings = LoggingSettings()
    budgets: BudgetSettings = BudgetSettings()
    cache: CacheSettings = CacheSettings()
    workers: int = Field(default=1, ge=1)
