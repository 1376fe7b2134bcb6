# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Structural types for the settings that logging and budget checks read."""

from typing import Protocol


class LoggingSettingsProtocol(Protocol):
    """
    What create_logging_config needs from a logging settings object.

    Attributes:
        level: Root level name, any case.
        format: Format string; may use the `run_id` record field.
        loggers: Per-logger overrides, e.g. {"divgraph.graphs": {"level": "DEBUG"}}.
    """

    level: str
    format: str
    loggers: dict[str, dict]


class BudgetSettingsProtocol(Protocol):
    """
    Degree caps consulted before any graph is built.

    Attributes:
        max_build_n: Largest degree for which a class-size graph is built.
        max_diameter_n: Largest degree for which diameters are computed.
        diameter_vertex_limit: Largest component for the dense distance pass.
    """

    max_build_n: int
    max_diameter_n: int
    diameter_vertex_limit: int
