# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Helper functions to load configuration files into DivgraphSettings."""

import logging
import os
from pathlib import Path
from typing import Dict, List, Optional

import yaml

from divgraph.errors.v1.exceptions import InvalidArgumentError
from divgraph.settings.v1.schemas import DivgraphSettings

logger = logging.getLogger(__name__)

CONFIG_FILES_ENV = "DIVGRAPH_CONFIG_FILES"
WORKERS_ENV = "DIVGRAPH_WORKERS"


def load_yaml(file_path: Path) -> Dict:
    """
    Load a YAML file and return its contents as a dictionary.

    Args:
        file_path: The path to the YAML file.

    Returns:
        Dict: The contents of the YAML file, or an empty dictionary if the file
            does not exist.
    """
    if file_path.exists():
        with open(file_path, "r") as file_reader:
            return yaml.safe_load(file_reader) or {}

    return {}


def deep_merge(dict1: Dict, dict2: Dict) -> Dict:
    """
    Recursively merge two dictionaries.

    Args:
        dict1: The base dictionary.
        dict2: The dictionary to merge into dict1.

    Returns:
        Dict: A new dictionary with dict2 merged into dict1.
    """
    merged = dict1.copy()

    for key, value in dict2.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = value

    return merged


def load_config(config_files: List[str]) -> Dict:
    """
    Load configuration from a list of YAML files in the given order.

    Args:
        config_files: List of file paths to load and merge.

    Returns:
        Dict: The merged configuration dictionary.
    """
    config: Dict = {}

    for file in config_files:
        if Path(file).exists():
            logger.debug(f"Loading config file: {Path(file)}")
        config = deep_merge(config, load_yaml(Path(file).expanduser()))

    return config


def get_config_files(extra: Optional[List[str]] = None) -> List[str]:
    """
    Determine the configuration files to load, prioritizing DIVGRAPH_CONFIG_FILES.

    Args:
        extra: Files appended after the search list (e.g. from --config).

    Returns:
        List[str]: Configuration file paths in the order they should be merged.
    """
    if config_files := os.getenv(CONFIG_FILES_ENV):
        found = config_files.split(",")
    else:
        found = [
            "./divgraph.yaml",
            "./conf/divgraph.yaml",
            "~/.config/divgraph/divgraph.yaml",
        ]

    return found + list(extra or [])


def load_settings(extra: Optional[List[str]] = None) -> DivgraphSettings:
    """
    Build DivgraphSettings from YAML files and the environment.

    DIVGRAPH_WORKERS, when set, overrides the configured worker count.

    Args:
        extra: Additional config files merged last.

    Returns:
        DivgraphSettings: The validated settings.

    Raises:
        InvalidArgumentError: Raised if the configuration does not validate.
    """
    config = load_config(get_config_files(extra))

    if workers := os.getenv(WORKERS_ENV):
        config["workers"] = workers

    try:
        return DivgraphSettings.model_validate(config)
    except ValueError as exc:
        raise InvalidArgumentError(f"invalid configuration: {exc}") from exc
