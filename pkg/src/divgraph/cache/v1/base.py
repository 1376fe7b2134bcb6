# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Base class for caches of computed results."""

from typing import Optional


class ResultCacheBase:
    """Base class for result cache implementations."""

    def store_result(self, key: str, value: str) -> bool:
        """
        Store/replace a result in backend storage.

        Args:
            key: The cache key.
            value: Serialized result (e.g. a JSON graph document).

        Raises:
            NotImplementedError: Raised if subclass does not implement this method.

        Returns:
            bool: True if the operation was successful.
        """
        raise NotImplementedError

    def fetch_result(self, key: str) -> Optional[str]:
        """
        Fetch a result from backend storage.

        Args:
            key: The cache key.

        Raises:
            NotImplementedError: Raised if subclass does not implement this method.

        Returns:
            Optional[str]: The cached result, or None if not found.
        """
        raise NotImplementedError

    def clear_result(self, key: str) -> bool:
        """
        Clear a result from backend storage.

        Args:
            key: The cache key to clear.

        Raises:
            NotImplementedError: Raised if subclass does not implement this method.

        Returns:
            bool: True if the operation was successful.
        """
        raise NotImplementedError


def result_key(group: str, n: int, kind: str, factored: bool = False) -> str:
    """
    Cache key of one built graph document.

    Args:
        group: "S" or "A".
        n: Degree.
        kind: Graph kind.
        factored: Whether the document carries factor maps.

    Returns:
        str: The key, e.g. "graph_S_5_D".
    """
    return f"graph_{group}_{n}_{kind}" + ("_factored" if factored else "")
