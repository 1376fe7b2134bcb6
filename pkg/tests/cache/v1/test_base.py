# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Tests for the result cache base class and key helper."""

from typing import Optional

import pytest

from divgraph.cache.v1.base import ResultCacheBase, result_key


@pytest.mark.parametrize(
    "method, args",
    [
        ("store_result", ("key", "value")),
        ("fetch_result", ("key",)),
        ("clear_result", ("key",)),
    ],
)
def test_base_methods_not_implemented(method, args):
    """
    Test that the base class leaves every operation to subclasses.
    """
    with pytest.raises(NotImplementedError):
        getattr(ResultCacheBase(), method)(*args)


def test_concrete_implementation_contract():
    """
    Test that a proper implementation follows the expected contract.
    """

    class DictCache(ResultCacheBase):

        def __init__(self):
            self.storage: dict[str, str] = {}

        def store_result(self, key: str, value: str) -> bool:
            self.storage[key] = value
            return True

        def fetch_result(self, key: str) -> Optional[str]:
            return self.storage.get(key)

        def clear_result(self, key: str) -> bool:
            return self.storage.pop(key, None) is not None

    cache = DictCache()

    assert cache.store_result("graph_S_5_D-json", "{}") is True
    assert cache.fetch_result("graph_S_5_D-json") == "{}"
    assert cache.clear_result("graph_S_5_D-json") is True
    assert cache.fetch_result("graph_S_5_D-json") is None
    assert cache.clear_result("nonexistent") is False


@pytest.mark.parametrize(
    "group, n, kind, factored, expected",
    [
        ("S", 5, "D", False, "graph_S_5_D"),
        ("A", 12, "Gamma-dot", False, "graph_A_12_Gamma-dot"),
        ("S", 30, "D-json-nodiam", True, "graph_S_30_D-json-nodiam_factored"),
        ("A", 9, "D-sweep", False, "graph_A_9_D-sweep"),
    ],
)
def test_result_key(group, n, kind, factored, expected):
    """
    Test cache key construction.
    """
    assert result_key(group, n, kind, factored) == expected
