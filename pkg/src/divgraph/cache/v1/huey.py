# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Result cache that uses huey storage as backend."""

import logging
import zlib
from pathlib import Path
from typing import Optional

from huey import Huey, MemoryHuey, SqliteHuey
from tenacity import retry, stop_after_attempt, wait_fixed

from divgraph.cache.v1.base import ResultCacheBase
from divgraph.retry.v1.tenacity import tenacity_retry_log
from divgraph.settings.v1.schemas import CacheSettings

logger = logging.getLogger(__name__)

# sqlite can report "database is locked" while another process writes
storage_retry = retry(
    reraise=True,
    stop=stop_after_attempt(5),
    wait=wait_fixed(0.001),
    after=tenacity_retry_log(logger),
)


def create_huey(settings: CacheSettings) -> Huey:
    """
    Create the huey instance that backs the cache.

    Args:
        settings: Cache settings.

    Returns:
        Huey: A SqliteHuey or MemoryHuey.
    """
    if settings.backend == "memory":
        return MemoryHuey(settings.name)

    Path(settings.sqlite_filename).parent.mkdir(parents=True, exist_ok=True)
    return SqliteHuey(settings.name, filename=settings.sqlite_filename)


class HueyResultCache(ResultCacheBase):
    """
    Result cache that keeps serialized documents in huey storage.

    Args:
        huey_app: The Huey instance to use as backend.
        name: Prefix for all keys stored in the cache.
        compress_threshold: Minimum size in bytes to compress (default: 4096).

    Attributes:
        COMPRESSION_HEADER: Byte string identifying compressed data.
    """

    COMPRESSION_HEADER = b"zlib1:"

    def __init__(
        self,
        huey_app: Huey,
        name: str,
        compress_threshold: int = 4096,
    ) -> None:
        self.huey_app: Huey = huey_app
        self.name: str = name
        self.compress_threshold: int = compress_threshold
        logger.debug(
            "Initialized HueyResultCache with compression "
            f"threshold of {compress_threshold} bytes"
        )

    def _get_storage_keyname(self, key: str) -> str:
        """
        Construct the full key name used in backend storage.
        """
        return f"result_{self.name}_{key}"

    def _prepare_data(self, data: bytes) -> bytes:
        """
        Compress data at or over the threshold, behind a header.

        Args:
            data: Encoded payload.

        Returns:
            bytes: The stored form.
        """
        if len(data) >= self.compress_threshold:
            compressed = zlib.compress(data)
            logger.debug(
                f"Compressed {len(data)} bytes to {len(compressed)} bytes "
                f"(threshold: {self.compress_threshold} bytes)"
            )
            return self.COMPRESSION_HEADER + compressed

        return data

    def _restore_data(self, data: bytes) -> bytes:
        """
        Undo _prepare_data.

        Args:
            data: The stored form.

        Returns:
            bytes: The encoded payload.

        Raises:
            TypeError: If input is not bytes.
            zlib.error: If compressed data is corrupted.
        """
        if not isinstance(data, bytes):
            raise TypeError(f"Cache data must be bytes, got {type(data)}")

        if data.startswith(self.COMPRESSION_HEADER):
            try:
                return zlib.decompress(data[len(self.COMPRESSION_HEADER) :])
            except zlib.error as exc:
                logger.warning(f"Decompression failed: {exc}")
                raise

        return data

    @storage_retry
    def store_result(self, key: str, value: str) -> bool:
        """
        Store or replace a result.

        Args:
            key: Cache key.
            value: Serialized result.

        Returns:
            bool: True if storage was successful.
        """
        logger.debug(f"Storing result '{key}'")
        prepared = self._prepare_data(value.encode("utf-8"))
        self.huey_app.put(self._get_storage_keyname(key), prepared)
        return True

    @storage_retry
    def fetch_result(self, key: str) -> Optional[str]:
        """
        Fetch a result without removing it.

        Args:
            key: Cache key.

        Returns:
            Optional[str]: The serialized result, or None on a miss.
        """
        storage_keyname = self._get_storage_keyname(key)
        cached = self.huey_app.get(key=storage_keyname, peek=True)
        if not cached:
            logger.debug(f"No cache entry found for storage key '{storage_keyname}'")
            return None

        return self._restore_data(cached).decode("utf-8")

    @storage_retry
    def clear_result(self, key: str) -> bool:
        """
        Clear a result.

        Args:
            key: Cache key.

        Returns:
            bool: True if an entry was removed.
        """
        storage_keyname = self._get_storage_keyname(key)
        if not self.huey_app.delete(key=storage_keyname):
            logger.warning(f"Failed to delete storage key '{storage_keyname}'")
            return False

        return True
