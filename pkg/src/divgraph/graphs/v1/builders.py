# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Construction of D(X), Gamma(X), Delta(X) and B(X) from a size set.

Sizes are turned into a (primes x sizes) exponent matrix once; the pairwise
passes then compare one row of that matrix against all later columns with
numpy, touching only the primes that actually divide the current size.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable

import numpy as np

from divgraph.graphs.v1.schemas import PRIME_PREFIX, GraphKind, SizeSet, UGraph

logger = logging.getLogger(__name__)

_ROW_CHUNK = 512


class ExponentMatrix:
    """
    Prime exponent matrix of a size set.

    Args:
        sizes: The size set.

    Attributes:
        primes: rho(X), ascending.
        table: Array of shape (len(primes), len(sizes)); table[p, j] is the
            exponent of primes[p] in sizes[j].
        support: For every size, the row indices of the primes dividing it.
    """

    def __init__(self, sizes: SizeSet) -> None:
        self.primes: list[int] = sorted({p for s in sizes.sizes for p in s.primes})
        row_of = {p: idx for idx, p in enumerate(self.primes)}
        largest = max((e for s in sizes.sizes for _, e in s.exponents), default=0)
        dtype = np.int8 if largest <= np.iinfo(np.int8).max else np.int32

        self.table: np.ndarray = np.zeros((len(self.primes), len(sizes)), dtype=dtype)
        self.support: list[list[tuple[int, int]]] = []
        for col, size in enumerate(sizes.sizes):
            entries = [(row_of[p], e) for p, e in size.exponents]
            for row, exp in entries:
                self.table[row, col] = exp
            self.support.append(entries)


def _pairwise(
    count: int,
    row_mask: Callable[[int], np.ndarray],
    workers: int,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Collect edges (i, j), i < j, where row_mask(i)[j - i - 1] is true.
    """

    def chunk(start: int) -> tuple[np.ndarray, np.ndarray]:
        rows, cols = [], []
        for i in range(start, min(start + _ROW_CHUNK, count - 1)):
            hits = np.flatnonzero(row_mask(i)) + (i + 1)
            if hits.size:
                rows.append(np.full(hits.size, i, dtype=np.int64))
                cols.append(hits)
        if not rows:
            return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
        return np.concatenate(rows), np.concatenate(cols)

    starts = range(0, max(count - 1, 0), _ROW_CHUNK)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(chunk, starts))
    else:
        parts = [chunk(start) for start in starts]

    if not parts:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    return (
        np.concatenate([rows for rows, _ in parts]),
        np.concatenate([cols for _, cols in parts]),
    )


def build_D(sizes: SizeSet, workers: int = 1) -> UGraph:
    """
    Build the divisibility graph D(X): a ~ b iff one divides the other.

    Because the sizes are ascending, only divides(smaller, larger) is tested.

    Args:
        sizes: X* in ascending order.
        workers: Threads for the pairwise pass; output does not depend on it.

    Returns:
        UGraph: D(X) with decimal size keys.
    """
    matrix = ExponentMatrix(sizes)
    table, count = matrix.table, len(sizes)

    def row_mask(i: int) -> np.ndarray:
        mask = np.ones(count - i - 1, dtype=bool)
        for row, exp in matrix.support[i]:
            np.logical_and(mask, table[row, i + 1 :] >= exp, out=mask)
        return mask

    rows, cols = _pairwise(count, row_mask, workers)
    graph = UGraph.from_edges(GraphKind.D, sizes.keys, rows, cols)
    logger.debug(f"D(X): {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def build_Gamma(sizes: SizeSet, workers: int = 1) -> UGraph:
    """
    Build the common divisor graph Gamma(X): a ~ b iff gcd(a, b) > 1.

    Args:
        sizes: X* in ascending order.
        workers: Threads for the pairwise pass.

    Returns:
        UGraph: Gamma(X) with decimal size keys.
    """
    matrix = ExponentMatrix(sizes)
    table, count = matrix.table, len(sizes)

    def row_mask(i: int) -> np.ndarray:
        mask = np.zeros(count - i - 1, dtype=bool)
        for row, _ in matrix.support[i]:
            np.logical_or(mask, table[row, i + 1 :] > 0, out=mask)
        return mask

    rows, cols = _pairwise(count, row_mask, workers)
    graph = UGraph.from_edges(GraphKind.GAMMA, sizes.keys, rows, cols)
    logger.debug(f"Gamma(X): {graph.vertex_count} vertices, {graph.edge_count} edges")
    return graph


def build_Delta(sizes: SizeSet) -> UGraph:
    """
    Build the prime vertex graph Delta(X): p ~ q iff pq divides one element.

    Args:
        sizes: X* in ascending order.

    Returns:
        UGraph: Delta(X) keyed by primes (decimal strings).
    """
    matrix = ExponentMatrix(sizes)
    pairs = sorted(
        {
            pair
            for entries in matrix.support
            for pair in combinations(sorted(row for row, _ in entries), 2)
        }
    )
    rows = np.array([u for u, _ in pairs], dtype=np.int64)
    cols = np.array([v for _, v in pairs], dtype=np.int64)
    keys = tuple(str(p) for p in matrix.primes)
    return UGraph.from_edges(GraphKind.DELTA, keys, rows, cols)


def build_B(sizes: SizeSet) -> UGraph:
    """
    Build the bipartite divisor graph B(X): prime p ~ size x iff p divides x.

    Prime vertices come first and are keyed "p:<prime>"; size vertices follow
    with decimal keys.

    Args:
        sizes: X* in ascending order.

    Returns:
        UGraph: B(X) with parts labelling every vertex "prime" or "size".
    """
    matrix = ExponentMatrix(sizes)
    offset = len(matrix.primes)
    pairs = sorted(
        (row, offset + col)
        for col, entries in enumerate(matrix.support)
        for row, _ in entries
    )
    rows = np.array([u for u, _ in pairs], dtype=np.int64)
    cols = np.array([v for _, v in pairs], dtype=np.int64)
    keys = tuple(f"{PRIME_PREFIX}{p}" for p in matrix.primes) + sizes.keys
    parts = ("prime",) * offset + ("size",) * len(sizes)
    return UGraph.from_edges(GraphKind.B, keys, rows, cols, parts)


def build_graph(sizes: SizeSet, kind: GraphKind, workers: int = 1) -> UGraph:
    """
    Dispatch to the builder of the requested kind.

    Args:
        sizes: X* in ascending order.
        kind: Which graph to build.
        workers: Threads for the pairwise passes of D and Gamma.

    Returns:
        UGraph: The requested graph.
    """
    if kind is GraphKind.D:
        return build_D(sizes, workers)
    if kind is GraphKind.GAMMA:
        return build_Gamma(sizes, workers)
    if kind is GraphKind.DELTA:
        return build_Delta(sizes)
    return build_B(sizes)
