# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Connected components, breadth-first distances and diameters of a UGraph."""

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from divgraph.errors.v1.exceptions import CapacityRefusedError
from divgraph.graphs.v1.schemas import ComponentReport, UGraph, vertex_sort_key

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_LIMIT = 6000
_SOURCE_BLOCK = 256


def bfs_distances(g: UGraph, source: int) -> np.ndarray:
    """
    Hop distances from one vertex to every vertex.

    Args:
        g: The graph.
        source: Source vertex index.

    Returns:
        np.ndarray: Distance per vertex; -1 where unreachable.
    """
    dist = np.full(g.vertex_count, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0

    while frontier.size:
        level += 1
        reached = np.concatenate([g.neighbors(int(v)) for v in frontier])
        reached = np.unique(reached)
        frontier = reached[dist[reached] < 0]
        dist[frontier] = level

    return dist


def _label_components(g: UGraph) -> np.ndarray:
    """
    Component label per vertex, labels numbered in order of first vertex.

    One shared label array doubles as the visited set, so every vertex and
    edge is touched once.
    """
    labels = np.full(g.vertex_count, -1, dtype=np.int64)
    label = 0
    for start in range(g.vertex_count):
        if labels[start] >= 0:
            continue
        labels[start] = label
        frontier = np.array([start], dtype=np.int64)
        while frontier.size:
            reached = np.unique(
                np.concatenate([g.neighbors(int(v)) for v in frontier])
            ).astype(np.int64)
            frontier = reached[labels[reached] < 0]
            labels[frontier] = label
        label += 1
    return labels


def _group_members(labels: np.ndarray) -> list[np.ndarray]:
    if labels.size == 0:
        return []
    order = np.argsort(labels, kind="stable")
    cuts = np.flatnonzero(np.diff(labels[order])) + 1
    return np.split(order, cuts)


def _component_diameter(g: UGraph, members: np.ndarray, workers: int) -> int:
    """
    Eccentricity maximum inside one component by a dense multi-source BFS.

    Blocks of sources advance level by level; a boolean frontier block times
    the dense adjacency gives the next frontier.
    """
    size = members.size
    if size == 1:
        return 0

    local = {int(v): idx for idx, v in enumerate(members)}
    adjacency = np.zeros((size, size), dtype=np.float32)
    for idx, v in enumerate(members):
        for w in g.neighbors(int(v)):
            adjacency[idx, local[int(w)]] = 1.0

    def block_eccentricity(start: int) -> int:
        stop = min(start + _SOURCE_BLOCK, size)
        frontier = np.zeros((stop - start, size), dtype=np.float32)
        frontier[np.arange(stop - start), np.arange(start, stop)] = 1.0
        visited = frontier > 0
        depth = 0
        while True:
            reached = (frontier @ adjacency > 0) & ~visited
            if not reached.any():
                return depth
            depth += 1
            visited |= reached
            frontier = reached.astype(np.float32)

    starts = range(0, size, _SOURCE_BLOCK)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return max(pool.map(block_eccentricity, starts))
    return max(block_eccentricity(start) for start in starts)


def components(
    g: UGraph,
    diameters: bool = True,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    workers: int = 1,
) -> ComponentReport:
    """
    Partition a graph into connected components and measure their diameters.

    Members of each component are sorted canonically, and components are
    ordered by their first member, so the report does not depend on vertex
    order. A K_1 component has diameter 0; the empty graph has overall
    diameter 0 and is flagged as the null graph.

    Args:
        g: The graph.
        diameters: Whether to compute diameters; None entries otherwise.
        vertex_limit: Largest component the dense distance pass accepts.
        workers: Threads for the distance pass.

    Returns:
        ComponentReport: Components, diameters and isolated vertices.

    Raises:
        CapacityRefusedError: Raised if a component exceeds vertex_limit while
            diameters are requested.
    """
    labels = _label_components(g)
    groups = _group_members(labels)

    keyed = []
    for members in groups:
        keys = sorted((g.vertices[int(v)] for v in members), key=vertex_sort_key)
        keyed.append((keys, members))
    keyed.sort(key=lambda item: vertex_sort_key(item[0][0]))

    per_component: list[int | None] = []
    for keys, members in keyed:
        if not diameters:
            per_component.append(None)
            continue
        if members.size > vertex_limit:
            raise CapacityRefusedError(
                "diameter vertex limit", vertex_limit, int(members.size)
            )
        per_component.append(_component_diameter(g, members, workers))

    overall = max((d for d in per_component if d is not None), default=0)
    report = ComponentReport(
        component_count=len(keyed),
        components=[keys for keys, _ in keyed],
        diameters=per_component,
        overall_diameter=overall if diameters else None,
        isolated=[keys[0] for keys, members in keyed if members.size == 1],
        null_graph=g.vertex_count == 0,
    )
    logger.debug(
        f"{g.kind.value}: {report.component_count} components, "
        f"diameter {report.overall_diameter}"
    )
    return report
