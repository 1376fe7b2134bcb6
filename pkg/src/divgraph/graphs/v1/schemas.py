# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Data structures for size sets, undirected graphs and component reports."""

import re
from dataclasses import dataclass, field
from enum import StrEnum
from functools import cached_property
from typing import Any, Literal, Optional

import networkx as nx
import numpy as np
from pydantic import BaseModel

from divgraph.cycletypes.v1.schemas import Group
from divgraph.errors.v1.exceptions import InternalInconsistencyError
from divgraph.orders.v1.factored import FactoredNat

SCHEMA_VERSION = "divgraph/1"
PRIME_PREFIX = "p:"

_DIGITS_RE = re.compile(r"^\d+$")


class GraphKind(StrEnum):
    """The four graphs that can be built from a set of integers."""

    D = "D"
    GAMMA = "Gamma"
    DELTA = "Delta"
    B = "B"


def vertex_sort_key(key: str) -> tuple[int, int, str]:
    """
    Canonical ordering of vertex keys: primes ("p:2") first, then numbers.

    Args:
        key: A vertex key.

    Returns:
        tuple[int, int, str]: Sort key independent of vertex insertion order.
    """
    if key.startswith(PRIME_PREFIX) and _DIGITS_RE.match(key[len(PRIME_PREFIX) :]):
        return (0, int(key[len(PRIME_PREFIX) :]), "")
    if _DIGITS_RE.match(key):
        return (1, int(key), "")
    return (2, 0, key)


@dataclass(frozen=True)
class SizeSet:
    """
    The set X* = X minus {1}, ascending, with a back-map to the classes behind it.

    Attributes:
        sizes: Distinct sizes > 1 in ascending order.
        origin: For every size, the labels of the classes that have it.
        n: Degree the sizes were computed for (None for raw input).
        group: Group the sizes belong to (None for raw input).
    """

    sizes: tuple[FactoredNat, ...]
    origin: dict[FactoredNat, tuple[str, ...]] = field(default_factory=dict)
    n: Optional[int] = None
    group: Optional[Group] = None

    def __post_init__(self) -> None:
        previous = 1
        for size in self.sizes:
            if size.value <= previous:
                raise InternalInconsistencyError(
                    f"sizes must be > 1 and strictly ascending, got {size} "
                    f"after {previous}"
                )
            previous = size.value
            if not self.origin.get(size):
                raise InternalInconsistencyError(f"size {size} has no origin")

    def __len__(self) -> int:
        return len(self.sizes)

    @cached_property
    def index(self) -> dict[FactoredNat, int]:
        """Vertex index of every size."""
        return {size: idx for idx, size in enumerate(self.sizes)}

    @property
    def keys(self) -> tuple[str, ...]:
        """Vertex keys (decimal strings) in vertex order."""
        return tuple(str(size) for size in self.sizes)


@dataclass(frozen=True, eq=False)
class UGraph:
    """
    An undirected simple graph in compressed sparse row form.

    Attributes:
        kind: Which graph this is.
        vertices: Vertex keys in vertex order.
        indptr: Row pointer array of length len(vertices) + 1.
        indices: Sorted neighbor indices for every row.
        parts: For B(X), "prime" or "size" per vertex; None otherwise.
    """

    kind: GraphKind
    vertices: tuple[str, ...]
    indptr: np.ndarray
    indices: np.ndarray
    parts: Optional[tuple[str, ...]] = None

    @classmethod
    def from_edges(
        cls,
        kind: GraphKind,
        vertices: tuple[str, ...],
        rows: np.ndarray,
        cols: np.ndarray,
        parts: Optional[tuple[str, ...]] = None,
    ) -> "UGraph":
        """
        Build a graph from an undirected edge list with rows[i] < cols[i].

        Edges must come sorted by (row, col). Each adjacency row is then the
        reverse edges (ascending) followed by the forward edges (ascending),
        so the CSR is filled without a full sort.

        Args:
            kind: Which graph this is.
            vertices: Vertex keys.
            rows: Lower endpoints.
            cols: Upper endpoints.
            parts: Optional bipartition labels.

        Returns:
            UGraph: The graph with symmetric adjacency.

        Raises:
            InternalInconsistencyError: Raised on loops, out-of-range endpoints,
                unsorted input or duplicate edges.
        """
        count = len(vertices)
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        bad = rows.size and (
            np.any(rows >= cols) or cols.max() >= count or rows.min() < 0
        )
        if bad:
            raise InternalInconsistencyError("edges must satisfy 0 <= u < v < |V|")

        key = rows * count + cols
        if key.size and np.any(np.diff(key) <= 0):
            raise InternalInconsistencyError("edges must be sorted and distinct")

        forward = np.bincount(rows, minlength=count)
        reverse = np.bincount(cols, minlength=count)
        indptr = np.zeros(count + 1, dtype=np.int64)
        np.cumsum(forward + reverse, out=indptr[1:])
        indices = np.empty(2 * rows.size, dtype=np.int32)

        fwd_start = np.cumsum(forward) - forward
        rank = np.arange(rows.size) - fwd_start[rows]
        indices[indptr[rows] + reverse[rows] + rank] = cols

        order = np.argsort(cols, kind="stable")
        by_col, from_row = cols[order], rows[order]
        rev_start = np.cumsum(reverse) - reverse
        rank = np.arange(rows.size) - rev_start[by_col]
        indices[indptr[by_col] + rank] = from_row

        indptr.flags.writeable = False
        indices.flags.writeable = False
        return cls(kind, tuple(vertices), indptr, indices, parts)

    @property
    def vertex_count(self) -> int:
        """Number of vertices."""
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        """Number of undirected edges."""
        return int(self.indices.size // 2)

    @cached_property
    def key_index(self) -> dict[str, int]:
        """Vertex index of every key."""
        return {key: idx for idx, key in enumerate(self.vertices)}

    def neighbors(self, idx: int) -> np.ndarray:
        """
        Neighbor indices of one vertex.

        Args:
            idx: Vertex index.

        Returns:
            np.ndarray: Sorted neighbor indices (read-only view).
        """
        return self.indices[self.indptr[idx] : self.indptr[idx + 1]]

    def degree(self, idx: int) -> int:
        """
        Degree of one vertex.

        Args:
            idx: Vertex index.

        Returns:
            int: Number of neighbors.
        """
        return int(self.indptr[idx + 1] - self.indptr[idx])

    def has_edge(self, u: int, v: int) -> bool:
        """
        Adjacency test.

        Args:
            u: Vertex index.
            v: Vertex index.

        Returns:
            bool: Whether {u, v} is an edge.
        """
        nbrs = self.neighbors(u)
        pos = int(np.searchsorted(nbrs, v))
        return pos < nbrs.size and int(nbrs[pos]) == v

    def edges(self) -> list[tuple[int, int]]:
        """
        All edges as (u, v) with u < v, in ascending order.

        Returns:
            list[tuple[int, int]]: The edge list.
        """
        src = np.repeat(np.arange(self.vertex_count), np.diff(self.indptr))
        mask = src < self.indices
        return list(zip(src[mask].tolist(), self.indices[mask].tolist()))

    def to_networkx(self) -> nx.Graph:
        """
        Convert to a networkx graph keyed by vertex key.

        Returns:
            nx.Graph: Equivalent networkx graph.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(
            (self.vertices[u], self.vertices[v]) for u, v in self.edges()
        )
        return graph


class ComponentReport(BaseModel):
    """
    Connected components of a graph and their diameters.

    Attributes:
        component_count: Number of components.
        components: Vertex keys of each component, canonically sorted.
        diameters: Diameter of each component (None when not computed).
        overall_diameter: Largest component diameter; 0 for the null graph.
        isolated: Keys of K_1 components.
        null_graph: True iff the graph has no vertices.
    """

    component_count: int
    components: list[list[str]]
    diameters: list[Optional[int]]
    overall_diameter: Optional[int]
    isolated: list[str]
    null_graph: bool

    def component_of(self, key: str) -> int:
        """
        Index of the component holding a vertex.

        Args:
            key: Vertex key.

        Returns:
            int: Component index.

        Raises:
            KeyError: Raised if the key is not a vertex.
        """
        for idx, members in enumerate(self.components):
            if key in members:
                return idx
        raise KeyError(key)

    @property
    def largest(self) -> list[str]:
        """Members of the largest component (first on ties)."""
        return max(self.components, key=len) if self.components else []


class GraphDocument(BaseModel):
    """
    JSON document for an exported graph (schema "divgraph/1").

    Attributes:
        schema_version: Always "divgraph/1" (serialized as "schema").
        n: Degree, or None for raw input.
        group: "S", "A" or None for raw input.
        kind: Which graph.
        vertices: Vertex keys.
        edges: [i, j] index pairs with i < j.
        parts: Bipartition labels for B(X).
        components: Vertex keys per component.
        diameters: Per-component diameters (None when over budget).
        overall_diameter: Maximum diameter (None when over budget).
        isolated: Keys of K_1 components.
        null_graph: True when there are no vertices.
        origin: Class labels per size vertex.
        factors: Factor maps per size vertex; absent for Delta(X).
    """

    schema_version: Literal["divgraph/1"] = SCHEMA_VERSION
    n: Optional[int] = None
    group: Optional[Group] = None
    kind: GraphKind
    vertices: list[str]
    edges: list[list[int]]
    parts: Optional[list[str]] = None
    components: list[list[str]]
    diameters: list[Optional[int]]
    overall_diameter: Optional[int]
    isolated: list[str]
    null_graph: bool
    origin: dict[str, list[str]] = {}
    factors: Optional[dict[str, dict[str, int]]] = None

    def to_json_dict(self) -> dict[str, Any]:
        """
        Dump with the schema key spelled "schema".

        Returns:
            dict[str, Any]: JSON-ready mapping.
        """
        data = self.model_dump(mode="json")
        data = {"schema": data.pop("schema_version"), **data}
        if data["factors"] is None:
            data.pop("factors")
        if data["parts"] is None:
            data.pop("parts")
        return data
