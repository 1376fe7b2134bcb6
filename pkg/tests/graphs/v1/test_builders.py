# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Unit tests for the graph builders and the UGraph structure."""

import math
from itertools import combinations

import numpy as np
import pytest

from divgraph.cycletypes.v1.schemas import Group
from divgraph.errors.v1.exceptions import InternalInconsistencyError
from divgraph.graphs.v1.builders import (
    ExponentMatrix,
    build_B,
    build_D,
    build_Delta,
    build_Gamma,
    build_graph,
)
from divgraph.graphs.v1.schemas import GraphKind, UGraph
from divgraph.graphs.v1.sizes import size_set, size_set_from_integers


def key_edges(g: UGraph) -> set[frozenset[str]]:
    """
    Helper to express edges by vertex key.
    """
    return {frozenset((g.vertices[u], g.vertices[v])) for u, v in g.edges()}


def test_d_s5():
    """
    Test D(S_5): 10|20, 10|30, 15|30 and 24 isolated.
    """
    g = build_D(size_set(5, Group.SYMMETRIC))

    assert g.vertices == ("10", "15", "20", "24", "30")
    assert g.edges() == [(0, 2), (0, 4), (1, 4)]
    assert g.edge_count == 3
    assert g.degree(3) == 0
    assert g.has_edge(4, 0) and g.has_edge(0, 4)
    assert not g.has_edge(2, 4)
    assert g.neighbors(0).tolist() == [2, 4]
    assert g.neighbors(4).tolist() == [0, 1]
    assert g.kind is GraphKind.D


@pytest.mark.parametrize(
    "values",
    [
        [10, 15, 20, 24, 30],
        [2, 3],
        list(range(2, 60)),
        [6, 35, 210, 77, 143, 1001, 2 * 3 * 5 * 7 * 11 * 13],
    ],
)
def test_d_and_gamma_match_integer_arithmetic(values):
    """
    Test D and Gamma against modulo and gcd on plain integers.
    """
    sizes = size_set_from_integers(values)
    ints = [int(key) for key in sizes.keys]

    d_expected = {
        frozenset((str(a), str(b)))
        for a, b in combinations(ints, 2)
        if b % a == 0 or a % b == 0
    }
    gamma_expected = {
        frozenset((str(a), str(b)))
        for a, b in combinations(ints, 2)
        if math.gcd(a, b) > 1
    }

    assert key_edges(build_D(sizes)) == d_expected
    assert key_edges(build_Gamma(sizes)) == gamma_expected


def test_workers_do_not_change_output():
    """
    Test that the threaded pairwise pass yields the same CSR arrays.
    """
    sizes = size_set(14, Group.SYMMETRIC)
    single = build_D(sizes, workers=1)
    threaded = build_D(sizes, workers=4)

    assert np.array_equal(single.indptr, threaded.indptr)
    assert np.array_equal(single.indices, threaded.indices)


def test_gamma_s5_is_complete():
    """
    Test that every pair of S_5 class sizes shares a prime.
    """
    g = build_Gamma(size_set(5, Group.SYMMETRIC))

    assert g.edge_count == 10


def test_delta():
    """
    Test Delta(X): p ~ q iff pq divides some element.
    """
    without = build_Delta(size_set_from_integers([4, 9]))
    assert without.vertices == ("2", "3")
    assert without.edge_count == 0

    with_six = build_Delta(size_set_from_integers([4, 6, 9]))
    assert key_edges(with_six) == {frozenset(("2", "3"))}
    assert with_six.kind is GraphKind.DELTA


def test_bipartite():
    """
    Test B({3, 6, 8}): primes first, then sizes.
    """
    g = build_B(size_set_from_integers([3, 6, 8]))

    assert g.vertices == ("p:2", "p:3", "3", "6", "8")
    assert g.parts == ("prime", "prime", "size", "size", "size")
    assert g.edges() == [(0, 3), (0, 4), (1, 2), (1, 3)]


def test_null_graph():
    """
    Test that the empty size set gives a graph without vertices.
    """
    for kind in GraphKind:
        g = build_graph(size_set(2, Group.SYMMETRIC), kind)
        assert g.vertex_count == 0
        assert g.edge_count == 0
        assert g.edges() == []


def test_build_graph_dispatch():
    """
    Test that build_graph returns the requested kind.
    """
    sizes = size_set(6, Group.ALTERNATING)

    for kind in GraphKind:
        assert build_graph(sizes, kind).kind is kind


def test_exponent_matrix():
    """
    Test the prime exponent table of {12, 45}.
    """
    matrix = ExponentMatrix(size_set_from_integers([12, 45]))

    assert matrix.primes == [2, 3, 5]
    assert matrix.table.tolist() == [[2, 0], [1, 2], [0, 1]]
    assert matrix.support == [[(0, 2), (1, 1)], [(1, 2), (2, 1)]]


@pytest.mark.parametrize(
    "rows, cols",
    [
        ([1], [1]),
        ([0], [3]),
        ([1, 0], [2, 2]),
        ([0, 0], [1, 1]),
    ],
)
def test_from_edges_rejects_bad_input(rows, cols):
    """
    Test loops, out-of-range endpoints, unsorted and duplicate edges.
    """
    with pytest.raises(InternalInconsistencyError):
        UGraph.from_edges(GraphKind.D, ("a", "b", "c"), np.array(rows), np.array(cols))


def test_to_networkx():
    """
    Test the networkx conversion keeps keys and edges.
    """
    g = build_D(size_set(5, Group.SYMMETRIC))
    graph = g.to_networkx()

    assert sorted(graph.nodes) == sorted(g.vertices)
    assert graph.number_of_edges() == 3
    assert graph.has_edge("15", "30")


@pytest.mark.parametrize(
    "n, group",
    [(n, Group.SYMMETRIC) for n in range(3, 13)]
    + [(n, Group.ALTERNATING) for n in range(4, 14)],
)
def test_d_edges_are_gamma_edges(n, group):
    """
    Test that divisibility between sizes > 1 implies a shared prime.
    """
    sizes = size_set(n, group)
    d_graph, gamma = build_D(sizes), build_Gamma(sizes)

    assert d_graph.vertices == gamma.vertices
    assert set(d_graph.edges()) <= set(gamma.edges())


def test_d_edges_are_gamma_edges_for_raw_sets():
    """
    Test the same inclusion on an arbitrary integer set.
    """
    sizes = size_set_from_integers(range(2, 200))

    assert key_edges(build_D(sizes)) <= key_edges(build_Gamma(sizes))
