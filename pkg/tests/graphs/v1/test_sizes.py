# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Unit tests for class size sets."""

import pytest

from divgraph.cycletypes.v1.schemas import CycleType, Group
from divgraph.errors.v1.exceptions import (
    InternalInconsistencyError,
    InvalidArgumentError,
)
from divgraph.graphs.v1.schemas import SizeSet
from divgraph.graphs.v1.sizes import (
    size_set,
    size_set_alt,
    size_set_from_integers,
    size_set_sym,
    vertex_of,
)
from divgraph.orders.v1.factored import FactoredNat


def test_size_set_s5():
    """
    Test cs(S_5)* with the classes behind every size.
    """
    sizes = size_set_sym(5)

    assert sizes.keys == ("10", "15", "20", "24", "30")
    assert sizes.n == 5
    assert sizes.group is Group.SYMMETRIC
    assert sizes.origin[FactoredNat.from_int(20)] == ("[1^2,3^1]", "[2^1,3^1]")
    assert len(sizes) == 5


def test_size_set_s4():
    """
    Test that cs(S_4)* is {3, 6, 8}.
    """
    assert size_set(4, Group.SYMMETRIC).keys == ("3", "6", "8")


def test_size_set_alternating_splits():
    """
    Test that both halves of a split class map to one size with +/- labels.
    """
    a5 = size_set_alt(5)
    assert a5.keys == ("12", "15", "20")
    assert a5.origin[FactoredNat.from_int(12)] == ("[5^1]+", "[5^1]-")
    assert a5.group is Group.ALTERNATING

    a4 = size_set(4, Group.ALTERNATING)
    assert a4.keys == ("3", "4")
    assert a4.origin[FactoredNat.from_int(4)] == ("[1^1,3^1]+", "[1^1,3^1]-")


@pytest.mark.parametrize(
    "n, group",
    [
        (1, Group.SYMMETRIC),
        (2, Group.SYMMETRIC),
        (1, Group.ALTERNATING),
        (2, Group.ALTERNATING),
        (3, Group.ALTERNATING),
    ],
)
def test_null_size_sets(n, group):
    """
    Test that abelian groups have no class size other than 1.
    """
    assert size_set(n, group).sizes == ()


def test_size_set_from_integers():
    """
    Test that raw input drops 1s and duplicates and sorts ascending.
    """
    sizes = size_set_from_integers([30, 10, 1, 24, 10, 15, 20])

    assert sizes.keys == ("10", "15", "20", "24", "30")
    assert sizes.origin[FactoredNat.from_int(24)] == ("24",)
    assert sizes.n is None and sizes.group is None

    with pytest.raises(InvalidArgumentError):
        size_set_from_integers([4, 0])


def test_size_set_invariants():
    """
    Test that unsorted or unlabelled sizes are internal inconsistencies.
    """
    six, four = FactoredNat.from_int(6), FactoredNat.from_int(4)

    with pytest.raises(InternalInconsistencyError):
        SizeSet(sizes=(six, four), origin={six: ("6",), four: ("4",)})
    with pytest.raises(InternalInconsistencyError):
        SizeSet(sizes=(four,), origin={})


def test_vertex_of():
    """
    Test mapping cycle types to vertex indices.
    """
    sym = size_set_sym(5)
    assert vertex_of(sym, CycleType.cycle(5, 5), Group.SYMMETRIC) == 3
    assert vertex_of(sym, CycleType.identity(5), Group.SYMMETRIC) is None

    alt = size_set_alt(5)
    assert vertex_of(alt, CycleType.cycle(5, 5), Group.ALTERNATING) == 0
    with pytest.raises(InvalidArgumentError):
        vertex_of(alt, CycleType.cycle(5, 2), Group.ALTERNATING)
