# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Sets of conjugacy class sizes cs(G)* for S_n and A_n, and raw integer sets."""

import logging
from collections import defaultdict
from typing import Iterable, Optional

from divgraph.cycletypes.v1.partitions import enumerate_cycle_types
from divgraph.cycletypes.v1.schemas import CycleType, Group
from divgraph.errors.v1.exceptions import InvalidArgumentError
from divgraph.graphs.v1.schemas import SizeSet
from divgraph.orders.v1.classes import class_record, class_size_sym
from divgraph.orders.v1.factored import ONE, FactoredNat

logger = logging.getLogger(__name__)

SPLIT_LABELS = ("+", "-")


def _collect(
    labelled: Iterable[tuple[FactoredNat, str]],
    n: Optional[int],
    group: Optional[Group],
) -> SizeSet:
    origin: dict[FactoredNat, list[str]] = defaultdict(list)
    for size, label in labelled:
        if size != ONE:
            origin[size].append(label)

    sizes = tuple(sorted(origin, key=lambda size: size.value))
    return SizeSet(
        sizes=sizes,
        origin={size: tuple(origin[size]) for size in sizes},
        n=n,
        group=group,
    )


def size_set_sym(n: int) -> SizeSet:
    """
    Class sizes of S_n other than 1, with the cycle types that attain each.

    Args:
        n: Degree, n >= 1.

    Returns:
        SizeSet: cs(S_n)* in ascending order.
    """
    labelled = ((class_size_sym(ct), ct.label) for ct in enumerate_cycle_types(n))
    size_set = _collect(labelled, n, Group.SYMMETRIC)
    logger.debug(f"|cs(S_{n})*| = {len(size_set)}")
    return size_set


def size_set_alt(n: int) -> SizeSet:
    """
    Class sizes of A_n other than 1; both halves of a split class map to one size.

    Split halves are labelled with a "+" or "-" suffix in the origin map.

    Args:
        n: Degree, n >= 1.

    Returns:
        SizeSet: cs(A_n)* in ascending order.
    """

    def labelled() -> Iterable[tuple[FactoredNat, str]]:
        for ct in enumerate_cycle_types(n):
            rec = class_record(ct)
            if rec.size_alt is None:
                continue
            if rec.split:
                for suffix in SPLIT_LABELS:
                    yield rec.size_alt, f"{ct.label}{suffix}"
            else:
                yield rec.size_alt, ct.label

    size_set = _collect(labelled(), n, Group.ALTERNATING)
    logger.debug(f"|cs(A_{n})*| = {len(size_set)}")
    return size_set


def size_set(n: int, group: Group) -> SizeSet:
    """
    Dispatch to size_set_sym or size_set_alt.

    Args:
        n: Degree.
        group: Which group.

    Returns:
        SizeSet: cs(G)*.
    """
    if group is Group.SYMMETRIC:
        return size_set_sym(n)
    return size_set_alt(n)


def size_set_from_integers(values: Iterable[int]) -> SizeSet:
    """
    Build X* from raw positive integers; duplicates and 1s are dropped.

    Args:
        values: Positive integers.

    Returns:
        SizeSet: X* with each value labelled by its own decimal form.

    Raises:
        InvalidArgumentError: Raised for non-positive values.
    """
    labelled = []
    for value in set(values):
        if value < 1:
            raise InvalidArgumentError(f"expected positive integers, got {value}")
        labelled.append((FactoredNat.from_int(value), str(value)))
    return _collect(labelled, None, None)


def vertex_of(sizes: SizeSet, ct: CycleType, group: Group) -> Optional[int]:
    """
    Vertex index of the class of ct in D(G); None when the class has size 1.

    Args:
        sizes: cs(G)* for the degree of ct.
        ct: The cycle type (must be even for A_n).
        group: Which group.

    Returns:
        Optional[int]: Vertex index, or None for size-1 classes.

    Raises:
        InvalidArgumentError: Raised if ct is odd and group is A_n.
    """
    rec = class_record(ct)
    size = rec.size_sym if group is Group.SYMMETRIC else rec.size_alt
    if size is None:
        raise InvalidArgumentError(f"{ct.label} is odd and does not lie in A_{ct.n}")
    return sizes.index.get(size)
