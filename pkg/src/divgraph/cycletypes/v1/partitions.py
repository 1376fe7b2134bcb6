# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Enumeration of cycle types and operations on them (parity, splitting, powers)."""

import logging
from functools import lru_cache
from math import gcd

from sympy.utilities.iterables import partitions

from divgraph.cycletypes.v1.schemas import CycleType, Parity
from divgraph.errors.v1.exceptions import InvalidArgumentError

logger = logging.getLogger(__name__)


def _check_degree(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"n must be a positive integer, got {n!r}")


@lru_cache(maxsize=64)
def _cycle_types(n: int) -> tuple[CycleType, ...]:
    found = [
        CycleType.from_multiplicities(n, dict(mults))
        for mults in partitions(n)  # NOTE: sympy reuses the yielded dict
    ]
    found.sort(key=lambda ct: ct.lengths)
    logger.debug(f"Enumerated {len(found)} cycle types of degree {n}")
    return tuple(found)


def enumerate_cycle_types(n: int) -> list[CycleType]:
    """
    Enumerate every cycle type of S_n exactly once.

    The order is lexicographic on the ascending multiset of all cycle lengths
    (fixed points included), so the identity [1^n] always comes first.

    Args:
        n: Degree, n >= 1.

    Returns:
        list[CycleType]: p(n) cycle types in canonical order.

    Raises:
        InvalidArgumentError: Raised if n is not a positive integer.
    """
    _check_degree(n)
    return list(_cycle_types(n))


def parity(ct: CycleType) -> Parity:
    """
    Return the parity of any permutation with this cycle type.

    Args:
        ct: The cycle type.

    Returns:
        Parity: EVEN iff sum of k*(m - 1) over all parts is even.
    """
    transpositions = sum(mult * (length - 1) for length, mult in ct.parts)
    return Parity.EVEN if transpositions % 2 == 0 else Parity.ODD


def splits_in_alternating(ct: CycleType) -> bool:
    """
    Decide whether the S_n class of an even type splits into two A_n classes.

    A non-identity class splits exactly when every part length is odd, every
    multiplicity is 1 and at most one point is fixed.

    Args:
        ct: An even cycle type.

    Returns:
        bool: True iff the class splits into two A_n classes of equal size.

    Raises:
        InvalidArgumentError: Raised if the type is odd (not contained in A_n).
    """
    if parity(ct) is Parity.ODD:
        raise InvalidArgumentError(f"{ct.label} is odd and does not lie in A_{ct.n}")

    if ct.is_identity or ct.fixed_points > 1:
        return False

    return all(mult == 1 and length % 2 == 1 for length, mult in ct.parts)


def power(ct: CycleType, m: int) -> CycleType:
    """
    Return the cycle type of delta^m for delta of type ct.

    A cycle of length L splits into gcd(L, m) cycles of length L / gcd(L, m).

    Args:
        ct: The cycle type of delta.
        m: A positive exponent.

    Returns:
        CycleType: The cycle type of delta^m (same degree).

    Raises:
        InvalidArgumentError: Raised if m < 1.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidArgumentError(f"power exponent must be positive, got {m!r}")

    mults: dict[int, int] = {}
    for length, mult in ct.parts:
        g = gcd(length, m)
        new_length = length // g
        mults[new_length] = mults.get(new_length, 0) + mult * g

    return CycleType.from_multiplicities(ct.n, mults)


def is_single_cycle(ct: CycleType, length: int) -> bool:
    """
    True iff ct is a single cycle of the given length, i.e. [1^(n-l), l^1].

    Args:
        ct: The cycle type.
        length: The cycle length to test for.

    Returns:
        bool: Whether ct is one cycle of that length plus fixed points.
    """
    return ct.parts == ((length, 1),)
