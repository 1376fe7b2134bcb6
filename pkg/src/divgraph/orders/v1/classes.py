# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Centralizer orders and conjugacy class sizes in S_n and A_n, in factored form."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from sympy import factorint, primerange

from divgraph.cycletypes.v1.partitions import (
    enumerate_cycle_types,
    parity,
    splits_in_alternating,
)
from divgraph.cycletypes.v1.schemas import CycleType, Parity
from divgraph.errors.v1.exceptions import (
    InternalInconsistencyError,
    InvalidArgumentError,
)
from divgraph.orders.v1.factored import ONE, FactoredNat

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def factorial_factored(n: int) -> FactoredNat:
    """
    Factor n! with Legendre's formula, v_p(n!) = sum_j floor(n / p^j).

    Args:
        n: A non-negative integer.

    Returns:
        FactoredNat: The prime factorization of n!.

    Raises:
        InvalidArgumentError: Raised if n is negative.
    """
    if n < 0:
        raise InvalidArgumentError(f"factorial of negative number {n}")

    exponents: dict[int, int] = {}
    for prime in primerange(2, n + 1):
        power, exp = prime, 0
        while power <= n:
            exp += n // power
            power *= prime
        exponents[int(prime)] = exp

    return FactoredNat(tuple(sorted(exponents.items())))


@lru_cache(maxsize=None)
def _factor_small(m: int) -> FactoredNat:
    return FactoredNat(tuple(sorted((int(p), e) for p, e in factorint(m).items())))


def centralizer_order_sym(ct: CycleType) -> FactoredNat:
    """
    Order of the centralizer in S_n: (prod k_i! * m_i^k_i) * t!.

    Args:
        ct: The cycle type.

    Returns:
        FactoredNat: |C_{S_n}(delta)|.
    """
    return product_over_parts(ct) * factorial_factored(ct.fixed_points)


def _check_even(ct: CycleType) -> None:
    if parity(ct) is Parity.ODD:
        raise InvalidArgumentError(f"{ct.label} is odd and does not lie in A_{ct.n}")


def centralizer_order_alt(ct: CycleType) -> FactoredNat:
    """
    Order of the centralizer in A_n of an even permutation.

    Equal to the S_n centralizer when the class splits (and for the trivial
    group A_1), half of it otherwise.

    Args:
        ct: An even cycle type.

    Returns:
        FactoredNat: |C_{A_n}(delta)|.

    Raises:
        InvalidArgumentError: Raised if ct is odd.
    """
    _check_even(ct)
    order = centralizer_order_sym(ct)
    if ct.n < 2 or splits_in_alternating(ct):
        return order
    return order.halve()


def class_size_sym(ct: CycleType) -> FactoredNat:
    """
    Size of the S_n conjugacy class, n! / |C_{S_n}(delta)|.

    Args:
        ct: The cycle type.

    Returns:
        FactoredNat: |delta^{S_n}|.

    Raises:
        InternalInconsistencyError: Raised if the centralizer does not divide n!.
    """
    try:
        return factorial_factored(ct.n).exact_divide(centralizer_order_sym(ct))
    except InternalInconsistencyError as exc:
        raise InternalInconsistencyError(
            f"centralizer of {ct.label} does not divide {ct.n}!: {exc}"
        ) from exc


def class_sizes_alt(ct: CycleType) -> tuple[FactoredNat, ...]:
    """
    Sizes of the A_n classes an even S_n class becomes.

    Args:
        ct: An even cycle type.

    Returns:
        tuple[FactoredNat, ...]: Two equal halves when the class splits, else the
            S_n size once.

    Raises:
        InvalidArgumentError: Raised if ct is odd.
    """
    _check_even(ct)
    size = class_size_sym(ct)
    if splits_in_alternating(ct):
        half = size.halve()
        return (half, half)
    return (size,)


@dataclass(frozen=True)
class ClassRecord:
    """
    Everything known about one cycle type of S_n.

    Attributes:
        ct: The cycle type.
        centralizer_sym: |C_{S_n}(delta)|.
        size_sym: |delta^{S_n}|.
        size_alt: |delta^{A_n}| for each resulting A_n class (None when odd).
        split: Whether the class splits in A_n.
    """

    ct: CycleType
    centralizer_sym: FactoredNat
    size_sym: FactoredNat
    size_alt: Optional[FactoredNat]
    split: bool

    @property
    def even(self) -> bool:
        """True iff the type lies in A_n."""
        return self.size_alt is not None


def class_record(ct: CycleType) -> ClassRecord:
    """
    Build the ClassRecord of one cycle type.

    Args:
        ct: The cycle type.

    Returns:
        ClassRecord: Centralizer, sizes and splitting of ct.
    """
    centralizer = centralizer_order_sym(ct)
    size_sym = class_size_sym(ct)
    if parity(ct) is Parity.ODD:
        return ClassRecord(ct, centralizer, size_sym, None, False)

    split = splits_in_alternating(ct)
    size_alt = size_sym.halve() if split else size_sym
    return ClassRecord(ct, centralizer, size_sym, size_alt, split)


def class_records(n: int) -> list[ClassRecord]:
    """
    Build the ClassRecord of every cycle type of S_n, in canonical order.

    Args:
        n: Degree.

    Returns:
        list[ClassRecord]: One record per cycle type.
    """
    records = [class_record(ct) for ct in enumerate_cycle_types(n)]
    logger.debug(f"Computed {len(records)} class records for n={n}")
    return records


def product_over_parts(ct: CycleType) -> FactoredNat:
    """
    The product prod k_i! * m_i^k_i over the non-trivial parts (t! excluded).

    Args:
        ct: The cycle type.

    Returns:
        FactoredNat: The product.
    """
    order = ONE
    for length, mult in ct.parts:
        order = order * (_factor_small(length) ** mult) * factorial_factored(mult)
    return order
