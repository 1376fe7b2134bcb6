# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Verifiers for the arithmetic lemmas about centralizer orders."""

import logging
import math
import time
from typing import Any, Optional

from sympy import isprime

from divgraph.cycletypes.v1.partitions import (
    enumerate_cycle_types,
    is_single_cycle,
    parity,
)
from divgraph.cycletypes.v1.schemas import Group, Parity
from divgraph.errors.v1.exceptions import InvalidArgumentError
from divgraph.orders.v1.classes import (
    centralizer_order_alt,
    centralizer_order_sym,
    class_records,
    factorial_factored,
    product_over_parts,
)
from divgraph.orders.v1.factored import TWO
from divgraph.verdicts.v1.reports import finish_report
from divgraph.verdicts.v1.schemas import VerdictReport

logger = logging.getLogger(__name__)


def verify_lemma2(x: int) -> VerdictReport:
    """
    Check that prod k_i! m_i^k_i divides x! for every fixed-point-free type of x.

    When some part has length >= 3, twice the product must divide x! as well.

    Args:
        x: The sum of all parts, x >= 1.

    Returns:
        VerdictReport: pass, or fail with the first offending type.

    Raises:
        InvalidArgumentError: Raised if x < 1.
    """
    if x < 1:
        raise InvalidArgumentError(f"lemma2 needs x >= 1, got {x}")

    started = time.perf_counter()
    target = factorial_factored(x)
    checked = 0
    witness = None

    for ct in enumerate_cycle_types(x):
        if ct.fixed_points:
            continue
        checked += 1
        product = product_over_parts(ct)
        doubled = any(length >= 3 for length, _ in ct.parts)
        needed = product * TWO if doubled else product
        if not needed.divides(target):
            witness = {
                "x": x,
                "cycle_type": ct.label,
                "product": str(product),
                "doubled": doubled,
            }
            break

    return finish_report("lemma2", [x], started, witness, {"types_checked": checked})


def verify_lemma8(n: int) -> VerdictReport:
    """
    Check that for primes p >= n-1, p divides |C_{S_n}(delta)| iff delta is a p-cycle.

    Args:
        n: Degree, n > 2.

    Returns:
        VerdictReport: pass, or fail naming the prime and the cycle type.

    Raises:
        InvalidArgumentError: Raised if n <= 2.
    """
    if n <= 2:
        raise InvalidArgumentError(f"lemma8 needs n > 2, got {n}")

    started = time.perf_counter()
    primes = [p for p in (n - 1, n) if isprime(p)]
    witness = None

    for ct in enumerate_cycle_types(n):
        if witness:
            break
        if ct.is_identity:
            continue
        order = centralizer_order_sym(ct)
        for p in primes:
            if (order.exponent(p) > 0) != is_single_cycle(ct, p):
                witness = {"n": n, "prime": p, "cycle_type": ct.label}
                break

    details = {"primes": primes}
    return finish_report("lemma8", [n], started, witness, details, Group.SYMMETRIC)


def verify_lemma11(n: int) -> VerdictReport:
    """
    Check that for primes p >= n-2, p divides |C_{A_n}(delta)| iff delta is a p-cycle.

    Args:
        n: Degree, n >= 9.

    Returns:
        VerdictReport: pass, or fail naming the prime and the cycle type.

    Raises:
        InvalidArgumentError: Raised if n < 9.
    """
    if n < 9:
        raise InvalidArgumentError(f"lemma11 needs n >= 9, got {n}")

    started = time.perf_counter()
    primes = [p for p in (n - 2, n - 1, n) if isprime(p)]
    witness = None

    for ct in enumerate_cycle_types(n):
        if witness:
            break
        if ct.is_identity or parity(ct) is Parity.ODD:
            continue
        order = centralizer_order_alt(ct)
        for p in primes:
            if (order.exponent(p) > 0) != is_single_cycle(ct, p):
                witness = {"n": n, "prime": p, "cycle_type": ct.label}
                break

    details = {"primes": primes}
    return finish_report(
        "lemma11", [n], started, witness, details, Group.ALTERNATING
    )


def verify_identities(n: int) -> VerdictReport:
    """
    Check the exact counting identities for one degree.

    Sum of S_n class sizes is n!, sum of A_n class sizes is n!/2 (n >= 2), every
    size times its centralizer is n!, and every A_n size is the S_n size or half.

    Args:
        n: Degree, n >= 1.

    Returns:
        VerdictReport: pass, or fail naming the identity that broke.

    Raises:
        InvalidArgumentError: Raised if n < 1.
    """
    if n < 1:
        raise InvalidArgumentError(f"identities need n >= 1, got {n}")

    started = time.perf_counter()
    records = class_records(n)
    order = factorial_factored(n)
    witness: Optional[dict[str, Any]] = None

    for rec in records:
        if rec.size_sym * rec.centralizer_sym != order:
            witness = {"identity": "orbit-stabilizer", "cycle_type": rec.ct.label}
            break
        if rec.size_alt is not None and rec.size_alt not in (
            rec.size_sym,
            rec.size_sym.halve() if rec.size_sym.exponent(2) else None,
        ):
            witness = {"identity": "corollary4", "cycle_type": rec.ct.label}
            break

    total_sym = sum(rec.size_sym.value for rec in records)
    total_alt = sum(
        rec.size_alt.value * (2 if rec.split else 1)
        for rec in records
        if rec.size_alt is not None
    )
    expected = math.factorial(n)

    if witness is None and total_sym != expected:
        witness = {
            "identity": "sum-sym",
            "sum": str(total_sym),
            "expected": str(expected),
        }
    if witness is None and n >= 2 and 2 * total_alt != expected:
        witness = {
            "identity": "sum-alt",
            "sum": str(total_alt),
            "expected": str(expected // 2),
        }

    details = {"classes": len(records)}
    return finish_report("identities", [n], started, witness, details)
