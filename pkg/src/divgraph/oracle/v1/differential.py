# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Differential check of the class size formulas against brute enumeration."""

import logging
import time
from collections import defaultdict
from typing import Any, Optional

from divgraph.cycletypes.v1.partitions import (
    enumerate_cycle_types,
    parity,
    splits_in_alternating,
)
from divgraph.cycletypes.v1.schemas import CycleType, Parity
from divgraph.errors.v1.exceptions import CapacityRefusedError, InvalidArgumentError
from divgraph.oracle.v1.brute import (
    ORBIT_CAP,
    TALLY_CAP,
    brute_centralizer_order,
    brute_class_sizes,
    perm_sign,
    representative,
)
from divgraph.orders.v1.classes import (
    centralizer_order_alt,
    centralizer_order_sym,
    class_record,
    class_sizes_alt,
)
from divgraph.verdicts.v1.reports import finish_report
from divgraph.verdicts.v1.schemas import VerdictReport

logger = logging.getLogger(__name__)


def _check_tallies(n: int, cap: int) -> Optional[dict[str, Any]]:
    for alternating in (False, True):
        tally = brute_class_sizes(n, alternating, cap=cap)
        counted = {item.ct: item.size for item in tally}
        for ct in enumerate_cycle_types(n):
            rec = class_record(ct)
            if alternating and not rec.even:
                expected = 0
            else:
                expected = rec.size_sym.value
            if counted.get(ct, 0) != expected:
                return {
                    "check": "tally",
                    "n": n,
                    "group": "A" if alternating else "S",
                    "cycle_type": ct.label,
                    "brute": counted.get(ct, 0),
                    "formula": expected,
                }
    return None


def _check_centralizers(n: int) -> Optional[dict[str, Any]]:
    for ct in enumerate_cycle_types(n):
        g = representative(ct)
        even = parity(ct) is Parity.EVEN
        if (perm_sign(g) > 0) != even:
            return {"check": "parity", "n": n, "cycle_type": ct.label}

        brute_sym = brute_centralizer_order(n, g)
        if brute_sym != centralizer_order_sym(ct).value:
            return {
                "check": "centralizer-sym",
                "n": n,
                "cycle_type": ct.label,
                "brute": brute_sym,
                "formula": centralizer_order_sym(ct).value,
            }
        if not even:
            continue

        brute_alt = brute_centralizer_order(n, g, alternating=True)
        if brute_alt != centralizer_order_alt(ct).value:
            return {
                "check": "centralizer-alt",
                "n": n,
                "cycle_type": ct.label,
                "brute": brute_alt,
                "formula": centralizer_order_alt(ct).value,
            }
        if ct.fixed_points >= 2 and brute_sym != 2 * brute_alt:
            return {"check": "halving", "n": n, "cycle_type": ct.label}
    return None


def check_alternating_orbits(
    n: int, cap: int = ORBIT_CAP
) -> Optional[dict[str, Any]]:
    """
    Compare the conjugacy orbits of A_n with the splitting rule and A_n sizes.

    Args:
        n: Degree.
        cap: Orbit mode degree cap.

    Returns:
        Optional[dict[str, Any]]: Witness of the first mismatch, or None.
    """
    orbits: dict[CycleType, list[int]] = defaultdict(list)
    for item in brute_class_sizes(n, alternating=True, mode="orbit", cap=cap):
        orbits[item.ct].append(item.size)

    for ct in enumerate_cycle_types(n):
        if parity(ct) is Parity.ODD:
            if ct in orbits:
                return {"check": "orbit-parity", "n": n, "cycle_type": ct.label}
            continue
        expected = [size.value for size in class_sizes_alt(ct)]
        if sorted(orbits.get(ct, [])) != sorted(expected):
            return {
                "check": "orbit-split",
                "n": n,
                "cycle_type": ct.label,
                "splits": splits_in_alternating(ct),
                "brute": orbits.get(ct, []),
                "formula": expected,
            }
    return None


def verify_oracle(
    max_n: int = ORBIT_CAP,
    tally_cap: int = TALLY_CAP,
    orbit_cap: int = ORBIT_CAP,
) -> VerdictReport:
    """
    Check the formulas against brute force for every degree up to max_n.

    Class size tallies run for n <= tally_cap and A_n orbit splitting for
    n <= orbit_cap. Centralizer counts, parity and the halving rule always
    stop at the fixed centralizer cap of 7.

    Args:
        max_n: Largest degree to check.
        tally_cap: Degree cap of the tally checks.
        orbit_cap: Degree cap of the orbit checks.

    Returns:
        VerdictReport: pass, or fail with the first mismatch.

    Raises:
        InvalidArgumentError: Raised if max_n < 1.
        CapacityRefusedError: Raised if max_n exceeds the tally cap.
    """
    if max_n < 1:
        raise InvalidArgumentError(f"oracle needs max_n >= 1, got {max_n}")
    if max_n > tally_cap:
        raise CapacityRefusedError("oracle tally", tally_cap, max_n)

    started = time.perf_counter()
    witness = None
    for n in range(1, max_n + 1):
        witness = _check_tallies(n, tally_cap)
        if witness is None and n <= ORBIT_CAP:
            witness = _check_centralizers(n)
        if witness is None and n <= orbit_cap:
            witness = check_alternating_orbits(n, orbit_cap)
        if witness is not None:
            break
        logger.debug(f"oracle agrees with the formulas for n={n}")

    details = {
        "tally_max_n": min(max_n, tally_cap),
        "orbit_max_n": min(max_n, orbit_cap),
        "centralizer_max_n": min(max_n, ORBIT_CAP),
    }
    n_range = list(range(1, max_n + 1))
    return finish_report("oracle", n_range, started, witness, details)
