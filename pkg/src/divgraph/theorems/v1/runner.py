# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Dispatch of claim names to verifiers over ranges of degrees.

Independent degrees run in a process pool; reports come back in canonical
(claim, group, n) order whatever the completion order was.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional

from divgraph.cycletypes.v1.schemas import Group
from divgraph.errors.v1.exceptions import CapacityRefusedError, InvalidArgumentError
from divgraph.logging.v1.context import RUN_ID_CONTEXTVAR, adopt_run_id
from divgraph.oracle.v1.differential import verify_oracle
from divgraph.orders.v1.lemmas import (
    verify_identities,
    verify_lemma2,
    verify_lemma8,
    verify_lemma11,
)
from divgraph.settings.v1.protocols import BudgetSettingsProtocol
from divgraph.settings.v1.schemas import DivgraphSettings
from divgraph.theorems.v1.verifiers import (
    conjecture_sweep,
    diameter_bounds,
    reproduce_figures,
    verify_corollary2,
    verify_corollary14,
    verify_lemma14,
    verify_lemma15,
    verify_remark0,
    verify_theorem9,
    verify_theorem13,
)
from divgraph.verdicts.v1.reports import sort_reports
from divgraph.verdicts.v1.schemas import VerdictReport

logger = logging.getLogger(__name__)

DEFAULT_RANGES: dict[str, tuple[int, int]] = {
    "lemma2": (1, 25),
    "lemma8": (7, 40),
    "lemma11": (9, 40),
    "theorem9": (7, 40),
    "theorem13": (9, 40),
    "corollary2": (3, 40),
    "corollary14": (4, 40),
    "identities": (1, 40),
    "diameter-bounds": (1, 25),
    "conjecture": (1, 25),
    "remark0": (1, 20),
    "lemma14": (9, 20),
    "lemma15": (9, 20),
    "figures": (3, 8),
    "oracle": (1, 8),
}
CLAIMS = tuple(DEFAULT_RANGES)
GROUP_CLAIMS = frozenset({"diameter-bounds", "conjecture", "remark0"})
_DIAMETER_CLAIMS = frozenset({"diameter-bounds", "conjecture"})
_GRAPH_CLAIMS = frozenset(
    {"theorem9", "theorem13", "corollary2", "corollary14", "remark0", "lemma14"}
    | {"lemma15"}
    | _DIAMETER_CLAIMS
)


def default_range(claim: str) -> list[int]:
    """
    The degrees a claim is checked over when none are given.

    Args:
        claim: Claim name.

    Returns:
        list[int]: Default degrees.

    Raises:
        InvalidArgumentError: Raised for unknown claims.
    """
    if claim not in DEFAULT_RANGES:
        raise InvalidArgumentError(
            f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}"
        )
    low, high = DEFAULT_RANGES[claim]
    return list(range(low, high + 1))


def _check_budgets(claim: str, ns: list[int], budgets: BudgetSettingsProtocol) -> None:
    if not ns:
        return
    if claim in _GRAPH_CLAIMS and max(ns) > budgets.max_build_n:
        raise CapacityRefusedError("build degree budget", budgets.max_build_n, max(ns))
    if claim in _DIAMETER_CLAIMS and max(ns) > budgets.max_diameter_n:
        raise CapacityRefusedError(
            "diameter degree budget", budgets.max_diameter_n, max(ns)
        )


def _single(
    claim: str, group: Optional[Group], settings: DivgraphSettings
) -> Callable[[int], VerdictReport]:
    budgets = settings.budgets
    table: dict[str, Callable[[int], VerdictReport]] = {
        "lemma2": verify_lemma2,
        "lemma8": verify_lemma8,
        "lemma11": verify_lemma11,
        "identities": verify_identities,
        "theorem9": verify_theorem9,
        "theorem13": verify_theorem13,
        "corollary2": verify_corollary2,
        "corollary14": verify_corollary14,
        "lemma14": verify_lemma14,
        "lemma15": verify_lemma15,
    }
    if claim in table:
        return table[claim]
    assert group is not None
    if claim == "remark0":
        return lambda n: verify_remark0(n, group)
    return lambda n: diameter_bounds(
        n,
        group,
        max_n=budgets.max_diameter_n,
        vertex_limit=budgets.diameter_vertex_limit,
    )


def _run_task(
    claim: str,
    n: int,
    group: Optional[Group],
    settings: DivgraphSettings,
    run_id: Optional[str],
) -> VerdictReport:
    adopt_run_id(run_id)
    return _single(claim, group, settings)(n)


def run_claim(
    claim: str,
    ns: Optional[list[int]],
    settings: DivgraphSettings,
    group: Optional[Group] = None,
) -> list[VerdictReport]:
    """
    Run a claim over a set of degrees.

    Group-dependent claims run for both groups unless one is given. figures
    ignores ns; oracle and conjecture produce one report for the whole range,
    and conjecture reports an empty range as such. Any other claim over an
    empty range produces no reports.

    Args:
        claim: Claim name (see CLAIMS).
        ns: Degrees to check; the claim's default range when None.
        settings: Budgets and worker count.
        group: Restrict group-dependent claims to one group.

    Returns:
        list[VerdictReport]: Reports in canonical order.

    Raises:
        InvalidArgumentError: Raised for unknown claims.
        CapacityRefusedError: Raised when a budget would be exceeded.
    """
    ns = sorted(set(default_range(claim) if ns is None else ns))
    budgets = settings.budgets
    _check_budgets(claim, ns, budgets)
    groups = [group] if group else [Group.SYMMETRIC, Group.ALTERNATING]

    if claim == "figures":
        return [reproduce_figures()]
    if claim == "conjecture":
        return sort_reports(
            conjecture_sweep(
                max(ns, default=0),
                g,
                n_min=min(ns, default=1),
                max_n=budgets.max_diameter_n,
                vertex_limit=budgets.diameter_vertex_limit,
                workers=settings.workers,
            )
            for g in groups
        )
    if not ns:
        return []
    if claim == "oracle":
        return [
            verify_oracle(
                max(ns),
                tally_cap=budgets.oracle_tally_n,
                orbit_cap=budgets.oracle_orbit_n,
            )
        ]

    tasks = [
        (claim, n, g if claim in GROUP_CLAIMS else None)
        for g in (groups if claim in GROUP_CLAIMS else [None])
        for n in ns
    ]
    run_id = RUN_ID_CONTEXTVAR.get()
    logger.debug(f"{claim}: {len(tasks)} tasks on {settings.workers} workers")

    if settings.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            futures = [
                pool.submit(_run_task, name, n, g, settings, run_id)
                for name, n, g in tasks
            ]
            reports = [future.result() for future in futures]
    else:
        reports = [_run_task(name, n, g, settings, run_id) for name, n, g in tasks]

    return sort_reports(reports)
