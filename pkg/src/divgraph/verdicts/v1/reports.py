# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Helpers shared by all verifiers: report assembly and verdict stream output."""

import json
import logging
import time
from typing import Any, Iterable, Optional

from divgraph.cycletypes.v1.schemas import Group
from divgraph.verdicts.v1.schemas import Verdict, VerdictReport

logger = logging.getLogger(__name__)


def finish_report(
    claim: str,
    n_range: list[int],
    started: float,
    witness: Optional[dict[str, Any]],
    details: Optional[dict[str, Any]] = None,
    group: Optional[Group] = None,
    report_only: bool = False,
) -> VerdictReport:
    """
    Build a VerdictReport and log its outcome.

    Args:
        claim: Claim identifier.
        n_range: Degrees that were checked.
        started: time.perf_counter() value taken when the check began.
        witness: First counterexample found, or None.
        details: Extra observations.
        group: Group the claim is about.
        report_only: Emit a report-only verdict regardless of the witness.

    Returns:
        VerdictReport: The finished report.
    """
    if report_only:
        verdict = Verdict.REPORT_ONLY
    else:
        verdict = Verdict.PASS if witness is None else Verdict.FAIL

    where = f"{group.value}_" if group else ""
    span = f"{n_range[0]}..{n_range[-1]}" if n_range else "-"
    log = logger.warning if verdict is Verdict.FAIL else logger.info
    log(f"{claim} {where}n={span}: {verdict.value}")

    return VerdictReport(
        claim=claim,
        group=group,
        n_range=n_range,
        verdict=verdict,
        witness=witness,
        details=details or {},
        wall_time=time.perf_counter() - started,
    )


def sort_reports(reports: Iterable[VerdictReport]) -> list[VerdictReport]:
    """
    Put reports into canonical (claim, group, n) order.

    Args:
        reports: Reports in completion order.

    Returns:
        list[VerdictReport]: Sorted reports.
    """
    return sorted(reports, key=lambda report: report.sort_key())


def verdict_stream(reports: Iterable[VerdictReport], timings: bool = False) -> str:
    """
    One compact JSON object per line, in canonical order.

    Args:
        reports: The reports.
        timings: Include wall times.

    Returns:
        str: The JSON lines.
    """
    return "".join(
        json.dumps(report.to_stream_dict(timings), sort_keys=True) + "\n"
        for report in sort_reports(reports)
    )


def summary_table(reports: Iterable[VerdictReport]) -> str:
    """
    Human readable table: claim, group, degrees, verdict.

    Args:
        reports: The reports.

    Returns:
        str: Fixed-width table text.
    """
    rows = [("claim", "group", "n", "verdict")]
    for report in sort_reports(reports):
        span = (
            f"{report.n_range[0]}..{report.n_range[-1]}" if report.n_range else "-"
        )
        group = report.group.value if report.group else "-"
        rows.append((report.claim, group, span, report.verdict.value))

    widths = [max(len(row[col]) for row in rows) for col in range(4)]
    return "".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        + "\n"
        for row in rows
    )


def any_failed(reports: Iterable[VerdictReport]) -> bool:
    """
    True iff some report has a fail verdict.

    Args:
        reports: The reports.

    Returns:
        bool: Whether the process should exit nonzero.
    """
    return any(report.failed for report in reports)
