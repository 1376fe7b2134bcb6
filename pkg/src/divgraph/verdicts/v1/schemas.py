# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""pydantic schemas for the results of claim verifiers."""

from enum import StrEnum
from typing import Any, Optional

from pydantic import BaseModel, model_validator

from divgraph.cycletypes.v1.schemas import Group

REPORT_ONLY_CLAIMS = frozenset({"conjecture"})


class Verdict(StrEnum):
    """Outcome of one verifier run."""

    PASS = "pass"
    FAIL = "fail"
    REPORT_ONLY = "report-only"


class VerdictReport(BaseModel):
    """
    Result of checking one claim over a range of degrees.

    Attributes:
        claim: Claim identifier, e.g. "theorem9".
        group: Group the claim is about, when it is about one.
        n_range: Degrees that were checked.
        verdict: pass, fail or report-only.
        witness: Counterexample data; always present on fail.
        details: Extra observations (diameters, component sizes, ...).
        wall_time: Seconds spent; excluded from byte-stable output.
    """

    claim: str
    group: Optional[Group] = None
    n_range: list[int] = []
    verdict: Verdict
    witness: Optional[dict[str, Any]] = None
    details: dict[str, Any] = {}
    wall_time: Optional[float] = None

    @model_validator(mode="after")
    def _check_verdict(self) -> "VerdictReport":
        """
        Enforce witness presence on failure and report-only usage.

        Returns:
            VerdictReport: The validated report.

        Raises:
            ValueError: Raised when the verdict and witness disagree.
        """
        if self.verdict is Verdict.FAIL and self.witness is None:
            raise ValueError(f"{self.claim}: a failing verdict needs a witness")
        if self.verdict is Verdict.REPORT_ONLY and self.claim not in REPORT_ONLY_CLAIMS:
            raise ValueError(f"{self.claim} is not a report-only claim")
        return self

    @property
    def failed(self) -> bool:
        """True iff the verdict is fail."""
        return self.verdict is Verdict.FAIL

    def sort_key(self) -> tuple[str, str, int]:
        """
        Key for the canonical (claim, n) output order.

        Returns:
            tuple[str, str, int]: claim, group and first checked degree.
        """
        first = self.n_range[0] if self.n_range else -1
        return (self.claim, self.group.value if self.group else "", first)

    def to_stream_dict(self, timings: bool = False) -> dict[str, Any]:
        """
        Serialize for the JSON verdict stream.

        Args:
            timings: Include the wall time (breaks byte-for-byte reproducibility).

        Returns:
            dict[str, Any]: JSON-ready mapping.
        """
        exclude = None if timings else {"wall_time"}
        return self.model_dump(mode="json", exclude=exclude)
