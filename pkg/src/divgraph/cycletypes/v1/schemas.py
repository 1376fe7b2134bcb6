# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""pydantic schemas for cycle types (integer partitions of n)."""

import re
from enum import StrEnum
from typing import Mapping, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from divgraph.errors.v1.exceptions import InvalidArgumentError

_PART_RE = re.compile(r"^(\d+)\^(\d+)$")


class Parity(StrEnum):
    """Permutation parity."""

    EVEN = "even"
    ODD = "odd"


class Group(StrEnum):
    """The two families of permutation groups handled here."""

    SYMMETRIC = "S"
    ALTERNATING = "A"


class CycleType(BaseModel):
    """
    Cycle type of a permutation of degree n, written [1^t, m_1^k_1, ..., m_r^k_r].

    Attributes:
        n: Degree of the symmetric group.
        fixed_points: Number of fixed points t.
        parts: (length, multiplicity) pairs with lengths >= 2, strictly increasing.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    fixed_points: int
    parts: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_canonical(self) -> "CycleType":
        """
        Validate the canonical encoding.

        Returns:
            CycleType: The validated instance.

        Raises:
            ValueError: Raised when the parts do not describe a partition of n.
        """
        if self.n < 1:
            raise ValueError(f"degree must be positive, got {self.n}")
        if self.fixed_points < 0:
            raise ValueError(f"fixed points must be >= 0, got {self.fixed_points}")

        previous = 1
        moved = 0
        for length, mult in self.parts:
            if length <= previous:
                raise ValueError(f"lengths must be >= 2 and increasing: {self.parts}")
            if mult < 1:
                raise ValueError(f"multiplicities must be >= 1: {self.parts}")
            previous = length
            moved += length * mult

        if self.fixed_points + moved != self.n:
            raise ValueError(
                f"t + sum(k*m) = {self.fixed_points + moved} but n = {self.n}"
            )
        return self

    @classmethod
    def from_multiplicities(cls, n: int, mults: Mapping[int, int]) -> "CycleType":
        """
        Build a cycle type from a {length: multiplicity} mapping.

        Length-1 entries are ignored; the fixed point count is derived from n.

        Args:
            n: Degree of the symmetric group.
            mults: Mapping of cycle length to multiplicity.

        Returns:
            CycleType: The canonical cycle type.

        Raises:
            InvalidArgumentError: Raised if the mapping does not fit into degree n.
        """
        parts = tuple(
            (length, mult)
            for length, mult in sorted(mults.items())
            if length > 1 and mult
        )
        moved = sum(length * mult for length, mult in parts)
        try:
            return cls(n=n, fixed_points=n - moved, parts=parts)
        except ValueError as exc:
            raise InvalidArgumentError(str(exc)) from exc

    @classmethod
    def cycle(cls, n: int, length: int) -> "CycleType":
        """
        Build the type of a single cycle of the given length in S_n.

        Args:
            n: Degree of the symmetric group.
            length: Cycle length (1 gives the identity).

        Returns:
            CycleType: The cycle type [1^(n-length), length^1].
        """
        return cls.from_multiplicities(n, {length: 1})

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        """
        Build the identity type [1^n].

        Args:
            n: Degree of the symmetric group.

        Returns:
            CycleType: The identity type.
        """
        return cls(n=n, fixed_points=n)

    @classmethod
    def parse(cls, label: str, n: Optional[int] = None) -> "CycleType":
        """
        Parse the bracket notation, e.g. "[1^2,2^1,3^1]".

        Args:
            label: The bracket notation string.
            n: Optional degree; when omitted it is the sum of all parts.

        Returns:
            CycleType: The parsed cycle type.

        Raises:
            InvalidArgumentError: Raised if the label is malformed.
        """
        text = label.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise InvalidArgumentError(f"cycle type must be bracketed: {label!r}")

        mults: dict[int, int] = {}
        for token in filter(None, (tok.strip() for tok in text[1:-1].split(","))):
            match = _PART_RE.match(token)
            if not match:
                raise InvalidArgumentError(f"bad part {token!r} in {label!r}")
            length, mult = int(match.group(1)), int(match.group(2))
            if length < 1 or mult < 1:
                raise InvalidArgumentError(f"bad part {token!r} in {label!r}")
            mults[length] = mults.get(length, 0) + mult

        total = sum(length * mult for length, mult in mults.items())
        degree = total if n is None else n
        if n is not None and 1 in mults and total != n:
            raise InvalidArgumentError(f"{label!r} is not a partition of {n}")
        return cls.from_multiplicities(degree, mults)

    @property
    def is_identity(self) -> bool:
        """True for the identity type."""
        return not self.parts

    @property
    def lengths(self) -> tuple[int, ...]:
        """All cycle lengths including fixed points, ascending."""
        expanded = [1] * self.fixed_points
        for length, mult in self.parts:
            expanded.extend([length] * mult)
        return tuple(expanded)

    @property
    def label(self) -> str:
        """
        The bracket notation with explicit exponents, e.g. "[1^2,2^1,3^1]".
        """
        tokens = [f"1^{self.fixed_points}"] if self.fixed_points else []
        tokens.extend(f"{length}^{mult}" for length, mult in self.parts)
        return "[" + ",".join(tokens) + "]"

    def __str__(self) -> str:
        return self.label
