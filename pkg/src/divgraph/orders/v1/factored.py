# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Positive integers held as prime exponent vectors."""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from sympy import factorint, isprime

from divgraph.errors.v1.exceptions import (
    InternalInconsistencyError,
    InvalidArgumentError,
    UnsupportedInputError,
)

logger = logging.getLogger(__name__)

TRIAL_DIVISION_LIMIT = 10**6


def _merge(
    left: tuple[tuple[int, int], ...],
    right: Iterable[tuple[int, int]],
    sign: int,
) -> dict[int, int]:
    merged = dict(left)
    for prime, exp in right:
        merged[prime] = merged.get(prime, 0) + sign * exp
    return merged


@dataclass(frozen=True)
class FactoredNat:
    """
    A positive integer stored as sorted (prime, exponent) pairs.

    Zero exponents are never stored, so the empty tuple is 1 and equality is
    structural. Use from_map/from_int rather than the raw constructor.

    Attributes:
        exponents: Sorted (prime, exponent) pairs with exponent >= 1.
    """

    exponents: tuple[tuple[int, int], ...] = ()

    @classmethod
    def _canonical(cls, mapping: Mapping[int, int]) -> "FactoredNat":
        for prime, exp in mapping.items():
            if exp < 0:
                raise InternalInconsistencyError(
                    f"negative exponent {exp} for prime {prime}"
                )
        return cls(tuple(sorted((p, e) for p, e in mapping.items() if e)))

    @classmethod
    def from_map(cls, mapping: Mapping[int, int]) -> "FactoredNat":
        """
        Build from a {prime: exponent} mapping, validating every key.

        Args:
            mapping: Prime to exponent mapping; zero exponents are dropped.

        Returns:
            FactoredNat: The canonical value.

        Raises:
            InvalidArgumentError: Raised for non-prime keys or negative exponents.
        """
        for prime, exp in mapping.items():
            if not isprime(prime):
                raise InvalidArgumentError(f"{prime} is not prime")
            if exp < 0:
                raise InvalidArgumentError(f"negative exponent {exp} for {prime}")
        return cls._canonical(mapping)

    @classmethod
    def from_int(cls, value: int, limit: int = TRIAL_DIVISION_LIMIT) -> "FactoredNat":
        """
        Factor a positive integer whose prime factors are all <= limit.

        Args:
            value: A positive integer.
            limit: Largest prime factor accepted.

        Returns:
            FactoredNat: The factorization of value.

        Raises:
            InvalidArgumentError: Raised if value < 1.
            UnsupportedInputError: Raised if some prime factor exceeds limit.
        """
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidArgumentError(f"expected a positive integer, got {value!r}")

        factors = factorint(value, limit=limit)
        for prime in factors:
            if prime > limit or not isprime(prime):
                raise UnsupportedInputError(
                    f"{value} has a prime factor larger than {limit}"
                )
        return cls._canonical(factors)

    @cached_property
    def value(self) -> int:
        """The integer value (arbitrary precision)."""
        result = 1
        for prime, exp in self.exponents:
            result *= prime**exp
        return result

    @property
    def primes(self) -> tuple[int, ...]:
        """The primes dividing this number, ascending."""
        return tuple(prime for prime, _ in self.exponents)

    def exponent(self, prime: int) -> int:
        """
        Return the exponent of a prime (0 when absent).

        Args:
            prime: The prime to look up.

        Returns:
            int: Its exponent.
        """
        for p, e in self.exponents:
            if p == prime:
                return e
        return 0

    def factor_map(self) -> dict[str, int]:
        """
        Return the JSON factor map, e.g. {"2": 3, "3": 1}.

        Returns:
            dict[str, int]: Prime (as string) to exponent.
        """
        return {str(p): e for p, e in self.exponents}

    def factor_string(self) -> str:
        """
        Return a compact rendering, e.g. "2^3*3^1" ("1" for one).

        Returns:
            str: The rendering.
        """
        return "*".join(f"{p}^{e}" for p, e in self.exponents) or "1"

    def divides(self, other: "FactoredNat") -> bool:
        """
        True iff self divides other.

        Args:
            other: The candidate multiple.

        Returns:
            bool: Whether every exponent of self is <= the one in other.
        """
        theirs = dict(other.exponents)
        return all(theirs.get(p, 0) >= e for p, e in self.exponents)

    def gcd(self, other: "FactoredNat") -> "FactoredNat":
        """
        Greatest common divisor.

        Args:
            other: The other factor.

        Returns:
            FactoredNat: Pointwise minimum of exponents.
        """
        theirs = dict(other.exponents)
        return FactoredNat(
            tuple((p, min(e, theirs[p])) for p, e in self.exponents if p in theirs)
        )

    def exact_divide(self, other: "FactoredNat") -> "FactoredNat":
        """
        Divide exactly.

        Args:
            other: The divisor.

        Returns:
            FactoredNat: self / other.

        Raises:
            InternalInconsistencyError: Raised if other does not divide self.
        """
        return FactoredNat._canonical(_merge(self.exponents, other.exponents, -1))

    def halve(self) -> "FactoredNat":
        """
        Divide by two.

        Returns:
            FactoredNat: self / 2.

        Raises:
            InternalInconsistencyError: Raised if self is odd.
        """
        if self.exponent(2) < 1:
            raise InternalInconsistencyError(f"cannot halve odd value {self.value}")
        return self.exact_divide(TWO)

    def __mul__(self, other: "FactoredNat") -> "FactoredNat":
        if not isinstance(other, FactoredNat):
            return NotImplemented
        return FactoredNat._canonical(_merge(self.exponents, other.exponents, 1))

    def __pow__(self, power: int) -> "FactoredNat":
        if power < 0:
            raise InvalidArgumentError(f"negative power {power} of {self}")
        return FactoredNat._canonical({p: e * power for p, e in self.exponents})

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"FactoredNat({self.factor_string()})"


ONE = FactoredNat()
TWO = FactoredNat(((2, 1),))


def divides(a: FactoredNat, b: FactoredNat) -> bool:
    """
    True iff a divides b, compared exponent by exponent.

    Args:
        a: Candidate divisor.
        b: Candidate multiple.

    Returns:
        bool: Whether a | b.
    """
    return a.divides(b)
