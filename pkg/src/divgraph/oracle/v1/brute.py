# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Brute-force permutation group computations for small degrees.

Everything here works on explicit permutations and never uses a class size or
centralizer formula, so it can serve as an independent reference. Cycle
structure is only read off permutations to label results.
"""

import logging
from collections import Counter
from itertools import permutations
from typing import Iterator, Literal, NamedTuple, Optional

from divgraph.cycletypes.v1.schemas import CycleType
from divgraph.errors.v1.exceptions import CapacityRefusedError, InvalidArgumentError

logger = logging.getLogger(__name__)

Perm = tuple[int, ...]
"""One-line notation: perm[i - 1] is the image of i."""

TALLY_CAP = 8
ORBIT_CAP = 7


class BruteClass(NamedTuple):
    """
    One conjugacy class (orbit mode) or one cycle-type tally (tally mode).

    Attributes:
        ct: Cycle type of the elements.
        size: Number of elements.
    """

    ct: CycleType
    size: int

    @property
    def label(self) -> str:
        """The cycle type in bracket notation."""
        return self.ct.label


def _check_cap(what: str, n: int, cap: int, default: int) -> None:
    if n < 1:
        raise InvalidArgumentError(f"{what} needs n >= 1, got {n}")
    if cap > default:
        logger.warning(
            f"{what} cap raised from {default} to {cap}; cost grows like n!"
        )
    if n > cap:
        raise CapacityRefusedError(what, cap, n)


def identity_perm(n: int) -> Perm:
    """
    The identity of S_n.

    Args:
        n: Degree.

    Returns:
        Perm: (1, 2, ..., n).
    """
    return tuple(range(1, n + 1))


def compose(a: Perm, b: Perm) -> Perm:
    """
    Product a*b acting on the right: i -> (i^a)^b.

    Args:
        a: Applied first.
        b: Applied second.

    Returns:
        Perm: The product.
    """
    return tuple(b[image - 1] for image in a)


def inverse(g: Perm) -> Perm:
    """
    Inverse permutation.

    Args:
        g: A permutation.

    Returns:
        Perm: g^-1.
    """
    result = [0] * len(g)
    for point, image in enumerate(g, start=1):
        result[image - 1] = point
    return tuple(result)


def conjugate(g: Perm, x: Perm) -> Perm:
    """
    The conjugate x^-1 g x.

    Args:
        g: The permutation being conjugated.
        x: The conjugating element.

    Returns:
        Perm: x^-1 g x.
    """
    return compose(compose(inverse(x), g), x)


def perm_sign(g: Perm) -> int:
    """
    Sign by inversion count.

    Args:
        g: A permutation.

    Returns:
        int: +1 for even, -1 for odd permutations.
    """
    inversions = sum(
        1 for i in range(len(g)) for j in range(i + 1, len(g)) if g[i] > g[j]
    )
    return -1 if inversions % 2 else 1


def perm_cycle_type(g: Perm) -> CycleType:
    """
    Read the cycle type off a permutation.

    Args:
        g: A permutation.

    Returns:
        CycleType: Its cycle type.
    """
    seen = [False] * len(g)
    lengths: Counter[int] = Counter()
    for start in range(len(g)):
        if seen[start]:
            continue
        length, point = 0, start
        while not seen[point]:
            seen[point] = True
            point = g[point] - 1
            length += 1
        lengths[length] += 1
    return CycleType.from_multiplicities(len(g), lengths)


def representative(ct: CycleType) -> Perm:
    """
    Build one explicit permutation of a cycle type.

    Cycles are laid out on consecutive points after the fixed points, shortest
    first, e.g. [1^1,2^1,3^1] gives (2 3)(4 5 6).

    Args:
        ct: The cycle type.

    Returns:
        Perm: A permutation with that cycle type.
    """
    images = list(identity_perm(ct.n))
    point = ct.fixed_points + 1
    for length, mult in ct.parts:
        for _ in range(mult):
            for offset in range(length):
                images[point + offset - 1] = point + (offset + 1) % length
            point += length
    return tuple(images)


def enumerate_group(
    n: int, alternating: bool = False, cap: int = TALLY_CAP
) -> Iterator[Perm]:
    """
    Yield every element of S_n (or A_n) exactly once, in lexicographic order.

    Args:
        n: Degree, 1 <= n <= cap.
        alternating: Restrict to even permutations.
        cap: Largest degree accepted.

    Returns:
        Iterator[Perm]: The group elements, lazily.

    Raises:
        CapacityRefusedError: Raised if n exceeds the cap.
    """
    _check_cap("oracle enumeration", n, cap, TALLY_CAP)
    return _elements(n, alternating)


def _elements(n: int, alternating: bool) -> Iterator[Perm]:
    for images in permutations(range(1, n + 1)):
        if alternating and perm_sign(images) < 0:
            continue
        yield images


def generators(n: int, alternating: bool = False) -> list[Perm]:
    """
    A generating set: adjacent transpositions for S_n, 3-cycles (1 2 k) for A_n.

    Args:
        n: Degree.
        alternating: Whether to generate A_n.

    Returns:
        list[Perm]: The generators (empty for trivial groups).
    """
    gens = []
    if alternating:
        for k in range(3, n + 1):
            images = list(identity_perm(n))
            images[0], images[1], images[k - 1] = 2, k, 1
            gens.append(tuple(images))
    else:
        for i in range(1, n):
            images = list(identity_perm(n))
            images[i - 1], images[i] = i + 1, i
            gens.append(tuple(images))
    return gens


def _orbit(g: Perm, gens: list[Perm]) -> set[Perm]:
    orbit = {g}
    worklist = [g]
    while worklist:
        current = worklist.pop()
        for x in gens:
            image = conjugate(current, x)
            if image not in orbit:
                orbit.add(image)
                worklist.append(image)
    return orbit


def brute_class_sizes(
    n: int,
    alternating: bool = False,
    mode: Literal["tally", "orbit"] = "tally",
    cap: Optional[int] = None,
) -> list[BruteClass]:
    """
    Class sizes by enumeration.

    Tally mode counts the group elements of every cycle type. Orbit mode
    computes the true conjugacy classes inside the group as closures under
    conjugation by generators, so a split A_n class shows up as two orbits.

    Args:
        n: Degree.
        alternating: Work in A_n instead of S_n.
        mode: "tally" (n <= 8) or "orbit" (n <= 7).
        cap: Override of the mode's degree cap.

    Returns:
        list[BruteClass]: Classes in canonical cycle-type order; orbits of one
            type are listed in order of their first element.

    Raises:
        CapacityRefusedError: Raised if n exceeds the cap.
    """
    default = TALLY_CAP if mode == "tally" else ORBIT_CAP
    limit = default if cap is None else cap
    _check_cap(f"oracle {mode}", n, limit, default)
    elements = enumerate_group(n, alternating, cap=max(limit, n))

    if mode == "tally":
        tally: Counter[CycleType] = Counter(perm_cycle_type(g) for g in elements)
        found = [BruteClass(ct, size) for ct, size in tally.items()]
    else:
        gens = generators(n, alternating)
        seen: set[Perm] = set()
        found = []
        for g in elements:
            if g in seen:
                continue
            orbit = _orbit(g, gens)
            seen |= orbit
            found.append(BruteClass(perm_cycle_type(g), len(orbit)))

    found.sort(key=lambda item: item.ct.lengths)
    group = "A" if alternating else "S"
    logger.debug(f"oracle {mode} {group}_{n}: {len(found)} classes")
    return found


def brute_centralizer_order(n: int, g: Perm, alternating: bool = False) -> int:
    """
    Count the group elements commuting with g.

    Args:
        n: Degree, n <= 7.
        g: The element.
        alternating: Count inside A_n instead of S_n.

    Returns:
        int: |C_G(g)|.

    Raises:
        InvalidArgumentError: Raised if g has the wrong degree, or is odd when
            alternating is set.
        CapacityRefusedError: Raised if n > 7.
    """
    _check_cap("oracle centralizer", n, ORBIT_CAP, ORBIT_CAP)
    if len(g) != n:
        raise InvalidArgumentError(f"permutation has degree {len(g)}, expected {n}")
    if alternating and perm_sign(g) < 0:
        raise InvalidArgumentError(f"{g} is odd and does not lie in A_{n}")

    return sum(
        1
        for x in enumerate_group(n, alternating)
        if compose(x, g) == compose(g, x)
    )
