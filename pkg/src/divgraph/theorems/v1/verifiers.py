# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Verifiers for the structural claims about D(S_n) and D(A_n).

Every verifier rebuilds the graph it talks about from exact class sizes and
returns a VerdictReport; a fail verdict always carries a witness.
"""

import logging
import time
from typing import Any, Optional

from sympy import isprime

from divgraph.cycletypes.v1.partitions import (
    enumerate_cycle_types,
    parity,
    power,
)
from divgraph.cycletypes.v1.schemas import CycleType, Group, Parity
from divgraph.errors.v1.exceptions import CapacityRefusedError, InvalidArgumentError
from divgraph.graphs.v1.builders import build_D
from divgraph.graphs.v1.components import (
    DEFAULT_VERTEX_LIMIT,
    bfs_distances,
    components,
)
from divgraph.graphs.v1.schemas import ComponentReport, SizeSet, UGraph
from divgraph.graphs.v1.sizes import size_set, size_set_from_integers, vertex_of
from divgraph.oracle.v1.brute import ORBIT_CAP, brute_class_sizes
from divgraph.orders.v1.classes import class_size_sym, class_sizes_alt
from divgraph.verdicts.v1.reports import finish_report
from divgraph.verdicts.v1.schemas import VerdictReport

logger = logging.getLogger(__name__)

DIAMETER_BOUNDS = {Group.SYMMETRIC: 8, Group.ALTERNATING: 10}
CONJECTURED_DIAMETER = 4
DEFAULT_DIAMETER_N = 25


def formula_graph(
    n: int, group: Group, workers: int = 1
) -> tuple[SizeSet, UGraph]:
    """
    Build D(G) from the class size formulas.

    Args:
        n: Degree.
        group: S_n or A_n.
        workers: Threads for the pairwise pass.

    Returns:
        tuple[SizeSet, UGraph]: cs(G)* and D(G).
    """
    sizes = size_set(n, group)
    return sizes, build_D(sizes, workers)


def oracle_graph(n: int, group: Group) -> UGraph:
    """
    Build D(G) from brute-force class sizes.

    S_n uses cycle type tallies; A_n uses true conjugation orbits, with the
    orbit cap raised to n when n exceeds the default.

    Args:
        n: Degree (at most 8).
        group: S_n or A_n.

    Returns:
        UGraph: D(G) keyed by decimal sizes.
    """
    if group is Group.SYMMETRIC:
        found = brute_class_sizes(n)
    else:
        cap = max(n, ORBIT_CAP)
        found = brute_class_sizes(n, alternating=True, mode="orbit", cap=cap)
    return build_D(size_set_from_integers(item.size for item in found))


def _p_cycle_keys(n: int, group: Group, primes: list[int]) -> list[str]:
    keys = set()
    for p in primes:
        ct = CycleType.cycle(n, p)
        if group is Group.SYMMETRIC:
            size = class_size_sym(ct)
        else:
            size = class_sizes_alt(ct)[0]
        keys.add(str(size))
    return sorted(keys, key=int)


def _isolation_witness(
    n: int, report: ComponentReport, expected: list[str]
) -> Optional[dict[str, Any]]:
    rest = [members for members in report.components if len(members) > 1]
    if sorted(report.isolated, key=int) != expected or len(rest) > 1:
        return {
            "n": n,
            "isolated": report.isolated,
            "expected_isolated": expected,
            "other_components": [len(members) for members in rest],
        }
    return None


def verify_theorem9(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that p-cycles for primes p in {n-1, n} give exactly the isolated
    vertices of D(S_n), and that all other vertices form one component.

    Args:
        n: Degree, n > 6.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the isolated vertices found.

    Raises:
        InvalidArgumentError: Raised if n <= 6.
    """
    if n <= 6:
        raise InvalidArgumentError(f"theorem9 needs n > 6, got {n}")

    started = time.perf_counter()
    _, graph = formula_graph(n, Group.SYMMETRIC, workers)
    report = components(graph, diameters=False)
    primes = [p for p in (n - 1, n) if isprime(p)]
    expected = _p_cycle_keys(n, Group.SYMMETRIC, primes)

    witness = _isolation_witness(n, report, expected)
    details = {"primes": primes, "isolated": report.isolated}
    return finish_report(
        "theorem9", [n], started, witness, details, Group.SYMMETRIC
    )


def verify_theorem13(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that p-cycles for primes p in {n-2, n-1, n} give exactly the isolated
    vertices of D(A_n), and that all other vertices form one component.

    Args:
        n: Degree, n >= 9.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the isolated vertices found.

    Raises:
        InvalidArgumentError: Raised if n < 9.
    """
    if n < 9:
        raise InvalidArgumentError(f"theorem13 needs n >= 9, got {n}")

    started = time.perf_counter()
    _, graph = formula_graph(n, Group.ALTERNATING, workers)
    report = components(graph, diameters=False)
    primes = [p for p in (n - 2, n - 1, n) if isprime(p)]
    expected = _p_cycle_keys(n, Group.ALTERNATING, primes)

    witness = _isolation_witness(n, report, expected)
    details = {"primes": primes, "isolated": report.isolated}
    return finish_report(
        "theorem13", [n], started, witness, details, Group.ALTERNATING
    )


def _shape(report: ComponentReport) -> list[int]:
    return sorted((len(members) for members in report.components), reverse=True)


def verify_corollary2(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that D(S_n) has at most two components, one of them K_1 if two.

    Args:
        n: Degree, n >= 3.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the component sizes.

    Raises:
        InvalidArgumentError: Raised if n < 3.
    """
    if n < 3:
        raise InvalidArgumentError(f"corollary2 needs n >= 3, got {n}")

    started = time.perf_counter()
    _, graph = formula_graph(n, Group.SYMMETRIC, workers)
    report = components(graph, diameters=False)
    shape = _shape(report)

    witness = None
    if len(shape) > 2 or (len(shape) == 2 and shape[-1] != 1):
        witness = {"n": n, "component_sizes": shape}
    details = {"component_sizes": shape}
    return finish_report(
        "corollary2", [n], started, witness, details, Group.SYMMETRIC
    )


def verify_corollary14(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that D(A_n) has at most three components, all but the largest K_1.

    Args:
        n: Degree, n >= 4.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the component sizes.

    Raises:
        InvalidArgumentError: Raised if n < 4.
    """
    if n < 4:
        raise InvalidArgumentError(f"corollary14 needs n >= 4, got {n}")

    started = time.perf_counter()
    _, graph = formula_graph(n, Group.ALTERNATING, workers)
    report = components(graph, diameters=False)
    shape = _shape(report)

    witness = None
    if len(shape) > 3 or any(size != 1 for size in shape[1:]):
        witness = {"n": n, "component_sizes": shape}
    details = {"component_sizes": shape}
    return finish_report(
        "corollary14", [n], started, witness, details, Group.ALTERNATING
    )


def _same_graph(a: UGraph, b: UGraph) -> bool:
    if a.vertices != b.vertices:
        return False
    return a.edges() == b.edges()


def reproduce_figures() -> VerdictReport:
    """
    Rebuild the small graphs D(S_3..S_5) and D(A_4..A_8) both ways and check them.

    D(S_3), D(S_4), D(S_5) must have exactly two components with at least one
    K_1. D(A_4) to D(A_8) must have at most three components, all but the
    largest K_1. Every graph built from formulas must equal the one built from
    brute-force sizes, vertex for vertex and edge for edge. D(S_6) is
    reported without a check.

    Returns:
        VerdictReport: pass, or fail naming the first graph that disagrees.
    """
    started = time.perf_counter()
    witness: Optional[dict[str, Any]] = None
    details: dict[str, Any] = {}

    plan = [(Group.SYMMETRIC, n) for n in (3, 4, 5)]
    plan += [(Group.ALTERNATING, n) for n in range(4, 9)]

    for group, n in plan:
        name = f"{group.value}_{n}"
        _, graph = formula_graph(n, group)
        report = components(graph)
        details[name] = report.components
        shape = _shape(report)

        if group is Group.SYMMETRIC:
            ok = len(shape) == 2 and shape[-1] == 1
        else:
            ok = len(shape) <= 3 and all(size == 1 for size in shape[1:])
        if not ok:
            witness = {"graph": name, "component_sizes": shape}
            break

        if not _same_graph(graph, oracle_graph(n, group)):
            witness = {"graph": name, "mismatch": "formula graph != oracle graph"}
            break

    if witness is None:
        _, graph = formula_graph(6, Group.SYMMETRIC)
        details["S_6"] = components(graph).components

    return finish_report("figures", [3, 4, 5, 6, 7, 8], started, witness, details)


def _check_diameter_budget(n: int, max_n: int) -> None:
    if n > max_n:
        raise CapacityRefusedError("diameter degree budget", max_n, n)


def diameter_bounds(
    n: int,
    group: Group,
    max_n: int = DEFAULT_DIAMETER_N,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    workers: int = 1,
) -> VerdictReport:
    """
    Check diam(D(S_n)) <= 8 or diam(D(A_n)) <= 10 and record the value.

    Args:
        n: Degree.
        group: S_n or A_n.
        max_n: Diameter degree budget.
        vertex_limit: Largest component for the dense distance pass.
        workers: Threads for the graph passes.

    Returns:
        VerdictReport: pass, or fail with the observed diameter.

    Raises:
        CapacityRefusedError: Raised if n exceeds the budget.
    """
    _check_diameter_budget(n, max_n)
    started = time.perf_counter()
    _, graph = formula_graph(n, group, workers)
    report = components(graph, vertex_limit=vertex_limit, workers=workers)

    bound = DIAMETER_BOUNDS[group]
    witness = None
    if report.overall_diameter is not None and report.overall_diameter > bound:
        witness = {"n": n, "diameter": report.overall_diameter, "bound": bound}
    details = {"diameter": report.overall_diameter, "bound": bound}
    return finish_report("diameter-bounds", [n], started, witness, details, group)


def conjecture_sweep(
    n_max: int,
    group: Group,
    n_min: int = 1,
    max_n: int = DEFAULT_DIAMETER_N,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
    workers: int = 1,
) -> VerdictReport:
    """
    Record diam(D(G)) for every n in range and flag values above 4.

    The conjectured bound is open, so this never fails; candidates are data.

    Args:
        n_max: Largest degree.
        group: S_n or A_n.
        n_min: Smallest degree.
        max_n: Diameter degree budget.
        vertex_limit: Largest component for the dense distance pass.
        workers: Threads for the graph passes.

    Returns:
        VerdictReport: A report-only verdict with per-n diameters.

    Raises:
        CapacityRefusedError: Raised if n_max exceeds the budget.
    """
    n_range = list(range(max(n_min, 1), n_max + 1))
    if n_range:
        _check_diameter_budget(n_range[-1], max_n)

    started = time.perf_counter()
    diameters: dict[str, int] = {}
    for n in n_range:
        _, graph = formula_graph(n, group, workers)
        report = components(graph, vertex_limit=vertex_limit, workers=workers)
        diameters[str(n)] = int(report.overall_diameter or 0)

    candidates = [int(n) for n, d in diameters.items() if d > CONJECTURED_DIAMETER]
    details = {"diameters": diameters, "candidates": candidates}
    return finish_report(
        "conjecture", n_range, started, None, details, group, report_only=True
    )


def _group_types(n: int, group: Group) -> list[CycleType]:
    return [
        ct
        for ct in enumerate_cycle_types(n)
        if group is Group.SYMMETRIC or parity(ct) is Parity.EVEN
    ]


def verify_remark0(n: int, group: Group, workers: int = 1) -> VerdictReport:
    """
    Check that the vertex of delta^m equals or is adjacent to the vertex of delta.

    Powers that land on a size-1 class have no vertex and are skipped.

    Args:
        n: Degree.
        group: S_n or A_n.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the cycle type and exponent.
    """
    started = time.perf_counter()
    sizes, graph = formula_graph(n, group, workers)
    witness = None
    pairs = 0

    for ct in _group_types(n, group):
        u = vertex_of(sizes, ct, group)
        if u is None:
            continue
        for m in range(1, n + 1):
            v = vertex_of(sizes, power(ct, m), group)
            if v is None:
                continue
            pairs += 1
            if u != v and not graph.has_edge(u, v):
                witness = {"n": n, "cycle_type": ct.label, "m": m}
                break
        if witness:
            break

    details = {"pairs_checked": pairs}
    return finish_report("remark0", [n], started, witness, details, group)


def _three_cycle_distances(
    n: int, workers: int
) -> tuple[SizeSet, UGraph, int, Any]:
    if not 9 <= n <= 20:
        raise InvalidArgumentError(
            f"3-cycle distance checks need 9 <= n <= 20, got {n}"
        )

    sizes, graph = formula_graph(n, Group.ALTERNATING, workers)
    tau = vertex_of(sizes, CycleType.cycle(n, 3), Group.ALTERNATING)
    if tau is None:
        raise InvalidArgumentError(f"3-cycles have no vertex in D(A_{n})")
    return sizes, graph, tau, bfs_distances(graph, tau)


def verify_lemma14(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that even types with exactly one 3-cycle are adjacent to (1 2 3).

    Args:
        n: Degree, 9 <= n <= 20.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the cycle type and its distance.

    Raises:
        InvalidArgumentError: Raised if n is outside 9..20.
    """
    started = time.perf_counter()
    sizes, _, _, dist = _three_cycle_distances(n, workers)
    witness = None
    checked = 0

    for ct in _group_types(n, Group.ALTERNATING):
        if (3, 1) not in ct.parts:
            continue
        v = vertex_of(sizes, ct, Group.ALTERNATING)
        if v is None:
            continue
        checked += 1
        if dist[v] > 1 or dist[v] < 0:
            witness = {"n": n, "cycle_type": ct.label, "distance": int(dist[v])}
            break

    details = {"types_checked": checked}
    return finish_report(
        "lemma14", [n], started, witness, details, Group.ALTERNATING
    )


def verify_lemma15(n: int, workers: int = 1) -> VerdictReport:
    """
    Check that even types with t >= 3 and no 3-cycles lie within distance 2
    of (1 2 3).

    Args:
        n: Degree, 9 <= n <= 20.
        workers: Threads for the pairwise pass.

    Returns:
        VerdictReport: pass, or fail with the cycle type and its distance.

    Raises:
        InvalidArgumentError: Raised if n is outside 9..20.
    """
    started = time.perf_counter()
    sizes, _, _, dist = _three_cycle_distances(n, workers)
    witness = None
    checked = 0

    for ct in _group_types(n, Group.ALTERNATING):
        if ct.fixed_points < 3 or any(length == 3 for length, _ in ct.parts):
            continue
        v = vertex_of(sizes, ct, Group.ALTERNATING)
        if v is None:
            continue
        checked += 1
        if dist[v] > 2 or dist[v] < 0:
            witness = {"n": n, "cycle_type": ct.label, "distance": int(dist[v])}
            break

    details = {"types_checked": checked}
    return finish_report(
        "lemma15", [n], started, witness, details, Group.ALTERNATING
    )
