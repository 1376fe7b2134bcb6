# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""Unit tests for the graph claim verifiers."""

import pytest
from sympy import isprime

from divgraph.cycletypes.v1.schemas import Group
from divgraph.errors.v1.exceptions import CapacityRefusedError, InvalidArgumentError
from divgraph.orders.v1.classes import centralizer_order_alt, class_records
from divgraph.theorems.v1.verifiers import (
    conjecture_sweep,
    diameter_bounds,
    formula_graph,
    oracle_graph,
    reproduce_figures,
    verify_corollary2,
    verify_corollary14,
    verify_lemma14,
    verify_lemma15,
    verify_remark0,
    verify_theorem9,
    verify_theorem13,
)
from divgraph.verdicts.v1.schemas import Verdict


@pytest.mark.parametrize(
    "n, isolated",
    [(7, ["720"]), (8, ["5760"]), (12, None), (13, None)],
)
def test_theorem9(n, isolated):
    """
    Test that the prime cycle classes are the isolated vertices of D(S_n).
    """
    report = verify_theorem9(n)

    assert report.verdict is Verdict.PASS
    assert report.group is Group.SYMMETRIC
    assert report.n_range == [n]
    if isolated is not None:
        assert report.details["isolated"] == isolated


def test_theorem9_primes():
    """
    Test which of n-1 and n are taken as prime cycle lengths.
    """
    assert verify_theorem9(12).details["primes"] == [11]
    assert verify_theorem9(13).details["primes"] == [13]
    assert len(verify_theorem9(12).details["isolated"]) == 1


def test_theorem9_no_primes_means_connected():
    """
    Test a degree where neither n-1 nor n is prime.
    """
    report = verify_theorem9(10)

    assert report.details == {"primes": [], "isolated": []}
    assert report.verdict is Verdict.PASS


def test_theorem9_fails_with_witness(mocker):
    """
    Test that a wrong expectation produces a witness.
    """
    mocker.patch("divgraph.theorems.v1.verifiers.isprime", return_value=False)

    report = verify_theorem9(7)

    assert report.verdict is Verdict.FAIL
    assert report.witness["n"] == 7
    assert report.witness["isolated"] == ["720"]
    assert report.witness["expected_isolated"] == []


@pytest.mark.parametrize("n", [9, 10, 11])
def test_theorem13(n):
    """
    Test the isolated vertices of D(A_n).
    """
    report = verify_theorem13(n)

    assert report.verdict is Verdict.PASS
    assert report.group is Group.ALTERNATING


def test_theorem13_isolated_seven_cycle():
    """
    Test that the 7-cycles give the only isolated vertex of D(A_9).
    """
    report = verify_theorem13(9)

    assert report.details == {"primes": [7], "isolated": ["25920"]}


@pytest.mark.parametrize(
    "verifier, bad_n",
    [
        (verify_theorem9, 6),
        (verify_theorem13, 8),
        (verify_corollary2, 2),
        (verify_corollary14, 3),
        (verify_lemma14, 8),
        (verify_lemma15, 21),
    ],
)
def test_hypothesis_ranges(verifier, bad_n):
    """
    Test that degrees outside a claim's hypothesis are rejected.
    """
    with pytest.raises(InvalidArgumentError):
        verifier(bad_n)


@pytest.mark.parametrize("n", range(3, 13))
def test_corollary2(n):
    """
    Test that D(S_n) has at most two components.
    """
    report = verify_corollary2(n)

    assert report.verdict is Verdict.PASS
    assert len(report.details["component_sizes"]) <= 2


@pytest.mark.parametrize("n", range(4, 13))
def test_corollary14(n):
    """
    Test that D(A_n) has at most three components.
    """
    report = verify_corollary14(n)

    assert report.verdict is Verdict.PASS
    assert len(report.details["component_sizes"]) <= 3


def test_corollary14_a5_shape():
    """
    Test the three K_1 components of D(A_5).
    """
    assert verify_corollary14(5).details["component_sizes"] == [1, 1, 1]


@pytest.mark.parametrize(
    "n, group",
    [(n, Group.SYMMETRIC) for n in range(1, 8)]
    + [(n, Group.ALTERNATING) for n in range(1, 8)],
)
def test_oracle_graph_matches_formula_graph(n, group):
    """
    Test that D(G) is the same whether built from formulas or enumeration.
    """
    _, formula = formula_graph(n, group)
    brute = oracle_graph(n, group)

    assert brute.vertices == formula.vertices
    assert brute.edges() == formula.edges()


def test_reproduce_figures():
    """
    Test the small graphs against their expected shapes.
    """
    report = reproduce_figures()

    assert report.verdict is Verdict.PASS
    assert report.claim == "figures"
    assert report.details["S_5"] == [["10", "15", "20", "30"], ["24"]]
    assert report.details["A_5"] == [["12"], ["15"], ["20"]]
    assert "S_6" in report.details
    assert "A_8" in report.details


@pytest.mark.parametrize(
    "n, group, diameter",
    [(5, Group.SYMMETRIC, 3), (5, Group.ALTERNATING, 0), (2, Group.SYMMETRIC, 0)],
)
def test_diameter_bounds(n, group, diameter):
    """
    Test the recorded diameter and bound.
    """
    report = diameter_bounds(n, group)

    assert report.verdict is Verdict.PASS
    assert report.details["diameter"] == diameter
    assert report.details["bound"] == (8 if group is Group.SYMMETRIC else 10)


@pytest.mark.parametrize("n", range(6, 13))
def test_diameter_bounds_hold(n):
    """
    Test both groups over a range of degrees.
    """
    assert diameter_bounds(n, Group.SYMMETRIC).verdict is Verdict.PASS
    assert diameter_bounds(n, Group.ALTERNATING).verdict is Verdict.PASS


def test_diameter_budget():
    """
    Test that degrees above the diameter budget are refused.
    """
    with pytest.raises(CapacityRefusedError) as exc:
        diameter_bounds(26, Group.SYMMETRIC)
    assert exc.value.what == "diameter degree budget"

    with pytest.raises(CapacityRefusedError):
        conjecture_sweep(12, Group.ALTERNATING, max_n=10)


def test_conjecture_sweep_is_report_only():
    """
    Test that the sweep records diameters and never fails.
    """
    report = conjecture_sweep(8, Group.SYMMETRIC)

    assert report.verdict is Verdict.REPORT_ONLY
    assert report.witness is None
    assert report.n_range == list(range(1, 9))
    assert list(report.details["diameters"]) == [str(n) for n in range(1, 9)]
    assert report.details["diameters"]["1"] == 0
    assert report.details["diameters"]["5"] == 3
    assert all(
        report.details["diameters"][str(n)] > 4 for n in report.details["candidates"]
    )


def test_conjecture_sweep_flags_candidates(mocker):
    """
    Test that large diameters become candidates without failing the report.
    """
    mocker.patch("divgraph.theorems.v1.verifiers.CONJECTURED_DIAMETER", 0)

    report = conjecture_sweep(5, Group.SYMMETRIC, n_min=5)

    assert report.verdict is Verdict.REPORT_ONLY
    assert report.details == {"diameters": {"5": 3}, "candidates": [5]}


def test_conjecture_sweep_empty_range():
    """
    Test an empty range.
    """
    report = conjecture_sweep(2, Group.ALTERNATING, n_min=5)

    assert report.n_range == []
    assert report.details == {"diameters": {}, "candidates": []}


@pytest.mark.parametrize(
    "n, group",
    [(n, Group.SYMMETRIC) for n in range(1, 11)]
    + [(n, Group.ALTERNATING) for n in range(1, 11)],
)
def test_remark0(n, group):
    """
    Test that every power of an element stays in its closed neighbourhood.
    """
    report = verify_remark0(n, group)

    assert report.verdict is Verdict.PASS
    assert report.group is group


def test_remark0_counts_pairs():
    """
    Test that trivial groups have nothing to check.
    """
    assert verify_remark0(1, Group.SYMMETRIC).details == {"pairs_checked": 0}
    assert verify_remark0(4, Group.SYMMETRIC).details["pairs_checked"] > 0


@pytest.mark.parametrize("n", [9, 10, 11])
def test_lemma14_and_lemma15(n):
    """
    Test the distances to the 3-cycle vertex of D(A_n).
    """
    fourteen = verify_lemma14(n)
    fifteen = verify_lemma15(n)

    assert fourteen.verdict is Verdict.PASS
    assert fifteen.verdict is Verdict.PASS
    assert fourteen.details["types_checked"] > 0
    assert fifteen.details["types_checked"] > 0


def prime_criterion_keys(n: int, group: Group) -> set[str]:
    """
    Helper returning the classes whose centralizer order some prime p divides,
    for primes p >= n - 1 (S_n) or p >= n - 2 (A_n).
    """
    low = n - 1 if group is Group.SYMMETRIC else n - 2
    primes = [p for p in range(low, n + 1) if isprime(p)]
    keys = set()
    for rec in class_records(n):
        if rec.ct.is_identity:
            continue
        if group is Group.SYMMETRIC:
            centralizer, size = rec.centralizer_sym, rec.size_sym
        elif rec.even:
            centralizer, size = centralizer_order_alt(rec.ct), rec.size_alt
        else:
            continue
        if any(centralizer.exponent(p) for p in primes):
            keys.add(str(size))
    return keys


@pytest.mark.parametrize("n", range(7, 19))
def test_theorem9_isolated_match_prime_criterion(n):
    """
    Test that the isolated vertices of D(S_n) are the classes picked out by
    prime divisibility of the centralizer.
    """
    report = verify_theorem9(n)

    assert report.verdict is Verdict.PASS
    assert set(report.details["isolated"]) == prime_criterion_keys(
        n, Group.SYMMETRIC
    )


@pytest.mark.parametrize("n", range(9, 19))
def test_theorem13_isolated_match_prime_criterion(n):
    """
    Test the same agreement for D(A_n).
    """
    report = verify_theorem13(n)

    assert report.verdict is Verdict.PASS
    assert set(report.details["isolated"]) == prime_criterion_keys(
        n, Group.ALTERNATING
    )
