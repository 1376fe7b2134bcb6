# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""End-to-end tests of the divgraph command line."""

import csv
import io
import json

import pytest
from huey import MemoryHuey

from divgraph.cache.v1.huey import HueyResultCache
from divgraph.cli.v1 import commands
from divgraph.cli.v1.main import main


@pytest.fixture(autouse=True)
def _isolated(isolated_config):
    """
    Fixture that keeps local configuration files out of every run.
    """
    return isolated_config


def run(capsys, *argv: str) -> tuple[int, str, str]:
    """
    Helper running the command line and capturing its streams.
    """
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def write_lines(path, *lines: str):
    """
    Helper writing an integer file.
    """
    path.write_text("".join(f"{line}\n" for line in lines), encoding="utf-8")
    return str(path)


def test_build_json(capsys):
    """
    Test building D(S_5) as JSON.
    """
    status, out, _ = run(capsys, "build", "--group", "S", "--n", "5")
    data = json.loads(out)

    assert status == 0
    assert data["schema"] == "divgraph/1"
    assert data["vertices"] == ["10", "15", "20", "24", "30"]
    assert data["edges"] == [[0, 2], [0, 4], [1, 4]]
    assert data["components"] == [["10", "15", "20", "30"], ["24"]]
    assert data["diameters"] == [3, 0]


def test_build_a7(capsys):
    """
    Test the two isolated vertices of D(A_7).
    """
    status, out, _ = run(capsys, "build", "--group", "A", "--n", "7")
    data = json.loads(out)

    assert status == 0
    assert data["isolated"] == ["360", "504"]
    assert len(data["components"]) == 3
    assert data["origin"]["360"] == ["[7^1]+", "[7^1]-"]


def test_build_null_graph(capsys):
    """
    Test that S_2 gives the null graph.
    """
    status, out, _ = run(capsys, "build", "--group", "S", "--n", "2")
    data = json.loads(out)

    assert status == 0
    assert data["null_graph"] is True
    assert data["components"] == []
    assert data["overall_diameter"] == 0


@pytest.mark.parametrize("fmt", ["json", "dot", "csv", "text"])
def test_build_is_deterministic(capsys, fmt):
    """
    Test that identical invocations give byte-identical output.
    """
    argv = ("build", "--group", "A", "--n", "8", "--kind", "D", "--format", fmt)

    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)

    assert first == second
    assert first


@pytest.mark.parametrize("kind", ["D", "Gamma", "Delta", "B"])
def test_build_kinds(capsys, kind):
    """
    Test every graph kind through the command line.
    """
    status, out, _ = run(capsys, "build", "--group", "S", "--n", "6", "--kind", kind)

    assert status == 0
    assert json.loads(out)["kind"] == kind


def test_build_output_file(capsys, tmp_path):
    """
    Test writing an artifact to --output.
    """
    target = tmp_path / "s5.dot"

    argv = ("build", "--group", "S", "--n", "5", "--format", "dot", "-o", str(target))

    status, out, _ = run(capsys, *argv)

    assert status == 0
    assert out == ""
    assert target.read_text(encoding="utf-8").startswith('graph "D(S_5)" {')


def test_build_over_diameter_budget(capsys):
    """
    Test that diameters are omitted above the diameter budget.
    """
    status, out, err = run(
        capsys, "build", "--group", "S", "--n", "5", "--max-diameter-n", "4"
    )
    data = json.loads(out)

    assert status == 0
    assert data["diameters"] == [None, None]
    assert data["overall_diameter"] is None
    assert "diameters are omitted" in err


def test_build_capacity_refused(capsys):
    """
    Test the exit status when the build budget would be exceeded.
    """
    status, out, err = run(capsys, "build", "--group", "S", "--n", "41")

    assert status == 3
    assert out == ""
    assert err.startswith("divgraph: Capacity refused for build degree budget")


def test_raised_budget_warns(capsys):
    """
    Test the cost warning for a raised budget.
    """
    status, _, err = run(
        capsys, "build", "--group", "S", "--n", "5", "--max-build-n", "50"
    )

    assert status == 0
    assert "max_build_n raised from 40 to 50" in err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["build", "--group", "X", "--n", "5"],
        ["build", "--group", "S"],
        ["build", "--group", "S", "--n", "five"],
        ["verify", "theorem99"],
        ["sweep", "--group", "S", "--from", "3"],
    ],
)
def test_usage_errors(capsys, argv):
    """
    Test that command line errors exit with status 2.
    """
    status, out, err = run(capsys, *argv)

    assert status == 2
    assert out == ""
    assert err.startswith("divgraph")


def test_invalid_arguments(capsys):
    """
    Test that invalid values exit with status 2.
    """
    assert run(capsys, "build", "--group", "S", "--n", "0")[0] == 2
    assert run(capsys, "build", "--group", "S", "--n", "5", "--workers", "0")[0] == 2
    assert run(capsys, "verify", "theorem9", "--n", "6")[0] == 2


def test_verify_json_stream(capsys):
    """
    Test one JSON object per line in degree order.
    """
    status, out, _ = run(capsys, "verify", "corollary2", "--from", "3", "--to", "6")
    lines = [json.loads(line) for line in out.splitlines()]

    assert status == 0
    assert [line["n_range"] for line in lines] == [[3], [4], [5], [6]]
    assert all(line["verdict"] == "pass" for line in lines)
    assert all("wall_time" not in line for line in lines)


def test_verify_timings(capsys):
    """
    Test that --timings adds wall times.
    """
    status, out, _ = run(capsys, "--timings", "verify", "corollary2", "--n", "5")

    assert status == 0
    assert json.loads(out)["wall_time"] >= 0


def test_verify_text(capsys):
    """
    Test the summary table.
    """
    status, out, _ = run(
        capsys, "verify", "remark0", "--from", "3", "--to", "4", "--format", "text"
    )
    lines = out.splitlines()

    assert status == 0
    assert lines[0].split() == ["claim", "group", "n", "verdict"]
    assert [line.split() for line in lines[1:]] == [
        ["remark0", "A", "3..3", "pass"],
        ["remark0", "A", "4..4", "pass"],
        ["remark0", "S", "3..3", "pass"],
        ["remark0", "S", "4..4", "pass"],
    ]


def test_verify_figures(capsys):
    """
    Test the figure reproduction through the command line.
    """
    status, out, _ = run(capsys, "verify", "figures")

    assert status == 0
    assert json.loads(out)["verdict"] == "pass"


def test_verify_oracle(capsys):
    """
    Test the oracle claim with --max-n.
    """
    status, out, _ = run(capsys, "verify", "oracle", "--max-n", "4")
    data = json.loads(out)

    assert status == 0
    assert data["n_range"] == [1, 2, 3, 4]
    assert data["verdict"] == "pass"


def test_verify_fail_exit_status(capsys, mocker):
    """
    Test that a fail verdict gives exit status 1 and carries a witness.
    """
    mocker.patch("divgraph.theorems.v1.verifiers.isprime", return_value=False)

    status, out, _ = run(capsys, "verify", "theorem9", "--n", "7")
    data = json.loads(out)

    assert status == 1
    assert data["verdict"] == "fail"
    assert data["witness"]["isolated"] == ["720"]


def test_verify_conjecture_never_fails(capsys):
    """
    Test the report-only conjecture sweep.
    """
    status, out, _ = run(
        capsys, "verify", "conjecture", "--group", "S", "--from", "3", "--to", "7"
    )

    assert status == 0
    assert json.loads(out)["verdict"] == "report-only"


def test_verify_conjecture_empty_range(capsys):
    """
    Test that an empty range still yields one report-only verdict per group.
    """
    status, out, _ = run(capsys, "verify", "conjecture", "--from", "5", "--to", "3")
    lines = [json.loads(line) for line in out.splitlines()]

    assert status == 0
    assert [line["group"] for line in lines] == ["A", "S"]
    assert all(line["verdict"] == "report-only" for line in lines)
    assert all(line["n_range"] == [] for line in lines)


def test_fromfile(capsys, tmp_path):
    """
    Test that raw sets reproduce D(S_5), skipping blank lines.
    """
    path = write_lines(tmp_path / "x.txt", "24", "", "10", "15", "20", "30", "15")

    status, out, _ = run(capsys, "fromfile", path)
    data = json.loads(out)

    assert status == 0
    assert data["n"] is None
    assert data["components"] == [["10", "15", "20", "30"], ["24"]]


def test_fromfile_delta(capsys, tmp_path):
    """
    Test Delta({4, 6, 9}).
    """
    path = write_lines(tmp_path / "x.txt", "4", "6", "9")

    status, out, _ = run(capsys, "fromfile", path, "--kind", "Delta")
    data = json.loads(out)

    assert status == 0
    assert data["vertices"] == ["2", "3"]
    assert data["edges"] == [[0, 1]]


def test_fromfile_coprime_pair(capsys, tmp_path):
    """
    Test that {2, 3} gives two isolated vertices.
    """
    path = write_lines(tmp_path / "x.txt", "2", "3")

    status, out, _ = run(capsys, "fromfile", path, "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))

    assert status == 0
    assert [(row["vertex"], row["component"]) for row in rows] == [
        ("2", "0"),
        ("3", "1"),
    ]


@pytest.mark.parametrize(
    "lines, line_number",
    [(["10", "abc"], 2), (["-4"], 1), (["7", "8", "0"], 3), (["1.5"], 1)],
)
def test_fromfile_parse_errors(capsys, tmp_path, lines, line_number):
    """
    Test that bad lines exit with status 2 and name the line.
    """
    path = write_lines(tmp_path / "x.txt", *lines)

    status, out, err = run(capsys, "fromfile", path)

    assert status == 2
    assert out == ""
    assert f"Line {line_number}:" in err


def test_fromfile_empty_and_missing(capsys, tmp_path):
    """
    Test empty and missing input files.
    """
    empty = write_lines(tmp_path / "empty.txt", "", "")

    assert run(capsys, "fromfile", empty)[0] == 2
    assert run(capsys, "fromfile", str(tmp_path / "missing.txt"))[0] == 2


def test_sweep_symmetric(capsys):
    """
    Test one row per degree with at most two components.
    """
    status, out, _ = run(capsys, "sweep", "--group", "S", "--from", "3", "--to", "12")
    rows = list(csv.DictReader(io.StringIO(out)))

    assert status == 0
    assert [int(row["n"]) for row in rows] == list(range(3, 13))
    assert all(int(row["components"]) <= 2 for row in rows)
    assert all(row["wall_time"] == "" for row in rows)
    assert rows[2]["component_sizes"] == "4;1"
    assert rows[2]["overall_diameter"] == "3"


def test_sweep_alternating(capsys):
    """
    Test at most three components for A_n.
    """
    status, out, _ = run(capsys, "sweep", "--group", "A", "--from", "4", "--to", "12")
    rows = list(csv.DictReader(io.StringIO(out)))

    assert status == 0
    assert len(rows) == 9
    assert all(int(row["components"]) <= 3 for row in rows)


def test_sweep_empty_range(capsys):
    """
    Test that an empty range gives just the header.
    """
    status, out, _ = run(capsys, "sweep", "--group", "S", "--from", "5", "--to", "4")

    assert status == 0
    assert out == (
        "n,group,vertices,edges,components,component_sizes,overall_diameter,"
        "wall_time\n"
    )


def test_sweep_timings_and_budget(capsys):
    """
    Test wall times with --timings and blank diameters above the budget.
    """
    status, out, _ = run(
        capsys,
        "--timings",
        "sweep",
        "--group",
        "S",
        "--from",
        "5",
        "--to",
        "6",
        "--max-diameter-n",
        "5",
    )
    rows = list(csv.DictReader(io.StringIO(out)))

    assert status == 0
    assert rows[0]["overall_diameter"] == "3"
    assert rows[1]["overall_diameter"] == ""
    assert all(float(row["wall_time"]) >= 0 for row in rows)


def test_sweep_workers_match_serial(capsys):
    """
    Test that worker processes do not change the output.
    """
    argv = ("sweep", "--group", "A", "--from", "4", "--to", "9")

    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--workers", "2")

    assert parallel == serial


def test_oracle(capsys):
    """
    Test brute force A_5 orbits as CSV.
    """
    argv = ("oracle", "--group", "A", "--n", "5", "--mode", "orbit")

    status, out, _ = run(capsys, *argv)
    rows = list(csv.reader(io.StringIO(out)))

    assert status == 0
    assert rows[0] == ["cycle_type", "size"]
    assert sorted(int(size) for _, size in rows[1:]) == [1, 12, 12, 15, 20]
    assert ["[5^1]", "12"] in rows


def test_oracle_capacity(capsys):
    """
    Test the oracle caps and their overrides.
    """
    assert run(capsys, "oracle", "--group", "S", "--n", "9")[0] == 3
    assert run(capsys, "oracle", "--group", "S", "--n", "8", "--mode", "orbit")[0] == 3

    status, _, err = run(
        capsys,
        "oracle",
        "--group",
        "S",
        "--n",
        "4",
        "--mode",
        "orbit",
        "--oracle-orbit-n",
        "8",
    )
    assert status == 0
    assert "cap raised from 7 to 8" in err


def test_build_uses_cache(capsys, mocker):
    """
    Test that a second build is served from the cache.
    """
    cache = HueyResultCache(MemoryHuey("divgraph-test"), "divgraph")
    mocker.patch("divgraph.cli.v1.commands.open_cache", return_value=cache)
    spy = mocker.spy(commands, "build_graph")

    _, first, _ = run(capsys, "build", "--group", "S", "--n", "6", "--format", "csv")
    _, second, _ = run(capsys, "build", "--group", "S", "--n", "6", "--format", "csv")

    assert first == second
    assert spy.call_count == 1
    assert cache.fetch_result("graph_S_6_D-csv") == first


def test_sweep_uses_cache(capsys, mocker):
    """
    Test that sweep rows are cached per degree.
    """
    cache = HueyResultCache(MemoryHuey("divgraph-test"), "divgraph")
    mocker.patch("divgraph.cli.v1.commands.open_cache", return_value=cache)
    spy = mocker.spy(commands, "sweep_row")

    _, first, _ = run(capsys, "sweep", "--group", "S", "--from", "3", "--to", "5")
    _, second, _ = run(capsys, "sweep", "--group", "S", "--from", "4", "--to", "6")

    assert spy.call_count == 4
    assert first.splitlines()[2:] == second.splitlines()[1:3]


def test_config_file(capsys, tmp_path):
    """
    Test that --config files set budgets.
    """
    config = tmp_path / "divgraph.yaml"
    config.write_text("budgets:\n  max_build_n: 4\n", encoding="utf-8")

    status, _, err = run(
        capsys, "--config", str(config), "build", "--group", "S", "--n", "5"
    )

    assert status == 3
    assert "limit is 4" in err


def test_invalid_config_file(capsys, tmp_path):
    """
    Test that an invalid configuration exits with status 2.
    """
    config = tmp_path / "divgraph.yaml"
    config.write_text("workers: 0\n", encoding="utf-8")

    status, _, err = run(
        capsys, "--config", str(config), "build", "--group", "S", "--n", "5"
    )

    assert status == 2
    assert "invalid configuration" in err


def test_build_cache_respects_vertex_limit(capsys, mocker):
    """
    Test that a lowered diameter vertex limit is not answered from the cache.
    """
    cache = HueyResultCache(MemoryHuey("divgraph-test"), "divgraph")
    mocker.patch("divgraph.cli.v1.commands.open_cache", return_value=cache)
    argv = ("build", "--group", "S", "--n", "8")

    assert run(capsys, *argv)[0] == 0
    assert cache.fetch_result("graph_S_8_D-json") is not None

    status, out, err = run(capsys, *argv, "--diameter-vertex-limit", "2")

    assert status == 3
    assert out == ""
    assert "limit is 2" in err
    assert cache.fetch_result("graph_S_8_D-json-v2") is None

    status, _, _ = run(capsys, *argv, "--diameter-vertex-limit", "7000")

    assert status == 0
    assert cache.fetch_result("graph_S_8_D-json-v7000") is not None
