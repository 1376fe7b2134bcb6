# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Sub-command implementations of the divgraph command line.

Every command takes the parsed arguments and validated settings and returns
the process exit status. Artifacts go to --output or stdout; logs go to stderr.
"""

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Optional

from divgraph.cache.v1.base import ResultCacheBase, result_key
from divgraph.cache.v1.huey import HueyResultCache, create_huey
from divgraph.cycletypes.v1.schemas import Group
from divgraph.errors.v1.exceptions import (
    CapacityRefusedError,
    InputParseError,
    InvalidArgumentError,
)
from divgraph.graphs.v1.builders import build_graph
from divgraph.graphs.v1.components import DEFAULT_VERTEX_LIMIT, components
from divgraph.graphs.v1.export import graph_document, to_csv, to_dot, to_json, to_text
from divgraph.graphs.v1.schemas import ComponentReport, GraphKind, SizeSet, UGraph
from divgraph.graphs.v1.sizes import size_set, size_set_from_integers
from divgraph.logging.v1.context import RUN_ID_CONTEXTVAR, adopt_run_id
from divgraph.oracle.v1.brute import brute_class_sizes
from divgraph.settings.v1.config_files import deep_merge
from divgraph.settings.v1.protocols import BudgetSettingsProtocol
from divgraph.settings.v1.schemas import BudgetSettings, DivgraphSettings
from divgraph.theorems.v1.runner import DEFAULT_RANGES, run_claim
from divgraph.verdicts.v1.reports import any_failed, summary_table, verdict_stream

logger = logging.getLogger(__name__)

SWEEP_HEADER = (
    "n",
    "group",
    "vertices",
    "edges",
    "components",
    "component_sizes",
    "overall_diameter",
    "wall_time",
)
BUDGET_FLAGS = (
    "max_build_n",
    "max_diameter_n",
    "oracle_tally_n",
    "oracle_orbit_n",
    "diameter_vertex_limit",
)
# the oracle warns about its own caps when they are raised
_WARNED_BUDGETS = ("max_build_n", "max_diameter_n", "diameter_vertex_limit")


def apply_overrides(
    settings: DivgraphSettings, args: argparse.Namespace
) -> DivgraphSettings:
    """
    Merge budget and worker flags into the settings.

    Args:
        settings: Settings loaded from configuration files.
        args: Parsed command line.

    Returns:
        DivgraphSettings: Revalidated settings.

    Raises:
        InvalidArgumentError: Raised if an override does not validate.
    """
    defaults = BudgetSettings()
    budgets: dict[str, int] = {}
    for name in BUDGET_FLAGS:
        value = getattr(args, name, None)
        if value is None:
            continue
        budgets[name] = value
        if name in _WARNED_BUDGETS and value > getattr(defaults, name):
            logger.warning(
                f"{name} raised from {getattr(defaults, name)} to {value}; "
                "expect long run times and high memory use"
            )

    overrides: dict[str, Any] = {"budgets": budgets}
    if getattr(args, "workers", None) is not None:
        overrides["workers"] = args.workers

    try:
        return DivgraphSettings.model_validate(
            deep_merge(settings.model_dump(), overrides)
        )
    except ValueError as exc:
        raise InvalidArgumentError(f"invalid override: {exc}") from exc


def open_cache(settings: DivgraphSettings) -> Optional[ResultCacheBase]:
    """
    The result cache, when enabled in the settings.

    Args:
        settings: Settings with the cache section.

    Returns:
        Optional[ResultCacheBase]: The cache, or None when disabled.
    """
    if not settings.cache.enabled:
        return None
    return HueyResultCache(
        create_huey(settings.cache),
        settings.cache.name,
        compress_threshold=settings.cache.compress_threshold,
    )


def write_output(text: str, path: Optional[str]) -> None:
    """
    Write an artifact to a file, or to stdout when no path is given.

    Args:
        text: The artifact.
        path: Output file path.

    Raises:
        InvalidArgumentError: Raised if the file cannot be written.
    """
    if not path:
        sys.stdout.write(text)
        return
    try:
        with open(Path(path).expanduser(), "w", encoding="utf-8", newline="") as out:
            out.write(text)
    except OSError as exc:
        raise InvalidArgumentError(f"cannot write {path}: {exc}") from exc
    logger.info(f"Wrote {len(text)} characters to {path}")


def render(
    g: UGraph,
    report: ComponentReport,
    sizes: Optional[SizeSet],
    fmt: str,
    factored: bool = False,
) -> str:
    """
    Render a built graph in one of the output formats.

    Args:
        g: The graph.
        report: Its component report.
        sizes: The size set it was built from.
        fmt: "json", "dot", "csv" or "text".
        factored: Add a factors column to csv; json always carries them.

    Returns:
        str: The artifact.
    """
    if fmt == "json":
        return to_json(graph_document(g, report, sizes))
    if fmt == "dot":
        return to_dot(g, report, sizes)
    if fmt == "csv":
        return to_csv(g, report, sizes, factored)
    return to_text(g, report, sizes)


def _check_build_n(n: int, budgets: BudgetSettingsProtocol) -> None:
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if n > budgets.max_build_n:
        raise CapacityRefusedError("build degree budget", budgets.max_build_n, n)


def _diameter_suffix(diameters: bool, budgets: BudgetSettingsProtocol) -> str:
    if not diameters:
        return "-nodiam"
    if budgets.diameter_vertex_limit != DEFAULT_VERTEX_LIMIT:
        return f"-v{budgets.diameter_vertex_limit}"
    return ""


def cmd_build(args: argparse.Namespace, settings: DivgraphSettings) -> int:
    """
    Build D, Gamma, Delta or B for S_n or A_n and write it out.

    Diameters are left out (with a warning) when n is over the diameter budget.

    Args:
        args: Parsed command line.
        settings: Effective settings.

    Returns:
        int: Exit status.
    """
    budgets = settings.budgets
    group, n, kind = Group(args.group), args.n, GraphKind(args.kind)
    _check_build_n(n, budgets)
    diameters = n <= budgets.max_diameter_n
    if not diameters:
        logger.warning(
            f"n={n} is over the diameter budget of {budgets.max_diameter_n}; "
            "diameters are omitted"
        )

    cache = open_cache(settings)
    flavor = f"{kind.value}-{args.format}" + _diameter_suffix(diameters, budgets)
    key = result_key(group.value, n, flavor, args.factored)
    if cache is not None and (cached := cache.fetch_result(key)) is not None:
        logger.info(f"Using cached {key}")
        write_output(cached, args.output)
        return 0

    sizes = size_set(n, group)
    g = build_graph(sizes, kind, workers=settings.workers)
    report = components(
        g,
        diameters=diameters,
        vertex_limit=budgets.diameter_vertex_limit,
        workers=settings.workers,
    )
    text = render(g, report, sizes, args.format, args.factored)

    if cache is not None:
        cache.store_result(key, text)
    write_output(text, args.output)
    return 0


def _degrees(args: argparse.Namespace) -> Optional[list[int]]:
    if args.claim == "oracle" and args.max_n is not None:
        return list(range(1, args.max_n + 1))
    if args.n is not None:
        return [args.n]
    if args.n_from is None and args.n_to is None:
        return None
    low, high = DEFAULT_RANGES[args.claim]
    start = low if args.n_from is None else args.n_from
    stop = high if args.n_to is None else args.n_to
    return list(range(start, stop + 1))


def cmd_verify(args: argparse.Namespace, settings: DivgraphSettings) -> int:
    """
    Run one claim and write the verdict stream (json) or summary table (text).

    Args:
        args: Parsed command line.
        settings: Effective settings.

    Returns:
        int: 1 if any verdict is fail, else 0.
    """
    group = Group(args.group) if args.group else None
    reports = run_claim(args.claim, _degrees(args), settings, group)

    if args.format == "json":
        text = verdict_stream(reports, timings=args.timings)
    else:
        text = summary_table(reports)
    write_output(text, args.output)
    return 1 if any_failed(reports) else 0


def read_integers(path: str) -> list[int]:
    """
    Read one positive decimal integer per line; blank lines are skipped.

    Args:
        path: Input file.

    Returns:
        list[int]: The integers in file order.

    Raises:
        InvalidArgumentError: Raised if the file cannot be read or holds no integer.
        InputParseError: Raised for the first line that is not a positive integer.
    """
    try:
        with open(Path(path).expanduser(), "r", encoding="utf-8") as reader:
            lines = reader.read().splitlines()
    except OSError as exc:
        raise InvalidArgumentError(f"cannot read {path}: {exc}") from exc

    values = []
    for line_number, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        if not (text.isascii() and text.isdigit()) or int(text) < 1:
            raise InputParseError(line_number, raw)
        values.append(int(text))

    if not values:
        raise InvalidArgumentError(f"{path} holds no integers; X must be non-empty")
    logger.debug(f"Read {len(values)} integers from {path}")
    return values


def cmd_fromfile(args: argparse.Namespace, settings: DivgraphSettings) -> int:
    """
    Build a graph for a user supplied set of integers.

    Args:
        args: Parsed command line.
        settings: Effective settings.

    Returns:
        int: Exit status.
    """
    sizes = size_set_from_integers(read_integers(args.path))
    g = build_graph(sizes, GraphKind(args.kind), workers=settings.workers)
    report = components(
        g,
        vertex_limit=settings.budgets.diameter_vertex_limit,
        workers=settings.workers,
    )
    write_output(render(g, report, sizes, args.format, args.factored), args.output)
    return 0


def sweep_row(
    n: int,
    group: Group,
    kind: GraphKind,
    diameters: bool,
    vertex_limit: int,
    run_id: Optional[str] = None,
) -> dict[str, Any]:
    """
    Graph statistics of one degree for the sweep CSV.

    Args:
        n: Degree.
        group: S_n or A_n.
        kind: Which graph.
        diameters: Whether to compute the overall diameter.
        vertex_limit: Largest component for the dense distance pass.
        run_id: Run ID of the parent process, for log correlation.

    Returns:
        dict[str, Any]: One row keyed by SWEEP_HEADER.
    """
    adopt_run_id(run_id)
    started = time.perf_counter()
    g = build_graph(size_set(n, group), kind)
    report = components(g, diameters=diameters, vertex_limit=vertex_limit)
    logger.debug(f"sweep {group.value}_{n}: {g.vertex_count} vertices")
    return {
        "n": n,
        "group": group.value,
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "components": report.component_count,
        "component_sizes": ";".join(str(len(c)) for c in report.components),
        "overall_diameter": report.overall_diameter,
        "wall_time": round(time.perf_counter() - started, 6),
    }


def _sweep_rows(
    ns: list[int],
    group: Group,
    kind: GraphKind,
    settings: DivgraphSettings,
) -> list[dict[str, Any]]:
    budgets = settings.budgets
    cache = open_cache(settings)
    rows: dict[int, dict[str, Any]] = {}
    keys: dict[int, str] = {}

    for n in ns:
        diameters = n <= budgets.max_diameter_n
        flavor = f"{kind.value}-sweep" + _diameter_suffix(diameters, budgets)
        keys[n] = result_key(group.value, n, flavor)
        if cache is not None and (cached := cache.fetch_result(keys[n])) is not None:
            rows[n] = json.loads(cached)

    missing = [n for n in ns if n not in rows]
    run_id = RUN_ID_CONTEXTVAR.get()
    calls = [
        (n, group, kind, n <= budgets.max_diameter_n, budgets.diameter_vertex_limit)
        for n in missing
    ]
    if settings.workers > 1 and len(calls) > 1:
        with ProcessPoolExecutor(max_workers=settings.workers) as pool:
            futures = [pool.submit(sweep_row, *call, run_id) for call in calls]
            computed = [future.result() for future in futures]
    else:
        computed = [sweep_row(*call, run_id) for call in calls]

    for row in computed:
        rows[row["n"]] = row
        if cache is not None:
            cache.store_result(keys[row["n"]], json.dumps(row, sort_keys=True))

    return [rows[n] for n in ns]


def cmd_sweep(args: argparse.Namespace, settings: DivgraphSettings) -> int:
    """
    One CSV row per n in the range, ordered by n.

    The overall diameter is blank above the diameter budget and the wall time
    is blank unless --timings is given. An empty range gives just the header.

    Args:
        args: Parsed command line.
        settings: Effective settings.

    Returns:
        int: Exit status.
    """
    ns = list(range(args.n_from, args.n_to + 1))
    if ns:
        _check_build_n(ns[0], settings.budgets)
        _check_build_n(ns[-1], settings.budgets)

    rows = _sweep_rows(ns, Group(args.group), GraphKind(args.kind), settings)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        if not args.timings:
            row["wall_time"] = None
        writer.writerow(
            ["" if row[column] is None else row[column] for column in SWEEP_HEADER]
        )
    write_output(buffer.getvalue(), args.output)
    return 0


def cmd_oracle(args: argparse.Namespace, settings: DivgraphSettings) -> int:
    """
    Print brute force class sizes of S_n or A_n as CSV (cycle_type, size).

    Args:
        args: Parsed command line.
        settings: Effective settings.

    Returns:
        int: Exit status.
    """
    budgets = settings.budgets
    cap = budgets.oracle_tally_n if args.mode == "tally" else budgets.oracle_orbit_n
    found = brute_class_sizes(
        args.n, alternating=args.group == "A", mode=args.mode, cap=cap
    )

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("cycle_type", "size"))
    for item in found:
        writer.writerow((item.label, item.size))
    write_output(buffer.getvalue(), args.output)
    return 0


COMMANDS: dict[str, Callable[[argparse.Namespace, DivgraphSettings], int]] = {
    "build": cmd_build,
    "verify": cmd_verify,
    "fromfile": cmd_fromfile,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
}
