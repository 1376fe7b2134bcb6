# -*- coding: utf-8 -*-
# Copyright (c) 2025. All rights reserved.
# Licensed under the MIT License. See LICENSE file in the project root for details.

"""
Exporters for built graphs: JSON documents, DOT, per-vertex CSV and text.

DOT output is rendered from a Jinja2 template. An application directory can
override the packaged template by placing a file with the same name in it.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Optional

from jinja2 import ChoiceLoader, Environment, FileSystemLoader, StrictUndefined

from divgraph.graphs.v1.schemas import (
    ComponentReport,
    GraphDocument,
    GraphKind,
    SizeSet,
    UGraph,
)

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent / "templates"
DOT_TEMPLATE = "graph.dot.j2"
CSV_HEADER = ("vertex", "size", "degree", "component", "origin")


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def configure_templates(template_dir: Optional[str] = None) -> Environment:
    """
    Create the Jinja2 environment used for DOT rendering.

    Args:
        template_dir: Optional directory searched before the packaged templates.

    Returns:
        Environment: Environment with the dot_escape filter registered.
    """
    loaders = [FileSystemLoader(str(TEMPLATE_DIR))]
    if template_dir:
        loaders.insert(0, FileSystemLoader(template_dir))

    env = Environment(
        loader=ChoiceLoader(loaders),
        undefined=StrictUndefined,
        autoescape=False,
    )
    env.filters["dot_escape"] = _dot_escape
    return env


def _origin_of(g: UGraph, sizes: Optional[SizeSet]) -> dict[str, list[str]]:
    if sizes is None or g.kind is GraphKind.DELTA:
        return {}
    keys = set(g.vertices)
    return {
        str(size): list(labels)
        for size, labels in sizes.origin.items()
        if str(size) in keys
    }


def _title(g: UGraph, sizes: Optional[SizeSet]) -> str:
    if sizes is not None and sizes.group is not None:
        return f"{g.kind.value}({sizes.group.value}_{sizes.n})"
    return f"{g.kind.value}(X)"


def graph_document(
    g: UGraph,
    report: ComponentReport,
    sizes: Optional[SizeSet] = None,
) -> GraphDocument:
    """
    Assemble the schema "divgraph/1" document for a graph.

    Args:
        g: The graph.
        report: Its component report.
        sizes: The size set it was built from. Size vertices then carry their
            class labels in `origin` and their factor maps in `factors`.

    Returns:
        GraphDocument: The document.
    """
    factors = None
    if sizes is not None and g.kind is not GraphKind.DELTA:
        keys = set(g.vertices)
        factors = {
            str(size): size.factor_map()
            for size in sizes.sizes
            if str(size) in keys
        }

    return GraphDocument(
        n=sizes.n if sizes else None,
        group=sizes.group if sizes else None,
        kind=g.kind,
        vertices=list(g.vertices),
        edges=[[u, v] for u, v in g.edges()],
        parts=list(g.parts) if g.parts else None,
        components=report.components,
        diameters=report.diameters,
        overall_diameter=report.overall_diameter,
        isolated=report.isolated,
        null_graph=report.null_graph,
        origin=_origin_of(g, sizes),
        factors=factors,
    )


def to_json(document: GraphDocument) -> str:
    """
    Serialize a graph document.

    Args:
        document: The document.

    Returns:
        str: Indented JSON with a trailing newline.
    """
    return json.dumps(document.to_json_dict(), indent=2) + "\n"


def to_dot(
    g: UGraph,
    report: ComponentReport,
    sizes: Optional[SizeSet] = None,
    env: Optional[Environment] = None,
) -> str:
    """
    Render a graph as Graphviz DOT, one cluster per connected component.

    Args:
        g: The graph.
        report: Its component report.
        sizes: The size set, for origin labels.
        env: Jinja2 environment; the packaged one when omitted.

    Returns:
        str: DOT source.
    """
    env = env or configure_templates()
    origin = _origin_of(g, sizes)

    clusters: list[dict[str, Any]] = []
    for members, diameter in zip(report.components, report.diameters):
        vertices = []
        for key in members:
            idx = g.key_index[key]
            vertices.append(
                {
                    "index": idx,
                    "lines": [key, *origin.get(key, [])],
                    "part": g.parts[idx] if g.parts else None,
                }
            )
        clusters.append({"vertices": vertices, "diameter": diameter})

    template = env.get_template(DOT_TEMPLATE)
    rendered = template.render(
        title=_title(g, sizes),
        shape="box",
        components=clusters,
        edges=g.edges(),
    )
    return rendered + "\n"


def to_csv(
    g: UGraph,
    report: ComponentReport,
    sizes: Optional[SizeSet] = None,
    factored: bool = False,
) -> str:
    """
    One CSV row per vertex: vertex, size, degree, component, origin.

    The size column holds the decimal value of size vertices and is blank for
    prime vertices (all of Delta(X) and the prime part of B(X)). Origins are
    joined with ";". With factored, a factors column carries "2^3*3^1"
    renderings.

    Args:
        g: The graph.
        report: Its component report.
        sizes: The size set, for origins and factors.
        factored: Whether to add the factors column.

    Returns:
        str: CSV text with a header row.
    """
    origin = _origin_of(g, sizes)
    by_key = {str(size): size for size in sizes.sizes} if sizes else {}
    component_of = {
        key: idx for idx, members in enumerate(report.components) for key in members
    }

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER + (("factors",) if factored else ()))
    for idx, key in enumerate(g.vertices):
        is_size = g.kind is not GraphKind.DELTA and not (
            g.parts and g.parts[idx] == "prime"
        )
        size = by_key.get(key)
        row = [
            key,
            key if is_size else "",
            g.degree(idx),
            component_of[key],
            ";".join(origin.get(key, [])),
        ]
        if factored:
            row.append(size.factor_string() if size is not None and is_size else "")
        writer.writerow(row)
    return buffer.getvalue()


def to_text(g: UGraph, report: ComponentReport, sizes: Optional[SizeSet] = None) -> str:
    """
    Human readable summary of a graph and its components.

    Args:
        g: The graph.
        report: Its component report.
        sizes: The size set, for the title.

    Returns:
        str: Summary text.
    """
    lines = [
        f"{_title(g, sizes)}: {g.vertex_count} vertices, {g.edge_count} edges",
    ]
    if report.null_graph:
        lines.append("null graph (no vertices)")
    lines.append(
        f"components: {report.component_count}, "
        f"overall diameter: {_blank(report.overall_diameter)}"
    )
    for idx, (members, diameter) in enumerate(zip(report.components, report.diameters)):
        lines.append(
            f"  [{idx}] size {len(members)}, diameter {_blank(diameter)}: "
            + " ".join(members)
        )
    if report.isolated:
        lines.append("isolated: " + " ".join(report.isolated))
    return "\n".join(lines) + "\n"


def _blank(value: Optional[int]) -> str:
    return "n/a" if value is None else str(value)
