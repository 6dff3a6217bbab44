"""Functions to render solutions, reports and route maps."""
from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import TYPE_CHECKING, Any, Sequence

import color
from cost_engine import fitness
from instance import build_distance_matrix
from metric import Metric
from output_format import OutputFormat
from route import format_route, route_distance

if TYPE_CHECKING:
    from baseline import ComparisonReport
    from cost_engine import Solution
    from instance import Instance

COMPARISON_COLUMNS = [
    "instance",
    "baseline_Z",
    "ga_Z",
    "baseline_time",
    "ga_time",
    "baseline_dist",
    "ga_dist",
    "impr_Z_pct",
    "impr_time_pct",
    "impr_dist_pct",
]

SOLUTION_COLUMNS = [
    "shop_id",
    "fitness",
    "min_C",
    "makespan",
    "travel_time",
    "vehicles",
    "route",
]

SVG_SIZE = 600
SVG_MARGIN = 40
LEGEND_LINE = 18


def solution_route_string(solution: Solution) -> str:
    """Return every non-empty route, space separated ("0 - 1 0 - 2")."""
    return " ".join(
        format_route(route) for route in solution.routes if not route.is_empty
    )


def solution_row(name: str, solution: Solution) -> dict[str, Any]:
    """Return one results-table row for a solution."""
    z = solution.cost.total_z
    return {
        "shop_id": name,
        "fitness": fitness(z) if z > 0 else None,
        "min_C": z,
        "makespan": solution.schedule.makespan,
        "travel_time": solution.schedule.total_travel_time,
        "vehicles": solution.vehicles_used,
        "route": solution_route_string(solution),
    }


def _text_cell(value: Any, decimals: int = 3) -> str:  # noqa: ANN401
    """Format a table cell for aligned text output."""
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


def _csv_cell(value: Any) -> str:  # noqa: ANN401
    """Format a CSV cell; floats keep full precision."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def render_table(
    columns: Sequence[str],
    rows: Sequence[dict[str, Any]],
    decimals: dict[str, int] | None = None,
) -> str:
    """Render rows as a left-aligned text table with a header line."""
    decimals = decimals or {}
    cells = [
        [_text_cell(row[c], decimals.get(c, 3)) for c in columns]
        for row in rows
    ]
    widths = [
        max([len(column), *(len(line[i]) for line in cells)])
        for i, column in enumerate(columns)
    ]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths))
        .rstrip()
        for line in [list(columns), *cells]
    ]
    return "\n".join(lines) + "\n"


def render_csv(columns: Sequence[str], rows: Sequence[dict[str, Any]]) -> str:
    """Render rows as CSV with a header line."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_csv_cell(row[c]) for c in columns])
    return buffer.getvalue()


def render_rows(
    columns: Sequence[str],
    rows: Sequence[dict[str, Any]],
    output_format: OutputFormat,
    decimals: dict[str, int] | None = None,
) -> str:
    """Render rows in the requested output format."""
    if output_format is OutputFormat.CSV:
        return render_csv(columns, rows)
    if output_format is OutputFormat.JSON:
        return json.dumps([{c: row[c] for c in columns} for row in rows],
                          indent=2) + "\n"
    return render_table(columns, rows, decimals)


def render_solution(
    name: str, solution: Solution, output_format: OutputFormat,
) -> str:
    """Render a solution as a results-table row with its header."""
    return render_rows(
        SOLUTION_COLUMNS, [solution_row(name, solution)], output_format,
        decimals={"fitness": 5},
    )


def comparison_rows(report: ComparisonReport) -> list[dict[str, Any]]:
    """Return the report rows as dictionaries keyed by CSV column."""
    return [
        {
            "instance": row.instance,
            "baseline_Z": row.baseline_z,
            "ga_Z": row.ga_z,
            "baseline_time": row.baseline_time,
            "ga_time": row.ga_time,
            "baseline_dist": row.baseline_dist,
            "ga_dist": row.ga_dist,
            "impr_Z_pct": row.impr_z_pct,
            "impr_time_pct": row.impr_time_pct,
            "impr_dist_pct": row.impr_dist_pct,
        }
        for row in report.rows
    ]


def render_comparison(
    report: ComparisonReport, output_format: OutputFormat,
) -> str:
    """Render a comparison report; text output ends with the means."""
    text = render_rows(
        COMPARISON_COLUMNS, comparison_rows(report), output_format)
    if output_format is OutputFormat.TEXT and report.rows:
        text += (
            f"\nmean time: baseline {report.mean_baseline_time:.3f}, "
            f"GA {report.mean_ga_time:.3f}\n"
            f"mean distance: baseline {report.mean_baseline_dist:.3f}, "
            f"GA {report.mean_ga_dist:.3f}\n"
            f"mean Z: baseline {report.mean_baseline_z:.3f}, "
            f"GA {report.mean_ga_z:.3f}; GA not worse on "
            f"{report.ga_not_worse_share:.0%} of instances\n"
        )
    return text


def route_svg(
    solution: Solution,
    instance: Instance,
    metric: Metric = Metric.EUCLIDEAN,
) -> ET.Element:
    """Build a schematic SVG map of a solution.

    Merchants are squares, customers are labelled circles, each route is a
    polyline in its own colour and the legend lists the route distances.
    """
    table = instance.node_table
    xs, ys = table["x"], table["y"]
    span = max(float(xs.max() - xs.min()), float(ys.max() - ys.min()), 1e-9)
    scale = (SVG_SIZE - 2 * SVG_MARGIN) / span
    x0, y1 = float(xs.min()), float(ys.max())

    def project(node: int) -> tuple[float, float]:
        """Map a node to canvas coordinates, y pointing down."""
        return (
            round(SVG_MARGIN + (float(xs[node]) - x0) * scale, 2),
            round(SVG_MARGIN + (y1 - float(ys[node])) * scale, 2),
        )

    routes = [route for route in solution.routes if not route.is_empty]
    height = SVG_SIZE + LEGEND_LINE * (len(routes) + 1)
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "version": "1.1",
        "width": str(SVG_SIZE),
        "height": str(height),
        "viewBox": f"0 0 {SVG_SIZE} {height}",
    })
    ET.SubElement(svg, "rect", {
        "width": "100%", "height": "100%", "fill": color.to_hex(color.white),
    })

    dm = build_distance_matrix(instance, metric)
    for index, route in enumerate(routes):
        points = " ".join(f"{x},{y}" for x, y in map(project, route.path))
        ET.SubElement(svg, "polyline", {
            "points": points,
            "fill": "none",
            "stroke": color.route_stroke(index),
            "stroke-width": "2",
        })
        legend = ET.SubElement(svg, "text", {
            "x": str(SVG_MARGIN),
            "y": str(SVG_SIZE + LEGEND_LINE * (index + 1)),
            "fill": color.route_stroke(index),
            "font-size": "12",
        })
        legend.text = (f"Route {route.vehicle_index}: {format_route(route)} "
                       f"({route_distance(route, dm):.3f})")

    for node in range(len(table)):
        x, y = project(node)
        if table["is_merchant"][node]:
            ET.SubElement(svg, "rect", {
                "class": "node merchant",
                "x": str(x - 6), "y": str(y - 6), "width": "12", "height": "12",
                "fill": color.to_hex(color.merchant_fill),
            })
        else:
            ET.SubElement(svg, "circle", {
                "class": "node customer",
                "cx": str(x), "cy": str(y), "r": "5",
                "fill": color.to_hex(color.customer_fill),
            })
        label = ET.SubElement(svg, "text", {
            "x": str(x + 7), "y": str(y - 7),
            "fill": color.to_hex(color.label_text), "font-size": "11",
        })
        label.text = str(node)
    return svg


def emit_route_svg(
    solution: Solution,
    instance: Instance,
    path: str | Path,
    metric: Metric = Metric.EUCLIDEAN,
) -> None:
    """Write the SVG route map of a solution to a file."""
    tree = ET.ElementTree(route_svg(solution, instance, metric))
    ET.indent(tree)
    tree.write(Path(path), encoding="utf-8", xml_declaration=True)
