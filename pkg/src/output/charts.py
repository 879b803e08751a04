"""
Charts of a page: a text grid for terminals and a standalone SVG.

Both read a :class:`PageReport`, so positions and arrows are already in the
labels of the report's convention. Columns are s, rows are t with t growing
upwards.
"""

import logging
from typing import Dict, List, Tuple
from xml.sax.saxutils import escape, quoteattr

from ..formats import PageReport, TermReport
from ..linalg import FgModule

logger = logging.getLogger(__name__)

CELL = 90
MARGIN = 50


def term_summary(report: PageReport, term: TermReport) -> str:
    return FgModule(report.ring, term.rank, term.invariant_factors).summary()


def arrows(report: PageReport) -> List[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """Nonzero differentials as (source, target) pairs."""
    result = []
    for term in report.terms:
        if any(x != 0 for row in term.differential for x in row):
            result.append(((term.s, term.t), term.target))
    return result


def _extent(report: PageReport) -> Tuple[range, range]:
    points = [(term.s, term.t) for term in report.terms]
    points += [target for _, target in arrows(report)]
    if not points:
        return range(0), range(0)
    s_values = [p[0] for p in points]
    t_values = [p[1] for p in points]
    return range(min(s_values), max(s_values) + 1), range(min(t_values), max(t_values) + 1)


def ascii_chart(report: PageReport) -> str:
    """Grid of term summaries followed by the list of nonzero differentials."""
    columns, rows = _extent(report)
    cells: Dict[Tuple[int, int], str] = {(term.s, term.t): term_summary(report, term) for term in report.terms}
    width = max([len(text) for text in cells.values()] + [len(str(s)) for s in columns] + [1])
    label_width = max([len(str(t)) for t in rows] + [1])

    lines = [f"{report.label} ({report.convention}, {report.ring.name})"]
    border = " " * (label_width + 1) + "+" + "+".join("-" * (width + 2) for _ in columns) + "+"
    lines.append(border)
    for t in reversed(rows):
        row = [f" {cells.get((s, t), '.').center(width)} " for s in columns]
        lines.append(f"{str(t).rjust(label_width)} |" + "|".join(row) + "|")
        lines.append(border)
    lines.append(" " * (label_width + 2) + " ".join(f" {str(s).center(width)} " for s in columns))

    for source, target in arrows(report):
        lines.append(f"d: {source} -> {target}")
    return "\n".join(lines) + "\n"


def svg_chart(report: PageReport) -> str:
    """A standalone SVG document of the page."""
    columns, rows = _extent(report)
    n_cols, n_rows = max(len(columns), 1), max(len(rows), 1)
    width, height = 2 * MARGIN + n_cols * CELL, 2 * MARGIN + n_rows * CELL

    def center(s: int, t: int) -> Tuple[float, float]:
        x = MARGIN + (s - columns.start + 0.5) * CELL if len(columns) else MARGIN
        y = MARGIN + (rows.stop - 1 - t + 0.5) * CELL if len(rows) else MARGIN
        return x, y

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
        'orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="#b03030"/></marker></defs>',
        f'<title>{escape(f"{report.label} ({report.convention})")}</title>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{n_cols * CELL}" height="{n_rows * CELL}" '
        'fill="white" stroke="#444"/>',
    ]
    for i in range(1, n_cols):
        x = MARGIN + i * CELL
        parts.append(f'<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{MARGIN + n_rows * CELL}" stroke="#ddd"/>')
    for j in range(1, n_rows):
        y = MARGIN + j * CELL
        parts.append(f'<line x1="{MARGIN}" y1="{y}" x2="{MARGIN + n_cols * CELL}" y2="{y}" stroke="#ddd"/>')
    for s in columns:
        x, _ = center(s, rows.start if len(rows) else 0)
        parts.append(f'<text x="{x:.1f}" y="{height - MARGIN / 2:.1f}" text-anchor="middle">{s}</text>')
    for t in rows:
        _, y = center(columns.start if len(columns) else 0, t)
        parts.append(f'<text x="{MARGIN / 2:.1f}" y="{y:.1f}" text-anchor="middle">{t}</text>')

    for term in report.terms:
        x, y = center(term.s, term.t)
        label = term_summary(report, term)
        parts.append(
            f'<text x="{x:.1f}" y="{y:.1f}" text-anchor="middle" dominant-baseline="middle" '
            f'data-position={quoteattr(f"{term.s},{term.t}")}>{escape(label)}</text>'
        )
    for source, target in arrows(report):
        x1, y1 = center(*source)
        x2, y2 = center(*target)
        parts.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="#b03030" '
            f'stroke-width="1.5" marker-end="url(#arrow)"/>'
        )
    parts.append("</svg>")
    logger.debug(f"Rendered SVG chart of {report.label} with {len(report.terms)} terms")
    return "\n".join(parts) + "\n"


def chart_render(report: PageReport, fmt: str) -> str:
    """Render a chart in ``ascii`` or ``svg``.

    Raises:
        ValueError: If the format is not supported
    """
    if fmt == "ascii":
        return ascii_chart(report)
    if fmt == "svg":
        return svg_chart(report)
    raise ValueError(f"Unsupported chart format: {fmt}")
