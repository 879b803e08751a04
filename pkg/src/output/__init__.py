"""Rendering of page reports: text, JSON and charts."""

from .charts import arrows, ascii_chart, chart_render, svg_chart
from .formatter import OutputFormatter

__all__ = ["arrows", "ascii_chart", "chart_render", "svg_chart", "OutputFormatter"]
