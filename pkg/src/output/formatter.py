import os
import json
import logging
from typing import Any, List

from .charts import arrows, ascii_chart, svg_chart, term_summary
from ..config import Config
from ..formats import PageReport

logger = logging.getLogger(__name__)

EXTENSIONS = {"json": "page.json", "txt": "txt", "ascii": "txt", "svg": "svg"}


class OutputFormatter:
    """Handles formatting and saving page reports in different formats."""

    def __init__(self, config: Config):
        """Initialize the output formatter.

        Args:
            config: Configuration object
        """
        self.config = config
        self.format = config.output_format

    def save_report(self, reports: List[PageReport], output_path: str):
        """Save page reports to file in the configured format.

        Args:
            reports: Pages to write, in page order
            output_path: Path of the output file

        Raises:
            ValueError: If the output format is not supported
            IOError: If there's an error writing the file
        """
        logger.info(f"Saving {len(reports)} page reports in {self.format} format to {output_path}")

        output_dir = os.path.dirname(output_path)
        if output_dir:
            os.makedirs(output_dir, exist_ok=True)

        try:
            content = self.format_reports(reports)
            with open(output_path, "w", encoding="utf-8") as f:
                f.write(content)
            logger.info(f"Report saved successfully to {output_path}")
        except Exception as e:
            logger.error(f"Error saving report: {e}")
            raise

    def default_path(self, stem: str) -> str:
        """Output path for ``stem`` inside the configured output directory."""
        return os.path.join(self.config.output_dir, f"{stem}.{EXTENSIONS.get(self.format, self.format)}")

    def format_reports(self, reports: List[PageReport]) -> str:
        """Format page reports as a string for files or console display."""
        if self.format == "json":
            return self._format_json(reports)
        if self.format == "txt":
            return "\n".join(self._format_txt(report) for report in reports)
        if self.format == "ascii":
            return "\n".join(ascii_chart(report) for report in reports)
        if self.format == "svg":
            # one chart per document: the last page
            return svg_chart(reports[-1]) if reports else svg_chart_empty()
        raise ValueError(f"Unsupported output format: {self.format}")

    def _format_json(self, reports: List[PageReport]) -> str:
        if len(reports) == 1:
            data: Any = reports[0].to_dict()
        else:
            data = {"format_version": 1, "kind": "page_reports", "pages": [r.to_dict() for r in reports]}
        return json.dumps(data, ensure_ascii=False, indent=2) + "\n"

    def _format_txt(self, report: PageReport) -> str:
        lines = [f"{report.label} [{report.method}, {report.convention}, {report.ring.name}]"]
        if not report.terms:
            lines.append("  (all terms vanish)")
        for term in report.terms:
            lines.append(f"  ({term.s}, {term.t}): {term_summary(report, term)}")
        for source, target in arrows(report):
            matrix = report.term(*source).differential
            rendered = "; ".join(" ".join(str(x) for x in row) for row in matrix)
            lines.append(f"  d {source} -> {target}: [{rendered}]")
        return "\n".join(lines) + "\n"


def svg_chart_empty() -> str:
    return ('<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="100" height="100"/>\n')
