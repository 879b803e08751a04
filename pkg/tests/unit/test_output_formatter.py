import json
import xml.etree.ElementTree as ET

import pytest

from src.config import Config
from src.formats import PageReport, parse_page_report
from src.output import arrows, ascii_chart, chart_render, svg_chart
from src.output.formatter import OutputFormatter
from src.pages import er_classical


@pytest.fixture
def e2_report(toy):
    return PageReport.from_page(er_classical(toy, 2))


def test_txt_output_lists_terms_and_differentials(e2_report, tmp_path):
    formatter = OutputFormatter(Config(output_format="txt"))
    output_path = tmp_path / "toy.txt"

    formatter.save_report([e2_report], str(output_path))
    content = output_path.read_text(encoding="utf-8")

    assert content.startswith("E^2 [classical, serre-homology-decreasing, ZZ]")
    assert "  (-2, 2): Z" in content
    assert "  (0, 1): Z" in content
    assert "  d (0, 1) -> (-2, 2): [" in content


def test_txt_output_of_a_vanishing_page(toy):
    formatter = OutputFormatter(Config(output_format="txt"))
    content = formatter.format_reports([PageReport.from_page(er_classical(toy, 3))])

    assert "E^3" in content
    assert "(all terms vanish)" in content


def test_json_output(e2_report, toy):
    formatter = OutputFormatter(Config(output_format="json"))

    single = json.loads(formatter.format_reports([e2_report]))
    assert parse_page_report(single) == e2_report

    e1_report = PageReport.from_page(er_classical(toy, 1))
    several = json.loads(formatter.format_reports([e1_report, e2_report]))
    assert several["kind"] == "page_reports"
    assert [page["label"] for page in several["pages"]] == ["E^1", "E^2"]


def test_arrows(e2_report, toy):
    assert arrows(e2_report) == [((0, 1), (-2, 2))]
    # d^1 of the toy complex is zero
    assert arrows(PageReport.from_page(er_classical(toy, 1))) == []


def test_ascii_chart(e2_report):
    chart = ascii_chart(e2_report)
    lines = chart.splitlines()

    assert lines[0] == "E^2 (serre-homology-decreasing, ZZ)"
    assert lines[-1] == "d: (0, 1) -> (-2, 2)"
    # rows run from t = 2 down to t = 1
    grid_rows = [line for line in lines if "|" in line and not line.lstrip().startswith("+")]
    assert grid_rows[0].lstrip().startswith("2 |")
    assert grid_rows[1].lstrip().startswith("1 |")


def test_svg_chart_is_well_formed(e2_report):
    root = ET.fromstring(svg_chart(e2_report).split("\n", 1)[1])
    ns = {"svg": "http://www.w3.org/2000/svg"}

    positions = {el.get("data-position") for el in root.iter("{http://www.w3.org/2000/svg}text")
                 if el.get("data-position")}
    assert positions == {"-2,2", "0,1"}
    assert len(root.findall("svg:line[@marker-end]", ns)) == 1


def test_chart_render_rejects_unknown_formats(e2_report):
    assert chart_render(e2_report, "ascii") == ascii_chart(e2_report)
    with pytest.raises(ValueError):
        chart_render(e2_report, "png")


def test_svg_output_without_pages():
    formatter = OutputFormatter(Config(output_format="svg"))
    root = ET.fromstring(formatter.format_reports([]).split("\n", 1)[1])
    assert root.tag == "{http://www.w3.org/2000/svg}svg"


def test_unsupported_format_raises(e2_report):
    config = Config()
    config.output_format = "pdf"
    with pytest.raises(ValueError):
        OutputFormatter(config).format_reports([e2_report])


def test_default_path(tmp_path):
    config = Config(output_format="json", output_dir=str(tmp_path))
    assert OutputFormatter(config).default_path("toy") == str(tmp_path / "toy.page.json")

    config.output_format = "ascii"
    assert OutputFormatter(config).default_path("toy") == str(tmp_path / "toy.txt")
