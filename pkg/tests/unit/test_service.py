"""
Unit tests for the application service behind the command line.
"""

import os
from unittest.mock import patch

import pytest

from src.formats import serialize_filtered_complex
from src.indexing import Convention
from src.service import SpectralSequenceService


@pytest.fixture
def service(test_config, cache_dir):
    return SpectralSequenceService(test_config, cache_dir=cache_dir)


def test_compute_pages(service, toy):
    reports = service.compute_pages(toy, r_max=2)

    assert [report.label for report in reports] == ["E^1", "E^2", "E^inf"]
    assert reports[1].term(0, 1).target == (-2, 2)
    assert reports[2].terms == ()


def test_second_run_reads_the_cache(service, toy):
    first = service.compute_pages(toy, r_max=2, include_infinity=False)
    assert len(os.listdir(service.cache.pages_cache_dir)) == 2

    with patch("src.service.er_page") as er_page:
        second = service.compute_pages(toy, r_max=2, include_infinity=False)
    er_page.assert_not_called()
    assert second == first


def test_convention_is_part_of_the_key(service, toy):
    source = serialize_filtered_complex(toy)
    service.compute_pages(toy, r_max=1, include_infinity=False, source=source)
    adams = service.compute_pages(toy, r_max=1, include_infinity=False, source=source,
                                  convention=Convention.parse("adams-homology-decreasing"))

    assert adams[0].convention == "adams-homology-decreasing"
    assert len(os.listdir(service.cache.pages_cache_dir)) == 2


def test_build_output_path(service, test_config):
    path = service.build_output_path("inputs/toy_d2.fc.json", "json")
    assert path == os.path.join(test_config.output_dir, "toy_d2.page.json")


def test_validate_file(service, fixtures_dir):
    summary = service.validate_file(str(fixtures_dir / "koszul.fc.json"))
    assert summary["kind"] == "filtered_complex"
    assert summary["dga"] is True

    summary = service.validate_file(str(fixtures_dir / "rp2.cw.json"))
    assert summary == {"path": str(fixtures_dir / "rp2.cw.json"), "kind": "cw_complex", "dimension": 2}


def test_ahss_with_builtin_space(service):
    result = service.ahss("S2", "Z", r_max=3)

    assert result["report"].ok
    assert [page.label for page in result["skeletal"]][-1] == "E^inf"
