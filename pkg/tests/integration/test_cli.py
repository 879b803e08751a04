import os
import sys
import json
import pytest
from unittest.mock import patch
from click.testing import CliRunner

# Add the scripts directory to the path so we can import the command line
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../../scripts')))

from specseq import cli, main, EXIT_INVALID, EXIT_VIOLATION
from src import __version__
from src.campaign import toy_d2
from src.decalage import deligne_decalage
from src.formats import parse_filtered_complex
from src.indexing import all_conventions


@pytest.fixture
def isolated_env(tmp_path):
    """Environment with outputs and counterexamples under tmp_path."""
    env_vars = {
        "OUTPUT_DIR": str(tmp_path / "output"),
        "COUNTEREXAMPLE_DIR": str(tmp_path / "counterexamples"),
        "SPECSEQ_THREADS": "1",
    }
    with patch.dict(os.environ, env_vars, clear=True):
        yield tmp_path


@pytest.fixture
def run(isolated_env):
    """Invoke the command line with a private cache."""
    runner = CliRunner()
    cache_dir = str(isolated_env / "cache")

    def invoke(*args):
        return runner.invoke(cli, ["--cache-dir", cache_dir, *args], obj={})
    return invoke


@pytest.fixture
def toy_file(fixtures_dir):
    return str(fixtures_dir / "toy_d2.fc.json")


def test_version(run):
    result = run("--version")
    assert result.exit_code == 0
    assert f"specseq v{__version__}" in result.output


def test_validate(run, toy_file):
    result = run("validate", toy_file)
    assert result.exit_code == 0
    assert "valid filtered_complex" in result.output


def test_validate_reports_violations(run, fixtures_dir):
    result = run("validate", str(fixtures_dir / "toy_d2_corrupted.fc.json"))
    assert result.exit_code == EXIT_INVALID
    assert "Invalid input" in result.output

    result = run("validate", str(fixtures_dir / "dd_nonzero.cc.json"))
    assert result.exit_code == EXIT_INVALID
    assert "offending degree: 2" in result.output


def test_pages(run, toy_file):
    result = run("pages", "--input", toy_file, "--rmax", "3")
    assert result.exit_code == 0
    assert "E^2 [classical, serre-homology-decreasing, ZZ]" in result.output
    assert "d (0, 1) -> (-2, 2)" in result.output
    assert "E^inf" in result.output


def test_pages_to_file(run, toy_file, isolated_env):
    output = str(isolated_env / "toy.page.json")
    result = run("pages", "-i", toy_file, "-r", "2", "-f", "json", "--method", "lurie", "--no-infinity",
                 "-o", output)
    assert result.exit_code == 0

    with open(output, encoding="utf-8") as f:
        data = json.load(f)
    assert [page["label"] for page in data["pages"]] == ["E^1", "E^2"]
    assert {page["method"] for page in data["pages"]} == {"lurie"}


def test_pages_in_another_convention(run, toy_file):
    result = run("pages", "-i", toy_file, "-r", "2", "-c", "adams-homology-decreasing", "-f", "ascii")
    assert result.exit_code == 0
    assert "(adams-homology-decreasing, ZZ)" in result.output

    result = run("pages", "-i", toy_file, "-c", "serre-homology-sideways")
    assert result.exit_code == EXIT_INVALID


def test_decalage(run, toy_file):
    result = run("decalage", "--input", toy_file)
    assert result.exit_code == 0

    dec, _ = parse_filtered_complex(json.loads(result.stdout))
    assert dec.same_filtration(deligne_decalage(toy_d2()))


def test_ahss(run):
    result = run("ahss", "--cw", "RP2")
    assert result.exit_code == 0
    assert "Skeletal filtration" in result.output
    assert "Whitehead filtration" in result.output
    assert "agree from E_2" in result.output

    result = run("ahss", "--cw", "Klein")
    assert result.exit_code == EXIT_INVALID


def test_verify(run):
    result = run("verify", "--theorem", "oracles", "--count", "2", "--rmax", "2", "--no-progress")
    assert result.exit_code == 0
    assert "no counterexamples" in result.output


def test_verify_mutated(run, isolated_env):
    result = run("verify", "--theorem", "convergence", "--count", "1", "--mutate", "--no-progress")
    assert result.exit_code == EXIT_VIOLATION
    assert "1 of 1 instances failed" in result.output

    written = os.listdir(isolated_env / "counterexamples")
    assert written == ["convergence-seed0-0.json"]


def test_conventions(run):
    result = run("conventions")
    assert result.exit_code == 0
    assert len(result.output.splitlines()) == len(all_conventions())


def test_main_returns_exit_status(isolated_env, toy_file, fixtures_dir):
    cache = ["--cache-dir", str(isolated_env / "cache")]
    assert main(["--version"]) == 0
    assert main([*cache, "validate", toy_file]) == 0
    assert main([*cache, "validate", str(fixtures_dir / "toy_d2_corrupted.fc.json")]) == EXIT_INVALID
