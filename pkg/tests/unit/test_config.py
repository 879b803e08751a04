import os
import sys
import pytest
from unittest.mock import patch

# Add the parent directory to the path so we can import the src package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from src.config import Config
from src.indexing import Convention
from src.linalg import Ring

@pytest.fixture
def mock_env_vars():
    """Mock environment variables for testing."""
    env_vars = {
        "SPECSEQ_THREADS": "4",
        "DEFAULT_RING": "GF2",
        "RMAX": "5",
        "CONVENTION": "adams-homology-decreasing",
        "CAMPAIGN_SEED": "7",
        "CAMPAIGN_COUNT": "50",
        "OUTPUT_FORMAT": "json",
        "OUTPUT_DIR": "reports",
        "COUNTEREXAMPLE_DIR": "failures",
        "CACHE_ENABLED": "false",
    }
    return env_vars

def test_config_init_defaults():
    """Test Config initialization with default values."""
    with patch.dict(os.environ, {}, clear=True):
        config = Config()

        assert config.threads == 0
        assert config.ring == Ring.integers()
        assert config.rmax == 3
        assert config.convention.name == "serre-homology-decreasing"
        assert config.campaign_seed == 0
        assert config.campaign_count == 200
        assert config.output_format == "txt"
        assert config.output_dir == "output"
        assert config.counterexample_dir == "counterexamples"
        assert config.cache_enabled is True

def test_config_init_from_env(mock_env_vars):
    """Test Config initialization from environment variables."""
    with patch.dict(os.environ, mock_env_vars, clear=True):
        config = Config()

        assert config.threads == 4
        assert config.ring == Ring.prime_field(2)
        assert config.rmax == 5
        assert config.convention == Convention.parse("adams-homology-decreasing")
        assert config.campaign_seed == 7
        assert config.campaign_count == 50
        assert config.output_format == "json"
        assert config.output_dir == "reports"
        assert config.counterexample_dir == "failures"
        assert config.cache_enabled is False

def test_config_overrides_win(mock_env_vars):
    """Test that keyword overrides take precedence over the environment."""
    with patch.dict(os.environ, mock_env_vars, clear=True):
        config = Config(ring="QQ", seed=11, count=3, rmax=2, output_format="svg", cache_enabled=True)

        assert config.ring == Ring.rationals()
        assert config.campaign_seed == 11
        assert config.campaign_count == 3
        assert config.rmax == 2
        assert config.output_format == "svg"
        assert config.cache_enabled is True

def test_config_env_file(tmp_path):
    """Test loading settings from a .env file."""
    env_file = tmp_path / ".env"
    env_file.write_text("DEFAULT_RING=GF(97)\nRMAX=4 # pages\n")
    with patch.dict(os.environ, {}, clear=True):
        config = Config(str(env_file))

        assert config.ring == Ring.prime_field(97)
        assert config.rmax == 4

def test_config_output_format_setter():
    """Test the output_format setter."""
    config = Config()

    # Test with valid format
    config.output_format = "ascii"
    assert config.output_format == "ascii"

    # Test with format containing comment
    config.output_format = "svg # chart"
    assert config.output_format == "svg"

    # Test with empty format
    config.output_format = ""
    assert config.output_format == "txt"

    # Test with None
    config.output_format = None
    assert config.output_format == "txt"

def test_config_to_dict():
    """Test the to_dict method."""
    with patch.dict(os.environ, {}, clear=True):
        config = Config()
        config_dict = config.to_dict()

        assert isinstance(config_dict, dict)
        assert config_dict["ring"] == "ZZ"
        assert config_dict["rmax"] == 3
        assert config_dict["convention"] == "serre-homology-decreasing"
        assert config_dict["output_format"] == "txt"
        assert config_dict["cache_enabled"] is True
        assert config_dict["cache_expiration"] == 7 * 24 * 60 * 60

def test_config_validate():
    """Test the validate method."""
    # Test valid configuration
    with patch.dict(os.environ, {}, clear=True):
        config = Config()
        assert config.validate() is True

    # Test invalid configuration: unknown ring
    with patch.dict(os.environ, {"DEFAULT_RING": "GF4"}, clear=True):
        config = Config()
        assert config.validate() is False

    # Test invalid configuration: unknown convention
    with patch.dict(os.environ, {"CONVENTION": "serre-homology-sideways"}, clear=True):
        config = Config()
        assert config.validate() is False

    # Test invalid configuration: invalid output format
    with patch.dict(os.environ, {"OUTPUT_FORMAT": "pdf"}, clear=True):
        config = Config()
        assert config.validate() is False

    # Test invalid configuration: no pages
    with patch.dict(os.environ, {"RMAX": "0"}, clear=True):
        config = Config()
        assert config.validate() is False
