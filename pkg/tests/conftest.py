"""
Pytest configuration and fixtures for testing the spectral sequence engine.
"""

import os
import sys
import pytest
from pathlib import Path
from unittest.mock import patch

# Add the parent directory to the path so we can import the src package
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.ahss import real_projective_plane, integers_in_degree
from src.campaign import toy_d2
from src.complexes import ChainComplex
from src.config import Config
from src.linalg import ExactMatrix, Ring
from src.multiplicative import koszul_dga

FIXTURES_DIR = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    """Directory of the JSON fixtures."""
    return FIXTURES_DIR


@pytest.fixture
def ZZ():
    return Ring.integers()


@pytest.fixture
def QQ():
    return Ring.rationals()


@pytest.fixture
def GF2():
    return Ring.prime_field(2)


@pytest.fixture(params=["ZZ", "QQ", "GF2", "GF97"])
def any_ring(request):
    """Every coefficient ring the engine supports."""
    return Ring.parse(request.param)


@pytest.fixture
def toy(ZZ):
    """M_1 = <a>, M_0 = <b>, d a = b with a in weight 0 and b in weight 2."""
    return toy_d2(ZZ)


@pytest.fixture
def koszul(ZZ):
    return koszul_dga(2, ZZ)


@pytest.fixture
def rp2_with_integers(ZZ):
    return real_projective_plane(), integers_in_degree(0, ZZ)


@pytest.fixture
def two_torsion_complex(ZZ):
    """Z --2--> Z in degrees 1, 0: homology Z/2 in degree 0."""
    return ChainComplex(ZZ, {0: 1, 1: 1}, {1: ExactMatrix(ZZ, [[2]], (1, 1))})


@pytest.fixture
def test_config(tmp_path):
    """A configuration isolated from the environment, writing into tmp_path."""
    with patch.dict(os.environ, {}, clear=True):
        config = Config(
            output_dir=str(tmp_path / "output"),
            counterexample_dir=str(tmp_path / "counterexamples"),
            threads=1,
        )
    config.cache_expiration = 3600
    return config


@pytest.fixture
def cache_dir(tmp_path):
    path = tmp_path / "cache"
    path.mkdir()
    return str(path)
