"""
Ortak fixture'lar ve --runslow secenegi
"""
import sys
from pathlib import Path

import numpy as np
import pytest

# Projeyi path'e ekle
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

FIXTURES = Path(__file__).parent / "fixtures"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="tam olcekli kontrolleri calistir")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="--runslow ile calisir")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def published_power_path():
    return FIXTURES / "published_power_alpha005.csv"


@pytest.fixture
def laplace_samples(rng):
    """n = 20 ve n = 49 icin Laplace orneklemleri (tek ve cift n)"""
    return [rng.laplace(size=n) for n in (20, 49) for _ in range(5)]
