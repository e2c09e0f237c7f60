"""
Shared fixtures for the qureg test suite
"""

import os
import sys

import pytest

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'src'))

from services.sampling import make_rng  # noqa: E402


@pytest.fixture
def rng():
    """Seeded generator so every test sees the same sample"""
    return make_rng(20240601)


@pytest.fixture
def clean_env(monkeypatch):
    """Remove qureg settings inherited from the shell"""
    for name in ('LOG_LEVEL', 'QUREG_SEED', 'QUREG_SAMPLES', 'QUREG_TOL'):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch
