"""
Tests for environment-driven settings
"""

import pytest

from config import DEFAULT_LOG_LEVEL, DEFAULT_SAMPLES, DEFAULT_SEED, load_settings
from exceptions import ConfigurationError


def test_defaults_from_empty_environment():
    settings = load_settings({})
    assert settings.seed == DEFAULT_SEED
    assert settings.samples == DEFAULT_SAMPLES
    assert settings.log_level == DEFAULT_LOG_LEVEL
    assert settings.tol is None


def test_reads_overrides():
    settings = load_settings({
        'LOG_LEVEL': 'debug',
        'QUREG_SEED': '7',
        'QUREG_SAMPLES': '25',
        'QUREG_TOL': '1e-6'
    })
    assert settings.log_level == 'DEBUG'
    assert settings.seed == 7
    assert settings.samples == 25
    assert settings.tol == 1e-6


@pytest.mark.parametrize('environ', [
    {'QUREG_SEED': 'abc'},
    {'QUREG_SEED': '-1'},
    {'QUREG_SAMPLES': '0'},
    {'QUREG_TOL': 'tiny'},
    {'QUREG_TOL': '-1e-9'},
    {'LOG_LEVEL': 'LOUD'},
])
def test_rejects_invalid_values(environ):
    with pytest.raises(ConfigurationError):
        load_settings(environ)


def test_service_name_is_not_a_per_run_setting():
    # loggers take the service name from config.SERVICE_NAME at import
    assert load_settings({'POWERTOOLS_SERVICE_NAME': 'other'}) == load_settings({})
