"""
Environment-driven settings for the qureg command line
"""

import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from exceptions import ConfigurationError


SERVICE_NAME = os.environ.get('POWERTOOLS_SERVICE_NAME', 'qureg')

DEFAULT_SEED = 42
DEFAULT_SAMPLES = 1000
DEFAULT_LOG_LEVEL = 'WARNING'

# Generator used for every seeded sample; named in check report headers
RNG_ALGORITHM = 'numpy.PCG64'


@dataclass(frozen=True)
class Settings:
    """
    Resolved configuration for one CLI invocation
    """
    log_level: str = DEFAULT_LOG_LEVEL
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    tol: Optional[float] = None


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Build settings from environment variables

    Args:
        environ: Mapping to read from (defaults to os.environ)

    Returns:
        Settings: Validated configuration

    Raises:
        ConfigurationError: If any variable holds an invalid value
    """
    env = os.environ if environ is None else environ

    log_level = env.get('LOG_LEVEL', DEFAULT_LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(log_level), int):
        raise ConfigurationError(f"LOG_LEVEL '{log_level}' is not a logging level name")

    seed = _parse_int(env, 'QUREG_SEED', DEFAULT_SEED)
    if seed < 0:
        raise ConfigurationError("QUREG_SEED must be a non-negative integer")

    samples = _parse_int(env, 'QUREG_SAMPLES', DEFAULT_SAMPLES)
    if samples < 1:
        raise ConfigurationError("QUREG_SAMPLES must be at least 1")

    tol = None
    tol_str = env.get('QUREG_TOL')
    if tol_str:
        try:
            tol = float(tol_str)
        except ValueError as e:
            raise ConfigurationError(f"QUREG_TOL '{tol_str}' is not a number") from e
        if not tol > 0:
            raise ConfigurationError("QUREG_TOL must be positive")

    return Settings(
        log_level=log_level,
        seed=seed,
        samples=samples,
        tol=tol
    )


def _parse_int(env: Mapping[str, str], name: str, default: int) -> int:
    value = env.get(name)
    if value is None or value == '':
        return default
    try:
        return int(value)
    except ValueError as e:
        raise ConfigurationError(f"{name} '{value}' is not an integer") from e
