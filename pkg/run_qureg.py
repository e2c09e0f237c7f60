#!/usr/bin/env python3
"""
Local entry point for the qureg command-line tool

Usage:
    python run_qureg.py tables
    python run_qureg.py sweep-xp --steps 101 --out sweep.csv
    python run_qureg.py check all --samples 1000 --seed 42
    python run_qureg.py measure 0.7071 0 0 0 0 0 0.7071 0

Environment Variables:
    # Logging (optional, diagnostics go to stderr)
    LOG_LEVEL=DEBUG

    # Defaults for check (optional)
    QUREG_SEED=42
    QUREG_SAMPLES=1000
    QUREG_TOL=1e-9
"""

import os
import sys

# Add src directory to Python path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

os.environ.setdefault('POWERTOOLS_SERVICE_NAME', 'qureg')
os.environ.setdefault('LOG_LEVEL', 'WARNING')

from cli import main  # noqa: E402


if __name__ == '__main__':
    sys.exit(main())
