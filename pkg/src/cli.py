"""
Command-line front door for the quregister chart-embedding library

Subcommands: tables, sweep-xp, check, measure, split, orbit.
Data goes to --out (default stdout); logs and diagnostics go to stderr.
Exit codes: 0 success, 1 property violation, 2 usage or input error.
"""

import argparse
import csv
import logging
import sys
import time
import uuid
from contextlib import contextmanager
from typing import Callable, Dict, Iterator, List, Optional, Sequence, TextIO

import numpy as np
from aws_lambda_powertools import Logger

from config import DEFAULT_LOG_LEVEL, SERVICE_NAME, Settings, load_settings
from exceptions import (
    ConfigurationError,
    InputFormatError,
    NotInChartError,
    NotSeparableError,
    QuregisterError,
    ZeroVectorError
)
from models.check_report import CheckReport
from models.qubit import Qubit
from models.quregister import Quregister2
from models.sweep_row import CSV_HEADER
from services import qubit_group
from services import quregister_charts as charts
from services.linalg_core import as_unit_complex, spectral_norm, unit_normalize
from services.property_suites import SUITE_NAMES, run_suite
from services.sweep import SweepEngine

# Logs never share stdout with data output
logger = Logger(service=SERVICE_NAME, level=DEFAULT_LOG_LEVEL, logger_handler=logging.StreamHandler(sys.stderr))

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2

GAUGE_INPUT_TOL = 1e-9
NORMALIZATION_WARN_TOL = 1e-9


# ANSI colors per status tag; dropped when stderr is not a terminal
STATUS_COLORS = {
    'PASS': '\033[0;32m',
    'NOTE': '\033[0;34m',
    'RESCALED': '\033[1;33m',
    'ERROR': '\033[0;31m'
}
RESET_COLOR = '\033[0m'


def print_status(tag: str, message: str) -> None:
    """One `[TAG] message` line on stderr"""
    label = f"[{tag}]"
    if sys.stderr.isatty():
        label = f"{STATUS_COLORS[tag]}{label}{RESET_COLOR}"
    print(f"{label} {message}", file=sys.stderr)


def print_error(message: str) -> None:
    print_status('ERROR', message)


@contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Yield stdout, or a file opened for writing when a path is given"""
    if path is None:
        yield sys.stdout
        return
    with open(path, 'w', newline='') as handle:
        yield handle


def format_complex(z: complex) -> str:
    """15 significant digits, negative zero shown as zero"""
    return f"{z.real + 0.0:.15g}{z.imag + 0.0:+.15g}i"


def format_matrix(matrix: np.ndarray) -> List[str]:
    cells = [[format_complex(complex(z)) for z in row] for row in matrix]
    width = max(len(cell) for row in cells for cell in row)
    return ['  '.join(cell.rjust(width) for cell in row) for row in cells]


def format_vector(vec: np.ndarray) -> str:
    """re im pairs as repr floats"""
    return ' '.join(f"{z.real!r} {z.imag!r}" for z in map(complex, np.asarray(vec, dtype=np.complex128)))


def parse_gauge(values: Optional[Sequence[float]]) -> complex:
    """
    Gauge phase from --u RE IM, checked to unit modulus within 1e-9 and then rescaled

    Raises:
        NotUnitModulusError: If | |u| - 1 | > 1e-9
    """
    if values is None:
        return 1.0 + 0.0j
    u = as_unit_complex(complex(values[0], values[1]), tol=GAUGE_INPUT_TOL)
    return u / abs(u)


def parse_state(values: Sequence[float], size: int, correlation_id: str) -> np.ndarray:
    """
    Unit vector from re/im interleaved reals

    Raises:
        InputFormatError: If the count is wrong
        ZeroVectorError: If the vector has (near) zero norm
    """
    if len(values) != 2 * size:
        raise InputFormatError(f"Expected {2 * size} reals (re/im interleaved), got {len(values)}")
    raw = np.array([complex(values[2 * i], values[2 * i + 1]) for i in range(size)])
    vec, norm = unit_normalize(raw, size)
    if abs(norm - 1.0) > NORMALIZATION_WARN_TOL:
        logger.warning("Input state normalised", extra={
            "correlation_id": correlation_id,
            "operation": "parse_state",
            "input_norm": norm
        })
        print_status('RESCALED', f"Input norm {norm!r} rescaled to 1")
    return vec


def cmd_tables(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """Print the Phi matrices of the canonical or Bell fixtures"""
    u = parse_gauge(args.u)
    if args.which == 'canonical':
        fixtures = [(f"e{i}", charts.canonical_vector(i)) for i in range(4)]
    else:
        fixtures = [(f"b{i}", charts.bell_vector(i)) for i in range(4)]

    with open_output(args.out) as out:
        out.write(f"u: {format_complex(u)}\n")
        for label, x in fixtures:
            for k in sorted(charts.charts_containing(x)):
                matrix = charts.phi(x, k, u).matrix
                unitary = bool(np.linalg.norm(matrix.conj().T @ matrix - np.eye(4)) < 1e-10)
                out.write(f"\nPhi_2{k}u({label}) chart={k} unitary={'yes' if unitary else 'no'} "
                          f"spectral_norm={spectral_norm(matrix):.15g}\n")
                for line in format_matrix(matrix):
                    out.write(line + '\n')
    return EXIT_OK


def cmd_sweep_xp(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """CSV of p, nu, ||Phi||_2 - 1 and entropy over the x_p family"""
    if args.steps < 2:
        raise InputFormatError(f"--steps must be at least 2, got {args.steps}")
    rows = SweepEngine(workers=args.workers, correlation_id=correlation_id).run(args.steps)
    with open_output(args.out) as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow(row.as_csv_fields())
    if args.out:
        print_status('NOTE', f"Wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def write_check_report(report: CheckReport, tol_override: Optional[float], out: TextIO) -> None:
    out.write(f"suite: {report.suite}\n")
    out.write(f"samples: {report.samples}\n")
    out.write(f"seed: {report.seed}\n")
    out.write(f"rng: {report.rng_algorithm}\n")
    out.write(f"tol_override: {'none' if tol_override is None else repr(tol_override)}\n")
    out.write(f"properties_checked: {report.properties_checked}\n")
    out.write(f"violations: {report.total_violations}\n")
    out.write(f"findings: {len(report.findings)}\n")
    for name in sorted(report.max_deviation):
        out.write(f"max_deviation.{name}: {report.max_deviation[name]!r}\n")
    for violation in report.violations:
        out.write(f"violation: property={violation.property} deviation={violation.deviation!r} "
                  f"bound={violation.bound!r} input={violation.input}\n")
    for name in sorted(report.violation_counts):
        out.write(f"violation_count.{name}: {report.violation_counts[name]}\n")
    for finding in report.findings:
        out.write(f"finding: property={finding.property} deviation={finding.deviation!r} "
                  f"note={finding.note} input={finding.input}\n")
    out.write(f"status: {'FAIL' if report.has_violations else 'PASS'}\n")


def cmd_check(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """Run property suites; exit 1 on any violation"""
    samples = settings.samples if args.samples is None else args.samples
    if samples < 1:
        raise InputFormatError(f"--samples must be at least 1, got {samples}")
    tol_override = settings.tol if args.tol is None else args.tol
    if tol_override is not None and not tol_override > 0:
        raise InputFormatError("--tol must be positive")

    report = run_suite(args.suite, samples, args.seed, tol_override, correlation_id)
    with open_output(args.out) as out:
        write_check_report(report, tol_override, out)

    if report.has_violations:
        print_error(f"{report.total_violations} property violation(s) in suite '{report.suite}'")
        return EXIT_VIOLATION
    print_status('PASS', f"Suite '{report.suite}' passed ({report.properties_checked} properties, "
                  f"{len(report.findings)} finding(s))")
    return EXIT_OK


def cmd_measure(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """Entanglement report for one state"""
    x = Quregister2(parse_state(args.state, 4, correlation_id))
    result = charts.report(x)
    with open_output(args.out) as out:
        out.write(f"state: {format_vector(x.vec)}\n")
        for key, value in result.to_dict().items():
            out.write(f"{key}: {value!r}\n")
    return EXIT_OK


def cmd_split(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """Tensor split of a separable state"""
    x = Quregister2(parse_state(args.state, 4, correlation_id))
    u = parse_gauge(args.u)
    split = charts.tensor_split(x, args.chart, u)
    with open_output(args.out) as out:
        out.write(f"state: {format_vector(x.vec)}\n")
        out.write(f"chart: {split.chart}\n")
        out.write(f"gauge: {format_vector([split.gauge])}\n")
        out.write(f"radius: {split.radius!r}\n")
        out.write(f"c0: {format_vector(split.c0.vec)}\n")
        out.write(f"c1: {format_vector(split.c1.vec)}\n")
        out.write(f"t_abs: {abs(x.t)!r}\n")
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace, settings: Settings, correlation_id: str) -> int:
    """CSV of the star powers x^1 .. x^count"""
    if args.count < 1:
        raise InputFormatError(f"--count must be at least 1, got {args.count}")
    x = Qubit(parse_state(args.qubit, 2, correlation_id))
    points = qubit_group.orbit_points(x, args.count)
    with open_output(args.out) as out:
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow(('n', 're0', 'im0', 're1', 'im1'))
        for n, (z0, z1) in enumerate(points.tolist(), start=1):
            writer.writerow((n, repr(z0.real), repr(z0.imag), repr(z1.real), repr(z1.imag)))
    if args.out:
        print_status('NOTE', f"Wrote {args.count} orbit points to {args.out}")
    return EXIT_OK


HANDLERS: Dict[str, Callable[[argparse.Namespace, Settings, str], int]] = {
    'tables': cmd_tables,
    'sweep-xp': cmd_sweep_xp,
    'check': cmd_check,
    'measure': cmd_measure,
    'split': cmd_split,
    'orbit': cmd_orbit
}


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=settings.seed, help='RNG seed (default: QUREG_SEED or 42)')
    common.add_argument('--tol', type=float, default=None, help='tolerance override for upper-bounded properties')
    common.add_argument('--out', default=None, help='output path (default: stdout)')
    common.add_argument('--u', type=float, nargs=2, metavar=('RE', 'IM'), default=None,
                        help='gauge phase, unit modulus within 1e-9 (default: 1)')

    parser = argparse.ArgumentParser(prog='qureg', description='Quregister chart embeddings and entanglement measures')
    sub = parser.add_subparsers(dest='command', required=True)

    tables = sub.add_parser('tables', parents=[common], help='print Phi matrices of the fixture states')
    tables.add_argument('which', choices=('canonical', 'bell'))

    sweep = sub.add_parser('sweep-xp', parents=[common], help='CSV sweep over the x_p family')
    sweep.add_argument('--steps', type=int, default=101)
    sweep.add_argument('--workers', type=int, default=1)

    check = sub.add_parser('check', parents=[common], help='run seeded property suites')
    check.add_argument('suite', choices=SUITE_NAMES)
    check.add_argument('--samples', type=int, default=None, help='default: QUREG_SAMPLES or 1000')

    measure = sub.add_parser('measure', parents=[common], help='entanglement report for a state')
    measure.add_argument('state', type=float, nargs=8, metavar='X', help='re/im interleaved entries')

    split = sub.add_parser('split', parents=[common], help='tensor split of a separable state')
    split.add_argument('state', type=float, nargs=8, metavar='X', help='re/im interleaved entries')
    split.add_argument('--chart', type=int, choices=range(4), default=None)

    orbit = sub.add_parser('orbit', parents=[common], help='CSV of star powers of a qubit')
    orbit.add_argument('qubit', type=float, nargs=4, metavar='X', help='re/im interleaved entries')
    orbit.add_argument('--count', type=int, default=100)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and map failures to exit codes

    Returns:
        int: 0 success, 1 property violation, 2 usage or input error
    """
    execution_start_time = time.time()
    correlation_id = str(uuid.uuid4())

    try:
        settings = load_settings()
    except ConfigurationError as e:
        print_error(f"Configuration error: {e}")
        return EXIT_INPUT_ERROR
    logger.setLevel(settings.log_level)

    try:
        args = build_parser(settings).parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INPUT_ERROR

    logger.info("Starting command", extra={
        "correlation_id": correlation_id,
        "operation": args.command,
        "seed": args.seed
    })

    try:
        if args.seed < 0:
            raise InputFormatError(f"--seed must be a non-negative integer, got {args.seed}")
        exit_code = HANDLERS[args.command](args, settings, correlation_id)
        logger.info("Command completed", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "exit_code": exit_code,
            "execution_time_seconds": round(time.time() - execution_start_time, 3)
        })
        return exit_code

    except (NotSeparableError, NotInChartError) as e:
        logger.warning("State outside the operation's domain", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "error_type": type(e).__name__,
            "error_message": str(e)
        })
        print_error(str(e))
        return EXIT_INPUT_ERROR

    except ZeroVectorError as e:
        logger.warning("Zero input vector", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "error_type": "ZeroVectorError",
            "error_message": str(e)
        })
        print_error(str(e))
        return EXIT_INPUT_ERROR

    except OSError as e:
        logger.error("Output error", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "error_type": type(e).__name__,
            "error_message": str(e)
        })
        print_error(f"Cannot write output: {e}")
        return EXIT_INPUT_ERROR

    except QuregisterError as e:
        logger.error("Invalid input", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "error_type": type(e).__name__,
            "error_message": str(e)
        })
        print_error(str(e))
        return EXIT_INPUT_ERROR

    except Exception as e:
        logger.error("Unexpected error", extra={
            "correlation_id": correlation_id,
            "operation": args.command,
            "error_type": type(e).__name__,
            "error_message": str(e)
        }, exc_info=True)
        print_error(f"Unexpected error: {e}")
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
