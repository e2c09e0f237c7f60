"""
Tests for the qureg command line
"""

import csv
import io
import math

import pytest

import cli


@pytest.fixture(autouse=True)
def _environment(clean_env):
    return clean_env


def _fields(output, key):
    for line in output.splitlines():
        if line.startswith(f"{key}: "):
            return line[len(key) + 2:]
    raise AssertionError(f"{key} missing from output")


def _floats(text):
    return [float(value) for value in text.split()]


class TestMeasure:

    def test_basis_state(self, capsys):
        assert cli.main(['measure', '1', '0', '0', '0', '0', '0', '0', '0']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert float(_fields(out, 'nu')) == 0.0
        assert _fields(out, 'separable') == 'True'
        assert _fields(out, 'chart') == '0'

    def test_bell_state(self, capsys):
        half = repr(math.sqrt(0.5))
        assert cli.main(['measure', half, '0', '0', '0', '0', '0', half, '0']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert float(_fields(out, 'nu')) == pytest.approx(math.sqrt(2.0) - 1.0, abs=1e-12)
        assert float(_fields(out, 'entropy')) == pytest.approx(1.0, abs=1e-12)
        assert _fields(out, 'separable') == 'False'

    def test_unnormalised_input_is_rescaled(self, capsys):
        assert cli.main(['measure', '2', '0', '0', '0', '0', '0', '0', '0']) == cli.EXIT_OK
        captured = capsys.readouterr()
        assert _floats(_fields(captured.out, 'state'))[0] == 1.0
        assert 'rescaled' in captured.err

    def test_status_lines_are_plain_off_terminal(self, capsys):
        cli.main(['measure', '2', '0', '0', '0', '0', '0', '0', '0'])
        err = capsys.readouterr().err
        assert '[RESCALED] Input norm 2.0 rescaled to 1' in err
        assert '\033[' not in err

    def test_zero_vector(self, capsys):
        assert cli.main(['measure'] + ['0'] * 8) == cli.EXIT_INPUT_ERROR

    def test_wrong_arity(self, capsys):
        assert cli.main(['measure', '1', '0']) == cli.EXIT_INPUT_ERROR


class TestSplit:

    def test_split_of_e2(self, capsys):
        assert cli.main(['split', '0', '0', '0', '0', '1', '0', '0', '0']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert _fields(out, 'chart') == '2'
        assert _floats(_fields(out, 'c0')) == [0.0, 0.0, 1.0, 0.0]
        assert _floats(_fields(out, 'c1')) == [1.0, 0.0, 0.0, 0.0]

    def test_split_with_gauge(self, capsys):
        assert cli.main(['split', '1', '0', '0', '0', '0', '0', '0', '0', '--u', '0', '1']) == cli.EXIT_OK
        out = capsys.readouterr().out
        c0 = _floats(_fields(out, 'c0'))
        c1 = _floats(_fields(out, 'c1'))
        # u^-1 = -i on the left factor, u = i on the right
        assert c0[:2] == pytest.approx([0.0, -1.0])
        assert c1[:2] == pytest.approx([0.0, 1.0])

    def test_entangled_state_is_rejected(self, capsys):
        half = repr(math.sqrt(0.5))
        assert cli.main(['split', half, '0', '0', '0', '0', '0', half, '0']) == cli.EXIT_INPUT_ERROR
        assert 'entangled' in capsys.readouterr().err

    def test_state_outside_requested_chart(self, capsys):
        args = ['split', '0', '0', '0', '0', '1', '0', '0', '0', '--chart', '1']
        assert cli.main(args) == cli.EXIT_INPUT_ERROR


class TestTables:

    def test_canonical_tables_are_unitary(self, capsys):
        assert cli.main(['tables', 'canonical']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith('u: 1+0i')
        assert out.count('unitary=yes') == 4

    def test_bell_tables_with_gauge(self, capsys):
        assert cli.main(['tables', 'bell', '--u', '0', '1']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith('u: 0+1i')
        assert 'unitary=no' in out
        assert 'spectral_norm=1.41421356237' in out

    def test_gauge_off_unit_circle(self, capsys):
        assert cli.main(['tables', 'canonical', '--u', '2', '0']) == cli.EXIT_INPUT_ERROR


class TestSweep:

    def test_three_steps(self, capsys):
        assert cli.main(['sweep-xp', '--steps', '3']) == cli.EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ['p', 'nu', 'spectral_norm_minus_1', 'entropy']
        assert [float(row[0]) for row in rows[1:]] == [0.0, 0.5, 1.0]
        assert float(rows[2][3]) == pytest.approx(1.0, abs=1e-12)

    def test_writes_file(self, tmp_path, capsys):
        target = tmp_path / 'sweep.csv'
        assert cli.main(['sweep-xp', '--steps', '4', '--workers', '2', '--out', str(target)]) == cli.EXIT_OK
        assert len(target.read_text().splitlines()) == 5
        assert capsys.readouterr().out == ''

    def test_rejects_single_step(self, capsys):
        assert cli.main(['sweep-xp', '--steps', '1']) == cli.EXIT_INPUT_ERROR


class TestCheck:

    def test_passing_suite(self, capsys):
        assert cli.main(['check', 'density', '--samples', '3', '--seed', '42']) == cli.EXIT_OK
        out = capsys.readouterr().out
        assert _fields(out, 'rng') == 'numpy.PCG64'
        assert _fields(out, 'seed') == '42'
        assert out.rstrip().endswith('status: PASS')

    def test_tiny_tolerance_fails(self, capsys):
        args = ['check', 'density', '--samples', '2', '--tol', '1e-20']
        assert cli.main(args) == cli.EXIT_VIOLATION
        out = capsys.readouterr().out
        assert 'violation: property=' in out
        assert out.rstrip().endswith('status: FAIL')

    def test_report_is_deterministic(self, capsys):
        cli.main(['check', 'qubit-group', '--samples', '3', '--seed', '5'])
        first = capsys.readouterr().out
        cli.main(['check', 'qubit-group', '--samples', '3', '--seed', '5'])
        assert capsys.readouterr().out == first

    def test_samples_from_environment(self, capsys, clean_env):
        clean_env.setenv('QUREG_SAMPLES', '2')
        assert cli.main(['check', 'density']) == cli.EXIT_OK
        assert _fields(capsys.readouterr().out, 'samples') == '2'

    def test_invalid_environment(self, capsys, clean_env):
        clean_env.setenv('QUREG_SAMPLES', 'many')
        assert cli.main(['check', 'density']) == cli.EXIT_INPUT_ERROR

    def test_unknown_suite(self, capsys):
        assert cli.main(['check', 'nonsense']) == cli.EXIT_INPUT_ERROR

    def test_negative_seed_is_rejected(self, mocker, capsys):
        runner = mocker.patch.object(cli, 'run_suite', wraps=cli.run_suite)
        assert cli.main(['check', 'density', '--samples', '1', '--seed', '-1']) == cli.EXIT_INPUT_ERROR
        err = capsys.readouterr().err
        assert '--seed must be a non-negative integer' in err
        assert 'Unexpected error' not in err
        runner.assert_not_called()


class TestOrbit:

    def test_powers_of_i(self, capsys):
        assert cli.main(['orbit', '0', '0', '0', '1', '--count', '4']) == cli.EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ['n', 're0', 'im0', 're1', 'im1']
        assert len(rows) == 5
        # (0, i) squares to -e0 and has order 4
        assert float(rows[2][1]) == pytest.approx(-1.0)
        assert float(rows[4][1]) == pytest.approx(1.0)

    def test_rejects_zero_count(self, capsys):
        assert cli.main(['orbit', '1', '0', '0', '0', '--count', '0']) == cli.EXIT_INPUT_ERROR


class TestUsage:

    def test_missing_command(self, capsys):
        assert cli.main([]) == cli.EXIT_INPUT_ERROR

    def test_help(self, capsys):
        assert cli.main(['--help']) == cli.EXIT_OK
        assert 'sweep-xp' in capsys.readouterr().out


class TestFailures:

    def test_output_path_is_a_directory(self, tmp_path, capsys):
        assert cli.main(['sweep-xp', '--steps', '2', '--out', str(tmp_path)]) == cli.EXIT_INPUT_ERROR
        assert 'Cannot write output' in capsys.readouterr().err

    def test_unexpected_error_maps_to_input_error(self, mocker, capsys):
        mocker.patch.object(cli, 'run_suite', side_effect=RuntimeError('boom'))
        assert cli.main(['check', 'density', '--samples', '1']) == cli.EXIT_INPUT_ERROR
        assert 'boom' in capsys.readouterr().err

    def test_seed_reaches_suite_runner(self, mocker, capsys):
        runner = mocker.patch.object(cli, 'run_suite', wraps=cli.run_suite)
        cli.main(['check', 'density', '--samples', '1', '--seed', '11'])
        assert runner.call_args.args[:3] == ('density', 1, 11)
