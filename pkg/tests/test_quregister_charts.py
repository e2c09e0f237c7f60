"""
Tests for the chart embeddings, tensor splits and the entanglement measure
"""

import cmath
import math

import numpy as np
import pytest

from exceptions import (
    BellSingularityError,
    IndexOutOfRangeError,
    NotInChartError,
    NotSeparableError,
    NotUnitModulusError
)
from models.quregister import Quregister2
from services import quregister_charts as charts
from services.linalg_core import kron_vec, spectral_norm
from services.sampling import (
    random_matrix2,
    random_phase_aligned_quregister,
    random_product_state,
    random_quregister,
    random_real_quregister
)

GAUGES = (1.0, 1j, cmath.exp(1j * math.pi / 7))
SQRT2 = math.sqrt(2.0)


class TestInvariants:

    def test_t_of_bell_states(self):
        for i in range(4):
            assert abs(charts.bell_vector(i).t) == pytest.approx(0.5, abs=1e-12)

    def test_t_bounded_by_half(self, rng):
        for _ in range(200):
            assert abs(random_quregister(rng).t) <= 0.5 + 1e-12

    def test_t_of_raw_vector(self):
        assert charts.t_invariant([1.0, 2.0, 3.0, 4.0]) == -2.0

    def test_s_invariant_of_product_state(self, rng):
        x, _, _ = random_product_state(rng)
        assert charts.s_invariant(x) == pytest.approx(1.0, abs=1e-12)
        assert charts.is_separable(x, 1e-10)

    def test_is_separable_rejects_bad_tol(self):
        with pytest.raises(ValueError):
            charts.is_separable(charts.canonical_vector(0), 0.0)

    def test_real_states_are_phase_aligned(self, rng):
        assert charts.is_phase_aligned(random_real_quregister(rng))
        assert charts.is_phase_aligned(random_phase_aligned_quregister(rng), tol=1e-12)


class TestCharts:

    def test_charts_of_bell_state(self):
        assert charts.charts_containing(charts.bell_vector(0)) == frozenset({0, 3})
        assert charts.charts_containing(charts.bell_vector(2)) == frozenset({1, 2})

    def test_canonical_chart_prefers_smaller_index_on_ties(self):
        assert charts.canonical_chart(charts.bell_vector(0)) == 0
        assert charts.canonical_chart(charts.bell_vector(3)) == 1

    def test_canonical_chart_picks_largest_entry(self):
        x = Quregister2.from_vector([0.1, 0.2, 0.9, 0.3], normalize=True)
        assert charts.canonical_chart(x) == 2

    def test_validate_chart(self):
        assert charts.validate_chart(3) == 3
        with pytest.raises(IndexOutOfRangeError):
            charts.validate_chart(4)
        with pytest.raises(IndexOutOfRangeError):
            charts.validate_chart(True)


class TestTensorSplit:

    def test_split_of_e2(self):
        split = charts.tensor_split(charts.canonical_vector(2))
        assert split.chart == 2
        assert np.allclose(split.c0.vec, [0.0, 1.0])
        assert np.allclose(split.c1.vec, [1.0, 0.0])

    def test_split_reproduces_state_in_every_chart(self, rng):
        x, _, _ = random_product_state(rng)
        for k in sorted(charts.charts_containing(x)):
            for u in GAUGES:
                split = charts.tensor_split(x, k, u)
                assert np.allclose(kron_vec(split.c0.vec, split.c1.vec), x.vec, atol=1e-10)
                assert split.product().distance(x) < 1e-10

    def test_split_rejects_entangled_state(self):
        with pytest.raises(NotSeparableError):
            charts.tensor_split(charts.bell_vector(0))

    def test_split_rejects_missing_chart(self):
        with pytest.raises(NotInChartError):
            charts.tensor_split(charts.canonical_vector(0), 1)

    def test_split_rejects_off_circle_gauge(self):
        with pytest.raises(NotUnitModulusError):
            charts.tensor_split(charts.canonical_vector(0), 0, 2.0)


class TestPhi:

    def test_e0_embeds_as_identity(self):
        assert np.allclose(charts.phi(charts.canonical_vector(0), 0).matrix, np.eye(4))

    def test_column0_is_the_state(self, rng):
        x = random_quregister(rng)
        for k in range(4):
            embedding = charts.phi(x, k, 1j)
            assert np.array_equal(embedding.anchor, x.vec)
            assert embedding.chart == k

    def test_columns_are_unit(self, rng):
        x = random_quregister(rng)
        for k in range(4):
            assert charts.frobenius_bound(x, k) == pytest.approx(2.0, abs=1e-12)
            assert np.allclose(np.linalg.norm(charts.phi(x, k).matrix, axis=0), 1.0, atol=1e-12)

    def test_matrix_is_read_only(self):
        matrix = charts.phi(charts.canonical_vector(0), 0).matrix
        with pytest.raises(ValueError):
            matrix[0, 0] = 2.0

    def test_rejects_state_outside_chart(self):
        with pytest.raises(NotInChartError):
            charts.phi(charts.canonical_vector(0), 3)

    def test_separable_state_is_special_unitary(self, rng):
        x, _, _ = random_product_state(rng)
        for k in sorted(charts.charts_containing(x)):
            for u in GAUGES:
                matrix = charts.phi(x, k, u).matrix
                assert np.allclose(matrix.conj().T @ matrix, np.eye(4), atol=1e-10)
                assert np.linalg.det(matrix) == pytest.approx(1.0, abs=1e-10)

    def test_product_coincides_with_psi1_tensor(self, rng):
        x, c0, c1 = random_product_state(rng)
        for k in range(4):
            gauge = charts.coincidence_gauge(c1, k)
            assert np.allclose(charts.phi(x, k, gauge).matrix, charts.psi1_product(c0, c1), atol=1e-12)

    @pytest.mark.parametrize('i', range(4))
    def test_bell_states(self, i):
        bell = charts.bell_vector(i)
        for k in sorted(charts.charts_containing(bell)):
            matrix = charts.phi(bell, k).matrix
            gram = charts.gram_matrix(bell, k)
            assert np.allclose(np.linalg.eigvalsh(gram), [0.0, 0.0, 2.0, 2.0], atol=1e-12)
            assert spectral_norm(matrix) == pytest.approx(SQRT2, abs=1e-12)

    def test_gram_corner_is_twice_conj_t(self, rng):
        x = random_real_quregister(rng)
        gram = charts.gram_matrix(x, charts.canonical_chart(x))
        assert gram[0, 3] == pytest.approx(2.0 * x.t.conjugate(), abs=1e-12)


class TestXpFamily:

    @pytest.mark.parametrize('p', [0.0, 0.1, 0.25, 0.5, 0.9, 1.0])
    def test_spectral_norm(self, p):
        x = charts.x_p_family(p)
        k = 0 if p > 0 else 3
        expected = math.sqrt(1.0 + 2.0 * math.sqrt(p * (1.0 - p)))
        for u in GAUGES:
            assert spectral_norm(charts.phi(x, k, u).matrix) == pytest.approx(expected, abs=1e-10)

    def test_embedding_decomposes_over_basis_states(self):
        p = 0.3
        x = charts.x_p_family(p)
        combined = (math.sqrt(p) * charts.phi(charts.canonical_vector(0), 0).matrix
                    + math.sqrt(1.0 - p) * charts.phi(charts.canonical_vector(3), 3).matrix)
        assert np.allclose(charts.phi(x, 0).matrix, combined, atol=1e-12)

    def test_rejects_p_outside_unit_interval(self):
        with pytest.raises(IndexOutOfRangeError):
            charts.x_p_family(1.5)


class TestEntanglementMeasure:

    def test_closed_form_extremes(self):
        assert charts.nu_closed_form(charts.canonical_vector(1)) == 0.0
        assert charts.nu_closed_form(charts.bell_vector(0)) == pytest.approx(charts.NU_MAX, abs=1e-12)

    def test_spectral_equals_closed_form_on_real_states(self, rng):
        for _ in range(20):
            x = random_real_quregister(rng)
            assert charts.nu_spectral(x) == pytest.approx(charts.nu_closed_form(x), abs=1e-9)

    def test_closed_form_on_phase_aligned_states(self, rng):
        for _ in range(20):
            x = random_phase_aligned_quregister(rng)
            assert charts.nu(x, 0) == pytest.approx(charts.nu_closed_form(x), abs=1e-9)

    def test_closed_form_is_lower_bound(self, rng):
        for _ in range(20):
            x = random_quregister(rng)
            assert charts.nu_spectral(x) >= charts.nu_closed_form(x) - 1e-10
            assert spectral_norm(charts.phi(x, charts.canonical_chart(x)).matrix) <= 2.0 + 1e-12

    def test_gauge_independence(self, rng):
        x = random_quregister(rng)
        k = charts.canonical_chart(x)
        values = [charts.nu(x, k, u) for u in GAUGES]
        assert max(values) - min(values) < 1e-10

    def test_chart_independence_on_real_states(self, rng):
        x = random_real_quregister(rng)
        values = [charts.nu(x, k) for k in sorted(charts.charts_containing(x))]
        assert max(values) - min(values) < 1e-10

    def test_sqrt2_bound_on_real_states(self, rng):
        x = random_real_quregister(rng)
        assert spectral_norm(charts.phi(x, charts.canonical_chart(x)).matrix) <= SQRT2 + 1e-10


class TestZMatrix:

    def test_spectrum_on_real_states(self, rng):
        checked = 0
        while checked < 10:
            x = random_real_quregister(rng)
            t_abs = abs(x.t)
            if t_abs >= 0.45:
                continue
            expected = (1.0 - 2.0 * t_abs, 1.0, 1.0, 1.0 + 2.0 * t_abs)
            for k in sorted(charts.charts_containing(x)):
                for u in GAUGES:
                    _, spectrum = charts.z_matrix(x, k, u)
                    assert spectrum == pytest.approx(expected, abs=1e-8)
            checked += 1

    def test_spectrum_on_phase_aligned_states(self, rng):
        checked = 0
        while checked < 10:
            x = random_phase_aligned_quregister(rng)
            t_abs = abs(x.t)
            if t_abs >= 0.45:
                continue
            expected = (1.0 - 2.0 * t_abs, 1.0, 1.0, 1.0 + 2.0 * t_abs)
            for u in GAUGES:
                _, spectrum = charts.z_matrix(x, 0, u)
                assert spectrum == pytest.approx(expected, abs=1e-8)
            checked += 1

    @pytest.mark.parametrize('u', GAUGES)
    def test_x_p_at_nine_tenths(self, u):
        _, spectrum = charts.z_matrix(charts.x_p_family(0.9), 0, u)
        assert spectrum == pytest.approx((0.4, 1.0, 1.0, 1.6), abs=1e-12)

    def test_correction_matrix(self):
        c = charts.correction_matrix(0.25j)
        assert c[0, 3] == -0.5j
        assert c[3, 0] == 0.5j
        assert c[1, 1] == 1.0

    def test_bell_state_is_singular(self):
        with pytest.raises(BellSingularityError):
            charts.z_matrix(charts.bell_vector(0), 0)


class TestLocalTransform:

    def test_det_scaling(self, rng):
        x = random_quregister(rng)
        a = random_matrix2(rng)
        det_a = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        for side in ('left', 'right'):
            moved = charts.local_transform(x, a, side)
            assert charts.t_invariant(moved) == pytest.approx(det_a * x.t, abs=1e-12)

    def test_rejects_unknown_side(self, rng):
        with pytest.raises(ValueError):
            charts.local_transform(random_quregister(rng), np.eye(2), 'middle')


class TestFixturesAndReport:

    def test_bell_index_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            charts.bell_vector(4)
        with pytest.raises(IndexOutOfRangeError):
            charts.canonical_vector(-1)

    def test_report_of_basis_state(self):
        result = charts.report(charts.canonical_vector(0))
        assert result.nu == 0.0
        assert result.separable
        assert result.chart == 0
        assert result.entropy == 0.0
        assert result.lambda1 == 1.0
        assert result.nu_spectral == pytest.approx(0.0, abs=1e-15)

    def test_report_of_bell_state(self):
        result = charts.report(charts.bell_vector(1))
        assert not result.separable
        assert result.t_abs == pytest.approx(0.5)
        assert result.nu_scaled == pytest.approx(2.0, abs=1e-10)
        assert result.entropy == pytest.approx(1.0, abs=1e-10)
        assert result.nu_spectral == pytest.approx(charts.NU_MAX, abs=1e-10)
        assert set(result.to_dict()) >= {'nu', 'nu_scaled', 't_abs', 's', 'lambda0', 'lambda1', 'entropy'}


class TestWorkedExamples:

    def test_e0_with_gauge(self):
        u = cmath.exp(0.4j)
        expected = np.diag([1.0, u.conjugate() ** 2, u ** 2, 1.0])
        assert np.allclose(charts.phi(charts.canonical_vector(0), 0, u).matrix, expected)

    def test_bell_embedding_with_gauge(self):
        u = cmath.exp(0.4j)
        um, up = u.conjugate() ** 2, u ** 2
        expected = math.sqrt(0.5) * np.array([
            [1, 0, 0, 1],
            [0, um, -up, 0],
            [0, -um, up, 0],
            [1, 0, 0, 1]
        ])
        assert np.allclose(charts.phi(charts.bell_vector(0), 0, u).matrix, expected)

    def test_uniform_state_lies_in_every_chart(self):
        x = Quregister2.from_vector([0.5, 0.5, 0.5, 0.5])
        assert charts.charts_containing(x) == frozenset(range(4))

    def test_x_p_endpoints(self):
        assert charts.x_p_family(0.0).distance(charts.canonical_vector(3)) == 0.0
        assert charts.x_p_family(1.0).distance(charts.canonical_vector(0)) == 0.0

    def test_split_recovers_factors_up_to_phase(self):
        half = math.sqrt(0.5)
        x = Quregister2.from_vector(kron_vec([half, half], [0.0, 1.0]), normalize=True)
        split = charts.tensor_split(x)
        assert abs(np.vdot(split.c0.vec, [half, half])) == pytest.approx(1.0)
        assert abs(np.vdot(split.c1.vec, [0.0, 1.0])) == pytest.approx(1.0)
