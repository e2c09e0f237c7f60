"""
Seeded property suites behind the `check` command

Each suite samples random states from one seed and compares every invariant
against its bound. Violations carry the exact input (re/im interleaved repr
floats) so a failure can be replayed on its own. Claims known not to hold in
general are measured as findings, which never fail a run.
"""

import cmath
import math
import time
import uuid
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple, Type

import numpy as np
from aws_lambda_powertools import Logger

from config import RNG_ALGORITHM, SERVICE_NAME
from exceptions import UnknownSuiteError
from models.check_report import CheckReport, Finding, Violation
from models.density_matrix import MixedState
from models.qubit import Qubit
from models.quregister import Quregister2
from services import density, qubit_group, quregister_charts as charts
from services.linalg_core import det2, det4, hermitian_eigenvalues, kron_mat, kron_vec, spectral_norm
from services.sampling import (
    make_rng,
    random_matrix2,
    random_phase_aligned_quregister,
    random_product_state,
    random_qubit,
    random_quregister,
    random_real_quregister,
    random_unit_vectors,
    random_weights
)

logger = Logger(service=SERVICE_NAME, child=True)

GAUGES = (1.0 + 0.0j, 1j, cmath.exp(1j * math.pi / 7))
SQRT2 = math.sqrt(2.0)
# largest share of the sample used by the gate and orbit checks
GATE_SAMPLE_CAP = 100
ORBIT_LENGTH = 100_000
ORBIT_DENSITY_BOUND = 0.2
Z_SPECTRUM_T_MAX = 0.45
IRRATIONAL_ORDER_MAX_N = 1000


def encode_input(**values) -> str:
    """
    Render inputs as `name=[re im re im ...]` with repr floats
    """
    parts = []
    for name, value in values.items():
        flat = np.atleast_1d(np.asarray(value, dtype=np.complex128)).ravel()
        numbers = ' '.join(f"{z.real!r} {z.imag!r}" for z in map(complex, flat))
        parts.append(f"{name}=[{numbers}]")
    return ' '.join(parts)


class PropertySuiteInterface(ABC):
    """
    Interface for property suites
    """

    @abstractmethod
    def run(self, samples: int, seed: int) -> CheckReport:
        """
        Check every property of the suite on seeded samples

        Args:
            samples: Number of random inputs per property
            seed: Seed for the suite's generator

        Returns:
            CheckReport: Violations, findings and worst deviations
        """
        pass


class PropertySuite(PropertySuiteInterface):
    """
    Shared bookkeeping for the concrete suites
    """
    name = ''

    def __init__(self, tol_override: Optional[float] = None, correlation_id: Optional[str] = None):
        """
        Args:
            tol_override: Replaces the bound of every upper-bounded property
            correlation_id: Optional correlation ID for tracking
        """
        self.tol_override = tol_override
        self.correlation_id = correlation_id or str(uuid.uuid4())
        self.report: Optional[CheckReport] = None
        self.rng: Optional[np.random.Generator] = None

    def run(self, samples: int, seed: int) -> CheckReport:
        if samples < 1:
            raise ValueError("samples must be at least 1")
        start = time.time()
        self.report = CheckReport(suite=self.name, samples=samples, seed=seed, rng_algorithm=RNG_ALGORITHM)
        self.rng = make_rng(seed)

        logger.info("Starting property suite", extra={
            "correlation_id": self.correlation_id,
            "operation": "run_suite",
            "suite": self.name,
            "samples": samples,
            "seed": seed
        })
        self._check_all(samples)

        self.report.execution_time_seconds = time.time() - start
        logger.info("Property suite completed", extra={
            "correlation_id": self.correlation_id,
            "operation": "run_suite",
            "suite": self.name,
            "properties_checked": self.report.properties_checked,
            "violations": self.report.total_violations,
            "findings": len(self.report.findings),
            "execution_time_seconds": round(self.report.execution_time_seconds, 3)
        })
        return self.report

    @abstractmethod
    def _check_all(self, samples: int) -> None:
        pass

    def upper(self, prop: str, deviation: float, bound: float, **inputs) -> None:
        """Passes while deviation <= bound (or the override)"""
        deviation = float(deviation)
        limit = float(bound if self.tol_override is None else self.tol_override)
        self.report.record_deviation(prop, deviation)
        if not deviation <= limit:
            self._violate(prop, deviation, limit, inputs)

    def lower(self, prop: str, value: float, threshold: float, **inputs) -> None:
        """Passes while value >= threshold; not affected by the override"""
        value = float(value)
        self.report.record_deviation(prop, value)
        if not value >= threshold:
            self._violate(prop, value, threshold, inputs)

    def finding(self, prop: str, deviation: float, threshold: float, note: str, **inputs) -> None:
        """Records a Finding when deviation exceeds threshold; never a violation"""
        deviation = float(deviation)
        self.report.record_deviation(prop, deviation)
        if deviation > threshold:
            self.report.add_finding(Finding(
                property=prop,
                input=encode_input(**inputs),
                deviation=deviation,
                note=note
            ))

    def _violate(self, prop: str, deviation: float, bound: float, inputs: Dict) -> None:
        violation = Violation(property=prop, input=encode_input(**inputs), deviation=deviation, bound=float(bound))
        self.report.add_violation(violation)
        logger.warning("Property violated", extra={
            "correlation_id": self.correlation_id,
            "operation": "check_property",
            "suite": self.name,
            "property": prop,
            "deviation": deviation,
            "bound": bound
        })


def _dist(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a) - np.asarray(b)))


def _max_abs(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


class QubitGroupSuite(PropertySuite):
    """
    Group axioms of the star product, Psi1 as a bijective homomorphism,
    powers and orders, orbit density and the gate commutation dichotomy
    """
    name = 'qubit-group'

    ORDER_TABLE = (
        ((1.0, 0.0), 1),
        ((-1.0, 0.0), 2),
        ((0.0, 1.0), 4),
        ((0.0, -1.0), 4),
        ((1.0, 1.0), 8),
        ((1.0, -1.0), 8),
        ((-1.0, 1.0), 8),
        ((-1.0, -1.0), 8)
    )

    def _check_all(self, samples: int) -> None:
        identity = qubit_group.identity_qubit()
        for _ in range(samples):
            a, b, c = random_qubit(self.rng), random_qubit(self.rng), random_qubit(self.rng)
            star = qubit_group.star
            self.upper('group.associativity',
                       _dist(star(star(a, b), c).vec, star(a, star(b, c)).vec), 1e-12, a=a.vec, b=b.vec, c=c.vec)
            self.upper('group.identity',
                       max(_dist(star(identity, a).vec, a.vec), _dist(star(a, identity).vec, a.vec)), 1e-12, a=a.vec)
            inverse = qubit_group.star_inverse(a)
            self.upper('group.inverse',
                       max(_dist(star(a, inverse).vec, identity.vec), _dist(star(inverse, a).vec, identity.vec)),
                       1e-12, a=a.vec)

            psi_a, psi_b = qubit_group.embed_psi1(a), qubit_group.embed_psi1(b)
            self.upper('psi1.homomorphism',
                       _dist(qubit_group.embed_psi1(star(a, b)).mat, (psi_a @ psi_b).mat), 1e-12, a=a.vec, b=b.vec)
            self.upper('psi1.round_trip_qubit', _dist(qubit_group.invert_psi1(psi_a).vec, a.vec), 1e-12, a=a.vec)
            su2 = qubit_group.random_su2(self.rng)
            self.upper('psi1.round_trip_matrix',
                       _dist(qubit_group.embed_psi1(qubit_group.invert_psi1(su2)).mat, su2.mat), 1e-12, m=su2.mat)
            self.upper('psi1.determinant', abs(det2(psi_a.mat) - 1.0), 1e-12, a=a.vec)

            self.upper('star.square_formula', _dist(star(a, a).vec, self._square_formula(a)), 1e-12, a=a.vec)
            self.upper('star.cube_formula',
                       _dist(qubit_group.star_power(a, 3).vec, self._cube_formula(a)), 1e-12, a=a.vec)
            n = int(self.rng.integers(-1000, 1001))
            self.upper('star.power_closed_form',
                       _dist(qubit_group.star_power(a, n).vec, qubit_group.star_power_closed_form(a, n).vec),
                       1e-10, a=a.vec, n=n)

        x = random_qubit(self.rng)
        far_power = qubit_group.star_power(x, 10 ** 6)
        self.upper('star.power_unit_norm', abs(float(np.linalg.norm(far_power.vec)) - 1.0), 1e-10, x=x.vec)

        self._check_orders()
        self._check_gates(min(samples, GATE_SAMPLE_CAP))
        self._check_orbit(min(samples, GATE_SAMPLE_CAP))

    @staticmethod
    def _square_formula(a: Qubit) -> np.ndarray:
        x0, x1 = a[0], a[1]
        return np.array([x0 ** 2 - x1 * x1.conjugate(), 2.0 * x1 * x0.real])

    @staticmethod
    def _cube_formula(a: Qubit) -> np.ndarray:
        x0, x1 = a[0], a[1]
        return np.array([
            x0 ** 3 - x1 * (2.0 * x0.real + x0) * x1.conjugate(),
            x1 * (x0.conjugate() ** 2 + 2.0 * x0 * x0.real - x1 * x1.conjugate())
        ])

    def _check_orders(self) -> None:
        for entries, expected in self.ORDER_TABLE:
            x = Qubit.from_vector(entries, normalize=True)
            found = qubit_group.order(x)
            self.upper('order.table', 0.0 if found == expected else 1.0, 0.0, x=x.vec)

        irrational = Qubit.from_vector([cmath.exp(1j), cmath.exp(1j * SQRT2)], normalize=True)
        found = qubit_group.order(irrational, max_n=IRRATIONAL_ORDER_MAX_N)
        self.upper('order.irrational_phase', 0.0 if found is None else 1.0, 0.0, x=irrational.vec)

    def _check_gates(self, count: int) -> None:
        for _ in range(count):
            seed = int(self.rng.integers(0, 2 ** 32))
            special = qubit_group.random_su2(self.rng).as_gate()
            _, deviation = qubit_group.gate_commutes_with_embedding(special, count, 1e-10, seed)
            self.upper('gate.su2_commutes', deviation, 1e-10, u=special.mat, seed=seed)

            general = qubit_group.random_u2_not_su2(self.rng)
            _, deviation = qubit_group.gate_commutes_with_embedding(general, count, 1e-10, seed)
            self.lower('gate.u2_fails', deviation, 1e-3, u=general.mat, seed=seed)
            self.upper('gate.defect_equals_det_gap',
                       abs(deviation - qubit_group.commutation_defect(general)), 1e-10, u=general.mat, seed=seed)

    def _check_orbit(self, count: int) -> None:
        x = Qubit.from_vector([cmath.exp(1j), cmath.exp(1j * SQRT2)], normalize=True)
        points = qubit_group.orbit_points(x, ORBIT_LENGTH)
        norm_drift = float(np.max(np.abs(np.linalg.norm(points, axis=1) - 1.0)))
        self.upper('orbit.unit_norm', norm_drift, 1e-10, x=x.vec)

        phis = self.rng.uniform(0.0, 2.0 * math.pi, count)
        targets = np.array([qubit_group.orbit_closure_point(x, phi).vec for phi in phis])
        distances = qubit_group.nearest_orbit_distance(points, targets)
        worst = int(np.argmax(distances))
        self.upper('orbit.dense_in_closure', float(distances[worst]), ORBIT_DENSITY_BOUND,
                   x=x.vec, target=targets[worst])

        sphere_targets = random_unit_vectors(self.rng, 2, count)
        sphere_distances = qubit_group.nearest_orbit_distance(points, sphere_targets)
        worst = int(np.argmax(sphere_distances))
        self.finding('orbit.dense_in_sphere', float(sphere_distances[worst]), ORBIT_DENSITY_BOUND,
                     'powers stay on one great circle of the 3-sphere', x=x.vec, target=sphere_targets[worst])


class ChartsSuite(PropertySuite):
    """
    Separability, tensor splits, the chart embeddings and the entanglement measure
    """
    name = 'charts'

    def _check_all(self, samples: int) -> None:
        self._check_t_bound(samples)
        self._check_fixtures()
        for _ in range(samples):
            self._check_separable(*random_product_state(self.rng))
            self._check_real(random_real_quregister(self.rng))
            self._check_phase_aligned(random_phase_aligned_quregister(self.rng))
            self._check_general(random_quregister(self.rng))
            self._check_local(random_quregister(self.rng))

    def _check_t_bound(self, samples: int) -> None:
        vecs = random_unit_vectors(self.rng, 4, samples * 100)
        t_abs = np.abs(vecs[:, 0] * vecs[:, 3] - vecs[:, 1] * vecs[:, 2])
        worst = int(np.argmax(t_abs))
        self.upper('t.bound', max(0.0, float(t_abs[worst]) - 0.5), 1e-12, x=vecs[worst])

    def _check_fixtures(self) -> None:
        for i in range(4):
            bell = charts.bell_vector(i)
            self.upper('bell.t_half', abs(abs(bell.t) - 0.5), 1e-12, x=bell.vec)
            for k in sorted(charts.charts_containing(bell)):
                for u in GAUGES[:2]:
                    matrix = charts.phi(bell, k, u).matrix
                    spectrum = hermitian_eigenvalues(matrix.conj().T @ matrix)
                    self.upper('bell.gram_spectrum', _max_abs(spectrum, (0.0, 0.0, 2.0, 2.0)), 1e-12,
                               x=bell.vec, k=k, u=u)
                    self.upper('bell.spectral_norm', abs(spectral_norm(matrix) - SQRT2), 1e-12,
                               x=bell.vec, k=k, u=u)

        for step in range(11):
            p = step / 10
            x = charts.x_p_family(p)
            k = 0 if p > 0 else 3
            expected = math.sqrt(1.0 + 2.0 * math.sqrt((1.0 - p) * p))
            for u in GAUGES:
                self.upper('xp.spectral_norm', abs(spectral_norm(charts.phi(x, k, u).matrix) - expected), 1e-10,
                           p=p, u=u)
                if p > 0:
                    combined = (math.sqrt(p) * charts.phi(charts.canonical_vector(0), 0, u).matrix
                                + math.sqrt(1.0 - p) * charts.phi(charts.canonical_vector(3), 3, u).matrix)
                    self.upper('xp.decomposition', _max_abs(charts.phi(x, 0, u).matrix, combined), 1e-12, p=p, u=u)

    def _check_separable(self, x: Quregister2, c0: Qubit, c1: Qubit) -> None:
        identity = np.eye(4)
        for k in sorted(charts.charts_containing(x)):
            for u in GAUGES:
                matrix = charts.phi(x, k, u).matrix
                self.upper('separable.unitary', _dist(matrix.conj().T @ matrix, identity), 1e-10, x=x.vec, k=k, u=u)
                self.upper('separable.det_one', abs(det4(matrix) - 1.0), 1e-10, x=x.vec, k=k, u=u)
                self.upper('separable.nu_zero', abs(spectral_norm(matrix) - 1.0), 1e-9, x=x.vec, k=k, u=u)
                self.upper('anchor.column0', _dist(matrix[:, 0], x.vec), 0.0, x=x.vec, k=k, u=u)

                split = charts.tensor_split(x, k, u)
                self.upper('split.reproduces', _dist(kron_vec(split.c0.vec, split.c1.vec), x.vec), 1e-10,
                           x=x.vec, k=k, u=u)

            gauge = charts.coincidence_gauge(c1, k)
            self.upper('separable.product_coincidence',
                       _max_abs(charts.phi(x, k, gauge).matrix, charts.psi1_product(c0, c1)), 1e-12,
                       c0=c0.vec, c1=c1.vec, k=k)

        self._check_chart_spread(x, 'chart.independence_separable', strict=True)

    def _check_real(self, x: Quregister2) -> None:
        k = charts.canonical_chart(x)
        closed = charts.nu_closed_form(x)
        self.upper('nud.real', abs(charts.nu(x, k) - closed), 1e-9, x=x.vec)
        self.upper('nu.sqrt2_bound_real', max(0.0, spectral_norm(charts.phi(x, k).matrix) - SQRT2), 1e-10, x=x.vec)
        self._check_chart_spread(x, 'chart.independence_real', strict=True)

        if abs(x.t) < Z_SPECTRUM_T_MAX:
            expected = self._z_expected(x)
            for chart in sorted(charts.charts_containing(x)):
                for u in GAUGES:
                    _, spectrum = charts.z_matrix(x, chart, u)
                    self.upper('z.spectrum_real', _max_abs(spectrum, expected), 1e-8, x=x.vec, k=chart, u=u)

    def _check_phase_aligned(self, x: Quregister2) -> None:
        closed = charts.nu_closed_form(x)
        self.upper('nud.phase_aligned', abs(charts.nu(x, 0) - closed), 1e-9, x=x.vec)
        self.upper('nu.sqrt2_bound_phase_aligned',
                   max(0.0, spectral_norm(charts.phi(x, 0).matrix) - SQRT2), 1e-10, x=x.vec)
        if abs(x.t) < Z_SPECTRUM_T_MAX:
            expected = self._z_expected(x)
            for u in GAUGES:
                _, spectrum = charts.z_matrix(x, 0, u)
                self.upper('z.spectrum_phase_aligned', _max_abs(spectrum, expected), 1e-8, x=x.vec, u=u)

    def _check_general(self, x: Quregister2) -> None:
        k = charts.canonical_chart(x)
        matrix = charts.phi(x, k).matrix
        norm = spectral_norm(matrix)
        closed = charts.nu_closed_form(x)
        nu_value = norm - 1.0

        self.upper('nud.lower_bound', max(0.0, closed - nu_value), 1e-10, x=x.vec)
        self.finding('nud.general', abs(nu_value - closed), 1e-9,
                     'equality needs x0 x3 conj(x1 x2) real', x=x.vec)
        self.upper('nu.norm_at_most_two', max(0.0, norm - 2.0), 1e-12, x=x.vec)
        self.upper('frobenius.equals_two', abs(charts.frobenius_bound(x, k) - 2.0), 1e-12, x=x.vec)
        self.finding('nu.sqrt2_bound_general', max(0.0, norm - SQRT2), 1e-10,
                     'spectral norm exceeds sqrt(2) off phase-aligned states', x=x.vec)
        self.upper('t.bound_sample', max(0.0, abs(x.t) - 0.5), 1e-12, x=x.vec)

        gauge_values = [charts.nu(x, k, u) for u in GAUGES]
        self.upper('gauge.independence', max(gauge_values) - min(gauge_values), 1e-10, x=x.vec, k=k)
        self._check_chart_spread(x, 'chart.independence_general', strict=False)

        if abs(x.t) < Z_SPECTRUM_T_MAX:
            _, spectrum = charts.z_matrix(x, k)
            self.finding('z.spectrum_general', _max_abs(spectrum, self._z_expected(x)), 1e-8,
                         'stated spectrum needs a phase-aligned state', x=x.vec, k=k)

    def _check_local(self, x: Quregister2) -> None:
        a = random_matrix2(self.rng)
        det_a = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
        for side in ('left', 'right'):
            moved = charts.local_transform(x, a, side)
            self.upper('local.det_scaling', abs(charts.t_invariant(moved) - det_a * x.t), 1e-12,
                       x=x.vec, a=a, right=(side == 'right'))

        unitary = qubit_group.random_unitary2(self.rng).mat
        for side in ('left', 'right'):
            moved = Quregister2.from_vector(charts.local_transform(x, unitary, side), normalize=True)
            self.upper('local.unitary_t_invariance', abs(abs(moved.t) - abs(x.t)), 1e-11,
                       x=x.vec, a=unitary, right=(side == 'right'))
            self.upper('local.unitary_nu_invariance',
                       abs(charts.nu_closed_form(moved) - charts.nu_closed_form(x)), 1e-11,
                       x=x.vec, a=unitary, right=(side == 'right'))

        y = random_quregister(self.rng)
        nu_gap = charts.nu_closed_form(x) - charts.nu_closed_form(y)
        entropy_gap = density.entropy_closed_form(x) - density.entropy_closed_form(y)
        if abs(nu_gap) > 1e-9 and abs(entropy_gap) > 1e-9:
            self.upper('nu.entropy_monotone', 0.0 if np.sign(nu_gap) == np.sign(entropy_gap) else 1.0, 0.0,
                       x=x.vec, y=y.vec)

        delta = random_unit_vectors(self.rng, 4, 1)[0] * 1e-6
        perturbed = Quregister2.from_vector(x.vec + delta, normalize=True)
        moved_by = _dist(perturbed.vec, x.vec)
        if moved_by > 0.0:
            ratio = abs(charts.nu_closed_form(perturbed) - charts.nu_closed_form(x)) / moved_by
            self.upper('nu.continuity', ratio, 10.0, x=x.vec, delta=delta)

    def _check_chart_spread(self, x: Quregister2, prop: str, strict: bool) -> None:
        # every chart at u = 1, plus the remaining gauges in the canonical chart
        canonical = charts.canonical_chart(x)
        values = [charts.nu(x, k) for k in sorted(charts.charts_containing(x))]
        values += [charts.nu(x, canonical, u) for u in GAUGES[1:]]
        spread = max(values) - min(values)
        if strict:
            self.upper(prop, spread, 1e-10, x=x.vec)
        else:
            self.finding(prop, spread, 1e-10, 'charts disagree on complex states', x=x.vec)

    @staticmethod
    def _z_expected(x: Quregister2) -> Tuple[float, ...]:
        t_abs = abs(x.t)
        return (1.0 - 2.0 * t_abs, 1.0, 1.0, 1.0 + 2.0 * t_abs)


class DensitySuite(PropertySuite):
    """
    Density matrices, partial traces, entropies and purity
    """
    name = 'density'

    MP_VALUES = (0.1, 0.5, 0.9)

    def _check_all(self, samples: int) -> None:
        self._check_mp_fixtures()
        for _ in range(samples):
            x = random_quregister(self.rng)
            rho = density.rho2(x)
            mat = rho.mat
            self.upper('rho2.hermitian', _dist(mat, mat.conj().T), 1e-10, x=x.vec)
            self.upper('rho2.trace', abs(np.trace(mat) - 1.0), 1e-10, x=x.vec)
            self.upper('rho2.idempotent', _dist(mat @ mat, mat), 1e-10, x=x.vec)
            self.upper('entropy.pure_zero', density.von_neumann_entropy(rho), 1e-9, x=x.vec)

            lambdas = density.lambda_pair(x)
            for subsystem in (0, 1):
                spectrum = density.partial_trace(rho, subsystem).eigenvalues
                self.upper('lambda.eigen_oracle', _max_abs(spectrum, lambdas), 1e-10, x=x.vec, i=subsystem)
            reduced = [density.reduced_entropy(rho, subsystem) for subsystem in (0, 1)]
            self.upper('reduced.equal_marginals', abs(reduced[0] - reduced[1]), 1e-10, x=x.vec)
            self.upper('entropy.closed_form', abs(density.entropy_closed_form(x) - reduced[0]), 1e-10, x=x.vec)

            self.upper('partial_trace.displayed_form', self._displayed_gap(x, rho), 1e-13, x=x.vec)
            z = random_qubit(self.rng)
            for subsystem in (0, 1):
                reduced_mat = density.partial_trace(rho, subsystem).mat
                expected = float(np.vdot(z.vec, reduced_mat @ z.vec).real)
                self.upper('partial_trace.quadratic_form',
                           abs(density.partial_trace_form(rho, subsystem, z) - expected), 1e-12,
                           x=x.vec, z=z.vec, i=subsystem)

            c0, c1 = random_qubit(self.rng), random_qubit(self.rng)
            product = Quregister2.from_vector(kron_vec(c0.vec, c1.vec), normalize=True)
            self.upper('rho2.product',
                       _max_abs(density.rho2(product).mat, kron_mat(density.rho1(c0).mat, density.rho1(c1).mat)),
                       1e-13, c0=c0.vec, c1=c1.vec)

            self._check_mixture()

    def _displayed_gap(self, x: Quregister2, rho) -> float:
        x0, x1, x2, x3 = (x[i] for i in range(4))
        tr0 = np.array([
            [abs(x0) ** 2 + abs(x1) ** 2, x0 * x2.conjugate() + x1 * x3.conjugate()],
            [x2 * x0.conjugate() + x3 * x1.conjugate(), abs(x2) ** 2 + abs(x3) ** 2]
        ])
        tr1 = np.array([
            [abs(x0) ** 2 + abs(x2) ** 2, x0 * x1.conjugate() + x2 * x3.conjugate()],
            [x1 * x0.conjugate() + x3 * x2.conjugate(), abs(x1) ** 2 + abs(x3) ** 2]
        ])
        return max(_max_abs(density.partial_trace(rho, 0).mat, tr0),
                   _max_abs(density.partial_trace(rho, 1).mat, tr1))

    def _check_mixture(self) -> None:
        states = [random_quregister(self.rng) for _ in range(3)]
        weights = random_weights(self.rng, 3)
        mixed = density.mix(MixedState.of(weights, states))
        for subsystem in (0, 1):
            expected = sum(w * density.partial_trace(density.rho2(s), subsystem).mat for w, s in zip(weights, states))
            self.upper('partial_trace.linearity', _dist(density.partial_trace(mixed, subsystem).mat, expected), 1e-12,
                       x0=states[0].vec, x1=states[1].vec, x2=states[2].vec, p=weights, i=subsystem)
        self.upper('mix.not_pure', 0.0 if not density.is_pure(mixed) else 1.0, 0.0,
                   x0=states[0].vec, x1=states[1].vec, x2=states[2].vec, p=weights)

    def _check_mp_fixtures(self) -> None:
        for p in self.MP_VALUES:
            x = charts.x_p_family(p)
            rho = density.rho2(x)
            self.upper('mp.reduced_diagonal', _max_abs(density.partial_trace(rho, 0).mat, np.diag([p, 1.0 - p])),
                       1e-13, p=p)
            self.upper('mp.spectrum', _max_abs(rho.eigenvalues, (0.0, 0.0, 0.0, 1.0)), 1e-10, p=p)
            y = np.array([math.sqrt(1.0 - p), 0.0, 0.0, -math.sqrt(p)])
            self.upper('mp.eigenvectors', max(_dist(rho.mat @ x.vec, x.vec), float(np.linalg.norm(rho.mat @ y))),
                       1e-10, p=p)
            self.upper('mp.reduced_entropy', abs(density.reduced_entropy(rho, 0) - density.shannon_entropy(p)),
                       1e-12, p=p)
            self.upper('mp.idempotent', 0.0 if density.is_idempotent(rho) else 1.0, 0.0, p=p)


SUITES: Dict[str, Type[PropertySuite]] = {
    QubitGroupSuite.name: QubitGroupSuite,
    ChartsSuite.name: ChartsSuite,
    DensitySuite.name: DensitySuite
}
SUITE_NAMES = tuple(SUITES) + ('all',)


def run_suite(name: str,
              samples: int,
              seed: int,
              tol_override: Optional[float] = None,
              correlation_id: Optional[str] = None) -> CheckReport:
    """
    Run one registered suite, or every suite for 'all'

    Raises:
        UnknownSuiteError: If name is not registered
    """
    if name not in SUITE_NAMES:
        raise UnknownSuiteError(f"Unknown suite '{name}'; expected one of {', '.join(SUITE_NAMES)}")
    correlation_id = correlation_id or str(uuid.uuid4())

    if name != 'all':
        return SUITES[name](tol_override, correlation_id).run(samples, seed)

    combined = CheckReport(suite='all', samples=samples, seed=seed, rng_algorithm=RNG_ALGORITHM)
    for suite_cls in SUITES.values():
        combined.merge(suite_cls(tol_override, correlation_id).run(samples, seed))
    return combined
