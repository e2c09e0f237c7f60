"""
Seeded random states for property checks

Every sampler takes an explicit numpy Generator so runs are reproducible
from a single seed.
"""

import cmath
import math
from typing import Tuple

import numpy as np

from models.qubit import Qubit
from models.quregister import Quregister2
from services.linalg_core import CMat, kron_vec


def make_rng(seed: int) -> np.random.Generator:
    """PCG64 generator; reported as config.RNG_ALGORITHM"""
    return np.random.Generator(np.random.PCG64(seed))


def random_unit_vectors(rng: np.random.Generator, size: int, count: int) -> np.ndarray:
    """
    Draw count vectors uniformly from the unit sphere of C^size

    Standard Gaussians for every real and imaginary part, then normalised.

    Returns:
        ndarray: complex128 array of shape (count, size)
    """
    raw = rng.standard_normal((count, size, 2))
    vecs = raw[..., 0] + 1j * raw[..., 1]
    return vecs / np.linalg.norm(vecs, axis=1, keepdims=True)


def random_qubit(rng: np.random.Generator) -> Qubit:
    return Qubit.from_vector(random_unit_vectors(rng, 2, 1)[0], normalize=True)


def random_quregister(rng: np.random.Generator) -> Quregister2:
    return Quregister2.from_vector(random_unit_vectors(rng, 4, 1)[0], normalize=True)


def random_real_quregister(rng: np.random.Generator) -> Quregister2:
    return Quregister2.from_vector(rng.standard_normal(4), normalize=True)


def random_phase_aligned_quregister(rng: np.random.Generator) -> Quregister2:
    """
    Real state under local diagonal phases and a global phase

    x0*x3*conj(x1*x2) stays real for every such state.
    """
    real = rng.standard_normal(4)
    theta_a, theta_b, gamma = rng.uniform(0.0, 2.0 * math.pi, 3)
    phases = np.array([
        1.0,
        cmath.exp(1j * theta_b),
        cmath.exp(1j * theta_a),
        cmath.exp(1j * (theta_a + theta_b))
    ]) * cmath.exp(1j * gamma)
    return Quregister2.from_vector(real * phases, normalize=True)


def random_product_state(rng: np.random.Generator) -> Tuple[Quregister2, Qubit, Qubit]:
    """
    Random separable quregister with its factors

    Returns:
        tuple: (c0 (x) c1, c0, c1)
    """
    c0 = random_qubit(rng)
    c1 = random_qubit(rng)
    return Quregister2.from_vector(kron_vec(c0.vec, c1.vec), normalize=True), c0, c1


def random_matrix2(rng: np.random.Generator) -> CMat:
    """Complex Gaussian 2x2 matrix (almost surely invertible)"""
    raw = rng.standard_normal((2, 2, 2))
    return raw[..., 0] + 1j * raw[..., 1]


def random_unit_complex(rng: np.random.Generator) -> complex:
    return cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi))


def random_weights(rng: np.random.Generator, count: int) -> np.ndarray:
    """Mixture weights on the probability simplex"""
    weights = rng.dirichlet(np.ones(count))
    return weights / weights.sum()
