"""
Density matrices, partial traces and entropies of 2-quregisters

Basis order is e_{2*i1 + i0} = e_{i1} (x) e_{i0}. partial_trace(Q, 0) applies
(Tr0 Q)_ij = q_{2i,2j} + q_{2i+1,2j+1}, which keeps the left factor;
partial_trace(Q, 1) applies (Tr1 Q)_ij = q_{i,j} + q_{2+i,2+j}, which keeps the right one.
"""

import math
from typing import Tuple, Union

import numpy as np
from aws_lambda_powertools import Logger
from numpy.typing import ArrayLike

from config import SERVICE_NAME
from exceptions import IndexOutOfRangeError, InvalidDensityError
from models.density_matrix import DensityMatrix, DensityMatrix2, DensityMatrix4, MixedState
from models.qubit import Qubit
from models.quregister import Quregister2
from services.linalg_core import as_cmat, as_cvec, frobenius_norm

logger = Logger(service=SERVICE_NAME, child=True)

DEFAULT_PURITY_TOL = 1e-9

DensityLike = Union[DensityMatrix, ArrayLike]


def _as_density(m: DensityLike) -> DensityMatrix:
    if isinstance(m, DensityMatrix):
        return m
    mat = as_cmat(m)
    if mat.shape[0] == 2:
        return DensityMatrix2(mat)
    if mat.shape[0] == 4:
        return DensityMatrix4(mat)
    raise InvalidDensityError(f"No density matrix of size {mat.shape[0]}")


def _as_density4(m: DensityLike) -> DensityMatrix4:
    density = _as_density(m)
    if not isinstance(density, DensityMatrix4):
        raise InvalidDensityError("Expected a 4x4 density matrix")
    return density


def rho2(x: Quregister2) -> DensityMatrix4:
    """Pure-state density matrix x x^H"""
    return DensityMatrix4(np.outer(x.vec, x.vec.conj()))


def rho1(z: Qubit) -> DensityMatrix2:
    """Pure-state density matrix z z^H"""
    return DensityMatrix2(np.outer(z.vec, z.vec.conj()))


def _check_subsystem(subsystem: int) -> None:
    if subsystem not in (0, 1):
        raise IndexOutOfRangeError(f"Subsystem must be 0 or 1, got {subsystem!r}")


def partial_trace(q: DensityLike, subsystem: int) -> DensityMatrix2:
    """
    Reduced density matrix of a two-qubit state

    Args:
        q: 4x4 density matrix
        subsystem: 0 for Tr0, 1 for Tr1

    Returns:
        DensityMatrix2: The reduced matrix

    Raises:
        InvalidDensityError: If q is not a density matrix
        IndexOutOfRangeError: If subsystem is not 0 or 1
    """
    _check_subsystem(subsystem)
    mat = _as_density4(q).mat
    if subsystem == 0:
        reduced = [[mat[2 * i, 2 * j] + mat[2 * i + 1, 2 * j + 1] for j in range(2)] for i in range(2)]
    else:
        reduced = [[mat[i, j] + mat[2 + i, 2 + j] for j in range(2)] for i in range(2)]
    return DensityMatrix2(np.array(reduced, dtype=np.complex128))


def partial_trace_form(q: DensityLike, subsystem: int, z: ArrayLike) -> float:
    """
    The partial trace as a quadratic form on C^2

    Subsystem 0 sums (z (x) e_k)^H Q (z (x) e_k) over k; subsystem 1 uses e_k (x) z.
    Agrees with z^H partial_trace(Q, subsystem) z.
    """
    _check_subsystem(subsystem)
    mat = _as_density4(q).mat
    vec = as_cvec(z.vec if isinstance(z, Qubit) else z, 2)
    total = 0.0 + 0.0j
    for k in range(2):
        e_k = np.eye(2, dtype=np.complex128)[k]
        lifted = np.kron(vec, e_k) if subsystem == 0 else np.kron(e_k, vec)
        total += np.vdot(lifted, mat @ lifted)
    return float(total.real)


def lambda_pair(x: Quregister2) -> Tuple[float, float]:
    """
    Eigenvalues (lambda0, lambda1) = ((1 - s)/2, (1 + s)/2) of either reduced matrix

    s(x) = sqrt(1 - 4|t|^2); lambda0 is evaluated as 2|t|^2 / (1 + s) to avoid
    cancellation near separable states.
    """
    t_sq = min(abs(x.t) ** 2, 0.25)
    s = math.sqrt(1.0 - 4.0 * t_sq)
    lambda0 = 2.0 * t_sq / (1.0 + s)
    return lambda0, 1.0 - lambda0


def _xlog2x(value: float) -> float:
    return 0.0 if value <= 0.0 else value * math.log2(value)


def von_neumann_entropy(m: DensityLike) -> float:
    """
    -sum(lambda log2 lambda) over the spectrum, with 0 log 0 = 0

    Raises:
        InvalidDensityError: If m is not a density matrix
    """
    density = _as_density(m)
    total = 0.0
    # construction bounds eigenvalues below by -1e-10, so the clamp is at most that wide
    for value in density.eigenvalues:
        total -= _xlog2x(min(1.0, max(0.0, value)))
    return max(0.0, total)


def reduced_entropy(m: DensityLike, subsystem: int) -> float:
    return von_neumann_entropy(partial_trace(m, subsystem))


def shannon_entropy(p: float) -> float:
    """Binary entropy H(p) in bits"""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Probability {p!r} is outside [0, 1]")
    return -_xlog2x(p) - _xlog2x(1.0 - p)


def entropy_closed_form(x: Quregister2) -> float:
    """
    E(rho(x)) = -1/2 ((1 - s) log2(1 - s) + (1 + s) log2(1 + s)) + 1
    """
    lambda0, _ = lambda_pair(x)
    one_minus_s = 2.0 * lambda0
    one_plus_s = 2.0 - one_minus_s
    return max(0.0, -0.5 * (_xlog2x(one_minus_s) + _xlog2x(one_plus_s)) + 1.0)


def mix(state: MixedState) -> DensityMatrix4:
    """Convex combination sum(p_i rho2(x_i))"""
    mat = np.zeros((4, 4), dtype=np.complex128)
    for weight, component in state.components:
        mat += weight * np.outer(component.vec, component.vec.conj())
    return DensityMatrix4(mat)


def purity(m: DensityLike) -> float:
    """Tr(m^2)"""
    mat = _as_density(m).mat
    return float(np.trace(mat @ mat).real)


def is_pure(m: DensityLike, tol: float = DEFAULT_PURITY_TOL) -> bool:
    return abs(purity(m) - 1.0) < tol


def is_idempotent(m: DensityLike, tol: float = 1e-10) -> bool:
    mat = _as_density(m).mat
    return frobenius_norm(mat @ mat - mat) < tol


def is_separable_mixture(state: MixedState, tol: float = 1e-10) -> bool:
    """
    Every weighted component is a product state

    Sufficient for separability of the mixture; a different decomposition of
    the same matrix is not searched for.
    """
    separable = all(abs(component.t) < tol for weight, component in state.components if weight > 0.0)
    logger.debug("Mixture separability checked", extra={
        "operation": "is_separable_mixture",
        "components": len(state.components),
        "separable": separable
    })
    return separable
