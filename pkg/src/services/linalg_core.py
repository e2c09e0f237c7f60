"""
Small dense complex linear algebra for 2x2 and 4x4 operands

Every other service builds on these helpers. Vectors and matrices are numpy
complex128 arrays; scalars are Python complex numbers. Functions are pure apart
from logging.
"""

import cmath
import math
from typing import Optional, Tuple

import numpy as np
from aws_lambda_powertools import Logger
from numpy.typing import ArrayLike, NDArray
from typing_extensions import TypeAlias

from config import SERVICE_NAME
from exceptions import (
    NonFiniteInputError,
    NotHermitianError,
    NotUnitModulusError,
    ShapeError,
    ZeroVectorError
)

logger = Logger(service=SERVICE_NAME, child=True)

CVec: TypeAlias = NDArray[np.complex128]
CMat: TypeAlias = NDArray[np.complex128]

UNIT_MODULUS_TOL = 1e-12
ZERO_NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-10
JACOBI_OFFDIAG_TOL = 1e-13
JACOBI_MAX_SWEEPS = 64
# |z| at or below this is treated as z = 0 by xi()
XI_ZERO_TOL = 1e-14


def as_complex(value: complex) -> complex:
    """Coerce to a finite Python complex"""
    z = complex(value)
    if not cmath.isfinite(z):
        raise NonFiniteInputError(f"Non-finite complex scalar: {value!r}")
    return z


def as_cvec(values: ArrayLike, size: Optional[int] = None) -> CVec:
    """
    Coerce to a finite 1-D complex128 array

    Args:
        values: Anything numpy can read as a vector
        size: Required length, if any

    Raises:
        ShapeError: Wrong rank or length
        NonFiniteInputError: NaN or Inf entries
    """
    vec = np.asarray(values, dtype=np.complex128)
    if vec.ndim != 1 or (size is not None and vec.shape[0] != size):
        raise ShapeError(f"Expected a vector of length {size}, got shape {vec.shape}")
    if not np.all(np.isfinite(vec)):
        raise NonFiniteInputError("Vector has non-finite entries")
    return vec


def as_cmat(values: ArrayLike, size: Optional[int] = None) -> CMat:
    """
    Coerce to a finite square complex128 matrix

    Args:
        values: Anything numpy can read as a matrix
        size: Required dimension, if any

    Raises:
        ShapeError: Not square or wrong dimension
        NonFiniteInputError: NaN or Inf entries
    """
    mat = np.asarray(values, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or (size is not None and mat.shape[0] != size):
        raise ShapeError(f"Expected a square matrix of size {size}, got shape {mat.shape}")
    if not np.all(np.isfinite(mat)):
        raise NonFiniteInputError("Matrix has non-finite entries")
    return mat


def kron_vec(a: ArrayLike, b: ArrayLike) -> CVec:
    """Tensor product of two 2-vectors: result[2i+j] = a[i]*b[j]"""
    return np.kron(as_cvec(a, 2), as_cvec(b, 2))


def kron_mat(a: ArrayLike, b: ArrayLike) -> CMat:
    """Kronecker product of two 2x2 matrices: result[2i+k, 2j+l] = A[i,j]*B[k,l]"""
    return np.kron(as_cmat(a, 2), as_cmat(b, 2))


def adjoint(m: ArrayLike) -> CMat:
    return as_cmat(m).conj().T


def trace(m: ArrayLike) -> complex:
    return complex(np.trace(as_cmat(m)))


def det2(m: ArrayLike) -> complex:
    mat = as_cmat(m, 2)
    return complex(mat[0, 0] * mat[1, 1] - mat[0, 1] * mat[1, 0])


def det4(m: ArrayLike) -> complex:
    # LU with partial pivoting
    return complex(np.linalg.det(as_cmat(m, 4)))


def matmul(a: ArrayLike, b: ArrayLike) -> CMat:
    return as_cmat(a) @ as_cmat(b)


def matvec(m: ArrayLike, v: ArrayLike) -> CVec:
    return as_cmat(m) @ as_cvec(v)


def frobenius_norm(m: ArrayLike) -> float:
    return float(np.linalg.norm(np.asarray(m, dtype=np.complex128)))


def hermitian_eigh(m: ArrayLike) -> Tuple[NDArray[np.float64], CMat]:
    """
    Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi rotations

    Sweeps over every (p, q) pair until all off-diagonal magnitudes fall below
    JACOBI_OFFDIAG_TOL (scaled by the matrix norm when that exceeds one).

    Args:
        m: Hermitian matrix

    Returns:
        tuple: (eigenvalues in nondecreasing order, unitary matrix whose columns are eigenvectors)

    Raises:
        NotHermitianError: If ||M - M^H||_F exceeds HERMITIAN_TOL
    """
    mat = as_cmat(m)
    deviation = frobenius_norm(mat - mat.conj().T)
    if deviation > HERMITIAN_TOL:
        raise NotHermitianError(f"Matrix is not Hermitian (||M - M^H||_F = {deviation:.3e})")

    a = (mat + mat.conj().T) / 2
    n = a.shape[0]
    vecs = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_OFFDIAG_TOL * max(1.0, frobenius_norm(a))

    for _ in range(JACOBI_MAX_SWEEPS):
        off_diagonal = np.abs(a - np.diag(np.diag(a)))
        if n < 2 or off_diagonal.max() < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                magnitude = abs(a[p, q])
                if magnitude == 0.0:
                    continue
                phase = a[p, q] / magnitude
                tau = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rotation = np.array([[c, s * phase], [-s * np.conj(phase), c]], dtype=np.complex128)
                pair = [p, q]
                a[:, pair] = a[:, pair] @ rotation
                a[pair, :] = rotation.conj().T @ a[pair, :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vecs[:, pair] = vecs[:, pair] @ rotation

    residual = float(np.abs(a - np.diag(np.diag(a))).max()) if n > 1 else 0.0
    if residual >= threshold:
        logger.warning("Jacobi sweeps exhausted before convergence", extra={
            "operation": "hermitian_eigh",
            "max_sweeps": JACOBI_MAX_SWEEPS,
            "residual_offdiagonal": residual,
            "threshold": threshold
        })

    values = np.real(np.diag(a)).copy()
    order = np.argsort(values, kind='stable')
    return values[order], vecs[:, order]


def hermitian_eigenvalues(m: ArrayLike) -> Tuple[float, ...]:
    """Sorted real spectrum of a Hermitian 2x2 or 4x4 matrix"""
    values, _ = hermitian_eigh(m)
    return tuple(float(v) for v in values)


def hermitian_power(m: ArrayLike, exponent: float) -> CMat:
    """
    Real power of a Hermitian positive-definite matrix through its eigenbasis

    Raises:
        NotHermitianError: If M is not Hermitian
        ValueError: If M has a non-positive eigenvalue
    """
    values, vecs = hermitian_eigh(m)
    if values[0] <= 0.0:
        raise ValueError(f"Matrix is not positive definite (smallest eigenvalue {values[0]:.3e})")
    return (vecs * values ** exponent) @ vecs.conj().T


def spectral_norm(m: ArrayLike) -> float:
    """Largest singular value, from the top eigenvalue of M^H M"""
    mat = as_cmat(m)
    top = hermitian_eigenvalues(mat.conj().T @ mat)[-1]
    return math.sqrt(max(top, 0.0))


def xi(z: complex) -> complex:
    """Unit complex number along the direction of z; 1 when z is (numerically) zero"""
    value = as_complex(z)
    magnitude = abs(value)
    if magnitude <= XI_ZERO_TOL:
        return 1.0 + 0.0j
    return value / magnitude


def as_unit_complex(value: complex, tol: float = UNIT_MODULUS_TOL) -> complex:
    """
    Validate a gauge phase

    Raises:
        NotUnitModulusError: If ||u| - 1| exceeds tol
    """
    u = as_complex(value)
    if abs(abs(u) - 1.0) > tol:
        raise NotUnitModulusError(f"|u| = {abs(u):.15g} is not 1 (tolerance {tol:g})")
    return u


def unit_normalize(values: ArrayLike, size: Optional[int] = None) -> Tuple[CVec, float]:
    """
    Scale a vector to unit norm

    Returns:
        tuple: (unit vector, norm of the input)

    Raises:
        ZeroVectorError: If the norm is at or below ZERO_NORM_TOL
    """
    vec = as_cvec(values, size)
    norm = float(np.linalg.norm(vec))
    if norm <= ZERO_NORM_TOL:
        raise ZeroVectorError(f"Vector norm {norm:.3e} is too small to normalise")
    return vec / norm, norm
