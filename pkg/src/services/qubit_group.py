"""
Group structure on qubits

Psi1 identifies a qubit (x0, x1) with the SU(2) matrix [[x0, -conj(x1)], [x1, conj(x0)]].
The star product is the matrix product read back through that bijection.
"""

import cmath
import math
from typing import List, Optional, Tuple, Union

import numpy as np
from aws_lambda_powertools import Logger
from numpy.typing import ArrayLike

from config import SERVICE_NAME
from models.qubit import Qubit
from models.su2 import Gate2, SU2Matrix
from services.sampling import make_rng, random_qubit, random_unit_vectors

logger = Logger(service=SERVICE_NAME, child=True)

DEFAULT_ORDER_MAX_N = 10 ** 6
DEFAULT_ORDER_TOL = 1e-9
# below this sin(alpha) the power angle is 0 or pi and x is +-e0
ANGLE_ZERO_TOL = 1e-12
# |det U - 1| bound for sampled non-special unitaries
U2_ANGLE_MARGIN = 0.2

Pair = Tuple[complex, complex]


def identity_qubit() -> Qubit:
    return Qubit(np.array([1.0, 0.0]))


def embed_psi1(x: Qubit) -> SU2Matrix:
    """
    Embed a qubit into SU(2)

    Args:
        x: Qubit

    Returns:
        SU2Matrix: Columns (x0, x1) and (-conj(x1), conj(x0))
    """
    x0, x1 = x[0], x[1]
    return SU2Matrix(np.array([[x0, -x1.conjugate()], [x1, x0.conjugate()]]))


def invert_psi1(m: Union[SU2Matrix, ArrayLike]) -> Qubit:
    """
    Recover the qubit whose embedding is m

    Raises:
        NotSpecialUnitaryError: If m is not in SU(2)
    """
    su2 = m if isinstance(m, SU2Matrix) else SU2Matrix(m)
    return Qubit.from_vector(su2.mat[:, 0], normalize=True)


def positively_oriented_partner(x: Qubit) -> Qubit:
    """Second column of Psi1(x): completes x to a positively oriented basis"""
    return Qubit(np.array([-x[1].conjugate(), x[0].conjugate()]))


def _star_pair(a0: complex, a1: complex, b0: complex, b1: complex) -> Pair:
    r0 = a0 * b0 - a1.conjugate() * b1
    r1 = a1 * b0 + a0.conjugate() * b1
    # renormalise every step so long iterations stay on the sphere
    norm = math.sqrt(abs(r0) ** 2 + abs(r1) ** 2)
    return r0 / norm, r1 / norm


def star(a: Qubit, b: Qubit) -> Qubit:
    """
    Star product a * b = (a0 b0 - conj(a1) b1, a1 b0 + conj(a0) b1)
    """
    r0, r1 = _star_pair(a[0], a[1], b[0], b[1])
    return Qubit(np.array([r0, r1]))


def star_inverse(x: Qubit) -> Qubit:
    return Qubit(np.array([x[0].conjugate(), -x[1]]))


def _power_pair(x0: complex, x1: complex, n: int) -> Pair:
    if n < 0:
        x0, x1, n = x0.conjugate(), -x1, -n
    result: Pair = (1.0 + 0.0j, 0.0j)
    base: Pair = (x0, x1)
    while n:
        if n & 1:
            result = _star_pair(*result, *base)
        n >>= 1
        if n:
            base = _star_pair(*base, *base)
    return result


def star_power(x: Qubit, n: int) -> Qubit:
    """
    n-th star power of x; negative n raises the inverse

    Uses binary exponentiation with renormalisation after every product.
    """
    r0, r1 = _power_pair(x[0], x[1], int(n))
    return Qubit(np.array([r0, r1]))


def power_angle(x: Qubit) -> float:
    """Rotation angle alpha in [0, pi] with cos(alpha) = Re(x0)"""
    return math.acos(max(-1.0, min(1.0, x[0].real)))


def _orbit_axis(x: Qubit) -> Optional[np.ndarray]:
    alpha = power_angle(x)
    sin_alpha = math.sin(alpha)
    if sin_alpha <= ANGLE_ZERO_TOL:
        return None
    return np.array([1j * x[0].imag, x[1]]) / sin_alpha


def star_power_closed_form(x: Qubit, n: int) -> Qubit:
    """
    Closed-form n-th power: cos(n alpha) e0 + sin(n alpha) w

    w = (i Im x0, x1) / sin(alpha) is the unit direction orthogonal to e0
    in the plane of the orbit.
    """
    alpha = power_angle(x)
    axis = _orbit_axis(x)
    if axis is None:
        return Qubit.from_vector([math.cos(n * alpha), 0.0], normalize=True)
    vec = np.array([math.cos(n * alpha), 0.0]) + math.sin(n * alpha) * axis
    return Qubit.from_vector(vec, normalize=True)


def order(x: Qubit, max_n: int = DEFAULT_ORDER_MAX_N, tol: float = DEFAULT_ORDER_TOL) -> Optional[int]:
    """
    Smallest n <= max_n with ||x^n - e0|| < tol

    Args:
        x: Qubit
        max_n: Largest power tried
        tol: Distance to the identity counted as a return

    Returns:
        Optional[int]: The order, or None when no power up to max_n returns
    """
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    if not tol > 0:
        raise ValueError("tol must be positive")

    x0, x1 = x[0], x[1]
    p0, p1 = x0, x1
    tol_sq = tol * tol
    for n in range(1, max_n + 1):
        if abs(p0 - 1.0) ** 2 + abs(p1) ** 2 < tol_sq:
            return n
        p0, p1 = _star_pair(p0, p1, x0, x1)
    logger.debug("No return to the identity", extra={"operation": "order", "max_n": max_n, "tol": tol})
    return None


def orbit_points(x: Qubit, count: int) -> np.ndarray:
    """
    Successive powers x^1 .. x^count as a (count, 2) complex array
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    points = np.empty((count, 2), dtype=np.complex128)
    x0, x1 = x[0], x[1]
    p0, p1 = x0, x1
    for i in range(count):
        points[i] = (p0, p1)
        p0, p1 = _star_pair(p0, p1, x0, x1)
    return points


def orbit(x: Qubit, count: int) -> List[Qubit]:
    """Powers x^1 .. x^count as qubits"""
    return [Qubit(point) for point in orbit_points(x, count)]


def orbit_closure_point(x: Qubit, phi: float) -> Qubit:
    """
    Point cos(phi) e0 + sin(phi) w of the great circle containing every power of x

    Raises:
        ValueError: If x is +-e0, whose orbit is finite
    """
    axis = _orbit_axis(x)
    if axis is None:
        raise ValueError("x is +-e0; its powers do not span a circle")
    vec = np.array([math.cos(phi), 0.0]) + math.sin(phi) * axis
    return Qubit.from_vector(vec, normalize=True)


def distance_to_orbit_closure(x: Qubit, y: Qubit) -> float:
    """Euclidean distance from y to the great circle through the powers of x"""
    axis = _orbit_axis(x)
    if axis is None:
        # finite orbit {x, e0}
        return min(y.distance(x), y.distance(identity_qubit()))
    along_e0 = y[0].real
    along_axis = float(np.vdot(axis, y.vec).real)
    radius = math.hypot(along_e0, along_axis)
    return math.sqrt(max(0.0, 2.0 - 2.0 * radius))


def nearest_orbit_distance(points: np.ndarray, targets: np.ndarray) -> np.ndarray:
    """
    For each target row, the smallest distance to any orbit point

    Args:
        points: (count, 2) orbit array
        targets: (m, 2) target array

    Returns:
        ndarray: (m,) minimum distances
    """
    # |p - y|^2 = 2 - 2 Re<p, y> for unit vectors
    overlaps = np.real(points.conj() @ targets.T)
    best = overlaps.max(axis=0)
    return np.sqrt(np.clip(2.0 - 2.0 * best, 0.0, None))


def commutation_defect(u: Union[Gate2, ArrayLike]) -> float:
    """
    |det U - 1|, which equals ||Psi1(Ux) - U Psi1(x)||_F for every qubit x
    """
    gate = u if isinstance(u, Gate2) else Gate2(u)
    return abs(gate.det - 1.0)


def gate_commutes_with_embedding(u: Union[Gate2, ArrayLike],
                                 samples: int,
                                 tol: float,
                                 seed: int) -> Tuple[bool, float]:
    """
    Test whether a gate commutes with Psi1 on sampled qubits

    Args:
        u: Unitary 2x2 gate
        samples: Number of random qubits
        tol: Largest deviation still counted as commuting
        seed: Seed for the qubit sample

    Returns:
        tuple: (max deviation < tol, max over x of ||Psi1(Ux) - U Psi1(x)||_F)

    Raises:
        NotUnitaryError: If u is not unitary
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    gate = u if isinstance(u, Gate2) else Gate2(u)
    mat = gate.mat
    rng = make_rng(seed)
    worst = 0.0
    for x in random_unit_vectors(rng, 2, samples):
        y = mat @ x
        embedded_image = np.array([[y[0], -np.conj(y[1])], [y[1], np.conj(y[0])]])
        image_of_embedded = mat @ np.array([[x[0], -np.conj(x[1])], [x[1], np.conj(x[0])]])
        worst = max(worst, float(np.linalg.norm(embedded_image - image_of_embedded)))

    logger.debug("Gate commutation sampled", extra={
        "operation": "gate_commutes_with_embedding",
        "samples": samples,
        "max_deviation": worst
    })
    return worst < tol, worst


def random_su2(rng: np.random.Generator) -> SU2Matrix:
    """Psi1 of a uniformly random qubit"""
    return embed_psi1(random_qubit(rng))


def random_u2_not_su2(rng: np.random.Generator) -> Gate2:
    """
    Random unitary with determinant e^{i theta}, theta in [0.2, 2 pi - 0.2]

    Keeps |det U - 1| at least 2 sin(0.1).
    """
    theta = rng.uniform(U2_ANGLE_MARGIN, 2.0 * math.pi - U2_ANGLE_MARGIN)
    phase = np.diag([1.0, cmath.exp(1j * theta)])
    return Gate2(random_su2(rng).mat @ phase)


def random_unitary2(rng: np.random.Generator) -> Gate2:
    """Random SU(2) element times a uniform global phase"""
    return Gate2(random_su2(rng).mat * cmath.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))
