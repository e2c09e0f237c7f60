"""
Charts on the 2-quregister sphere and their embeddings into GL(4)

Chart C_k holds the states with x_k != 0. On each chart the map Phi_k,u sends a
state x to a 4x4 matrix whose first column is x; it is special unitary exactly
when x is separable, and its spectral norm measures entanglement.
"""

import math
from typing import FrozenSet, Optional, Tuple, Union

import numpy as np
from aws_lambda_powertools import Logger
from numpy.typing import ArrayLike
from typing_extensions import Literal

from config import SERVICE_NAME
from exceptions import (
    BellSingularityError,
    IndexOutOfRangeError,
    NotInChartError,
    NotSeparableError
)
from models.chart_embedding import ChartEmbedding, TensorSplit
from models.entanglement_report import EntanglementReport
from models.qubit import Qubit
from models.quregister import Quregister2
from services.density import entropy_closed_form, lambda_pair
from services.linalg_core import (
    CMat,
    CVec,
    as_cmat,
    as_cvec,
    as_unit_complex,
    det2,
    frobenius_norm,
    hermitian_eigenvalues,
    hermitian_power,
    kron_mat,
    matvec,
    spectral_norm,
    xi
)
from services.qubit_group import embed_psi1

logger = Logger(service=SERVICE_NAME, child=True)

CHART_TOL = 1e-12
SPLIT_SEPARABLE_TOL = 1e-8
REPORT_SEPARABLE_TOL = 1e-10
BELL_MARGIN = 1e-8
PHASE_ALIGNED_TOL = 1e-12
NU_MAX = math.sqrt(2.0) - 1.0
NU_SCALE = 2.0 / NU_MAX

_SQRT_HALF = math.sqrt(0.5)
_BELL_VECTORS = (
    (_SQRT_HALF, 0.0, 0.0, _SQRT_HALF),
    (_SQRT_HALF, 0.0, 0.0, -_SQRT_HALF),
    (0.0, _SQRT_HALF, _SQRT_HALF, 0.0),
    (0.0, _SQRT_HALF, -_SQRT_HALF, 0.0)
)


def validate_chart(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 0 <= k <= 3:
        raise IndexOutOfRangeError(f"Chart index must be 0..3, got {k!r}")
    return int(k)


def t_invariant(x: Union[Quregister2, ArrayLike]) -> complex:
    """
    t(x) = x0 x3 - x1 x2, also defined for raw (non-unit) 4-vectors
    """
    if isinstance(x, Quregister2):
        return x.t
    return det2(as_cvec(x, 4).reshape(2, 2))


def s_invariant(x: Quregister2) -> float:
    """s(x) = sqrt(1 - 4|t(x)|^2)"""
    return math.sqrt(max(0.0, 1.0 - 4.0 * abs(x.t) ** 2))


def is_separable(x: Quregister2, tol: float) -> bool:
    if not tol > 0:
        raise ValueError("tol must be positive")
    return abs(x.t) < tol


def is_phase_aligned(x: Quregister2, tol: float = PHASE_ALIGNED_TOL) -> bool:
    """
    x0 x3 conj(x1 x2) is real

    Holds for every real state and every separable state.
    """
    return abs((x[0] * x[3] * (x[1] * x[2]).conjugate()).imag) <= tol


def charts_containing(x: Quregister2, tol: float = CHART_TOL) -> FrozenSet[int]:
    if not tol > 0:
        raise ValueError("tol must be positive")
    return frozenset(k for k in range(4) if abs(x[k]) > tol)


def canonical_chart(x: Quregister2) -> int:
    """Index of the largest |x_k|; ties go to the smaller index"""
    return int(np.argmax(np.abs(x.vec)))


def _require_chart(x: Quregister2, k: int) -> int:
    k = validate_chart(k)
    if abs(x[k]) <= CHART_TOL:
        logger.debug("State outside chart", extra={"operation": "chart_check", "chart": k, "coordinate": abs(x[k])})
        raise NotInChartError(f"x_{k} = {x[k]} vanishes; the state is not in chart {k}")
    return k


def tensor_split(x: Quregister2, k: Optional[int] = None, u: complex = 1.0) -> TensorSplit:
    """
    Split a separable quregister as (u^-1 c0) (x) (u c1)

    Args:
        x: Separable 2-quregister
        k: Chart to split in (defaults to the canonical chart)
        u: Gauge phase

    Returns:
        TensorSplit: Unit factors with kron(c0, c1) = x

    Raises:
        NotInChartError: If x_k vanishes
        NotSeparableError: If |t(x)| >= 1e-8
    """
    k = canonical_chart(x) if k is None else _require_chart(x, k)
    u = as_unit_complex(u)
    t_abs = abs(x.t)
    if t_abs >= SPLIT_SEPARABLE_TOL:
        raise NotSeparableError(f"State is entangled (|t| = {t_abs:.6g}); no tensor split exists")

    x0, x1, x2, x3 = (x[i] for i in range(4))
    if k in (0, 2):
        radius = math.hypot(abs(x0), abs(x2))
        c0 = np.array([x0, x2]) / radius
        c1 = radius * (np.array([1.0, x1 / x0]) if k == 0 else np.array([1.0, x3 / x2]))
    else:
        radius = math.hypot(abs(x1), abs(x3))
        c0 = np.array([x1, x3]) / radius
        c1 = radius * (np.array([x0 / x1, 1.0]) if k == 1 else np.array([x2 / x3, 1.0]))

    return TensorSplit(
        c0=Qubit.from_vector(u.conjugate() * c0, normalize=True),
        c1=Qubit.from_vector(u * c1, normalize=True),
        chart=k,
        gauge=u,
        radius=radius
    )


def _xi_sq(z: complex) -> complex:
    return xi(z) ** 2


def _xi_sq_inv(z: complex) -> complex:
    return xi(z).conjugate() ** 2


def phi(x: Quregister2, k: int, u: complex = 1.0) -> ChartEmbedding:
    """
    Embedding Phi_k,u(x) of a chart-k state into GL(4)

    Column 0 is x and column 3 is (conj x3, -conj x2, -conj x1, conj x0) in every
    chart; columns 1 and 2 carry the gauge factors u^-2 and u^2.

    Raises:
        NotInChartError: If x_k vanishes
    """
    k = _require_chart(x, k)
    u = as_unit_complex(u)
    x0, x1, x2, x3 = (x[i] for i in range(4))
    c0, c1, c2, c3 = (z.conjugate() for z in (x0, x1, x2, x3))
    u_minus = u.conjugate() ** 2
    u_plus = u ** 2

    if k == 0:
        col1 = (-_xi_sq(x0) * c1, x0, -_xi_sq_inv(x1 / x0) * x3, x2)
    elif k == 1:
        col1 = (-x1, _xi_sq(x1) * c0, -x3, _xi_sq_inv(x0 / x1) * x2)
    elif k == 2:
        col1 = (-_xi_sq_inv(x3 / x2) * x1, x0, -_xi_sq(x2) * c3, x2)
    else:
        col1 = (-x1, _xi_sq_inv(x2 / x3) * x0, -x3, _xi_sq(x3) * c2)

    if k in (0, 2):
        col2 = (-c2, -_xi_sq_inv(x2) * x3, c0, _xi_sq_inv(x0) * x1)
    else:
        col2 = (-_xi_sq_inv(x3) * x2, -c3, _xi_sq_inv(x1) * x0, c1)

    matrix = np.empty((4, 4), dtype=np.complex128)
    matrix[:, 0] = x.vec
    matrix[:, 1] = u_minus * np.array(col1)
    matrix[:, 2] = u_plus * np.array(col2)
    matrix[:, 3] = (c3, -c2, -c1, c0)
    matrix.setflags(write=False)
    return ChartEmbedding(matrix=matrix, chart=k, gauge=u)


def gram_matrix(x: Quregister2, k: int, u: complex = 1.0) -> CMat:
    """Phi^H Phi; its (0, 3) entry is 2 conj(t)"""
    m = phi(x, k, u).matrix
    return m.conj().T @ m


def correction_matrix(t: complex) -> CMat:
    """C(t) = [[1, 0, 0, 2 conj t], [0, 1, 0, 0], [0, 0, 1, 0], [2 t, 0, 0, 1]]"""
    c = np.eye(4, dtype=np.complex128)
    c[0, 3] = 2.0 * complex(t).conjugate()
    c[3, 0] = 2.0 * complex(t)
    return c


def frobenius_bound(x: Quregister2, k: int, u: complex = 1.0) -> float:
    """||Phi||_F; every column is a unit vector so this is always 2"""
    return frobenius_norm(phi(x, k, u).matrix)


def nu(x: Quregister2, k: int, u: complex = 1.0) -> float:
    """Entanglement measure ||Phi_k,u(x)||_2 - 1"""
    return spectral_norm(phi(x, k, u).matrix) - 1.0


def nu_closed_form(x: Quregister2) -> float:
    """sqrt(1 + 2|t(x)|) - 1"""
    return math.sqrt(1.0 + 2.0 * abs(x.t)) - 1.0


def nu_spectral(x: Quregister2) -> float:
    """nu in the canonical chart with u = 1"""
    return nu(x, canonical_chart(x), 1.0)


def coincidence_gauge(c1: Qubit, k: int) -> complex:
    """
    Gauge u for which Phi_k,u(c0 (x) c1) = Psi1(c0) (x) Psi1(c1)

    x_k depends on coordinate k & 1 of the second factor.
    """
    return xi(c1[validate_chart(k) & 1])


def psi1_product(c0: Qubit, c1: Qubit) -> CMat:
    """Psi1(c0) (x) Psi1(c1)"""
    return kron_mat(embed_psi1(c0).mat, embed_psi1(c1).mat)


def z_matrix(x: Quregister2, k: int, u: complex = 1.0) -> Tuple[CMat, Tuple[float, ...]]:
    """
    Z = Phi^H Phi C(t)^-1 and its spectrum

    The spectrum is taken from the Hermitian matrix C^-1/2 Phi^H Phi C^-1/2,
    which is similar to Z.

    Returns:
        tuple: (Z, sorted eigenvalues)

    Raises:
        NotInChartError: If x_k vanishes
        BellSingularityError: If |t| >= 1/2 - 1e-8, where C(t) is singular
    """
    k = _require_chart(x, k)
    t = x.t
    if abs(t) >= 0.5 - BELL_MARGIN:
        raise BellSingularityError(f"|t| = {abs(t):.12g} is at the Bell value; C(t) is singular")
    gram = gram_matrix(x, k, u)
    correction = correction_matrix(t)
    z = gram @ np.linalg.inv(correction)
    inv_sqrt = hermitian_power(correction, -0.5)
    spectrum = hermitian_eigenvalues(inv_sqrt @ gram @ inv_sqrt)
    return z, spectrum


def local_transform(x: Union[Quregister2, ArrayLike], a: ArrayLike, side: Literal['left', 'right']) -> CVec:
    """
    (A (x) I) x for side 'left', (I (x) A) x for side 'right'

    The result is not renormalised; A need not be unitary.
    """
    vec = x.vec if isinstance(x, Quregister2) else as_cvec(x, 4)
    mat = as_cmat(a, 2)
    identity = np.eye(2, dtype=np.complex128)
    if side == 'left':
        return matvec(kron_mat(mat, identity), vec)
    if side == 'right':
        return matvec(kron_mat(identity, mat), vec)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def bell_vector(i: int) -> Quregister2:
    """b_{2 i1 + i0} = (e0 (x) e_{i1} + (-1)^{i0} e1 (x) e_{1 - i1}) / sqrt(2)"""
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 0 <= i <= 3:
        raise IndexOutOfRangeError(f"Bell index must be 0..3, got {i!r}")
    return Quregister2.from_vector(_BELL_VECTORS[i], normalize=True)


def canonical_vector(i: int) -> Quregister2:
    if isinstance(i, bool) or not isinstance(i, (int, np.integer)) or not 0 <= i <= 3:
        raise IndexOutOfRangeError(f"Basis index must be 0..3, got {i!r}")
    return Quregister2(np.eye(4, dtype=np.complex128)[i])


def x_p_family(p: float) -> Quregister2:
    """x_p = (sqrt p, 0, 0, sqrt(1 - p))"""
    if not 0.0 <= p <= 1.0:
        raise IndexOutOfRangeError(f"p must lie in [0, 1], got {p!r}")
    return Quregister2.from_vector([math.sqrt(p), 0.0, 0.0, math.sqrt(1.0 - p)], normalize=True)


def report(x: Quregister2) -> EntanglementReport:
    """
    Bundle every entanglement quantity for one state
    """
    t_abs = abs(x.t)
    lambda0, lambda1 = lambda_pair(x)
    nu_value = nu_closed_form(x)
    chart = canonical_chart(x)
    return EntanglementReport(
        nu=nu_value,
        nu_scaled=NU_SCALE * nu_value,
        t_abs=t_abs,
        s=s_invariant(x),
        lambda0=lambda0,
        lambda1=lambda1,
        entropy=entropy_closed_form(x),
        separable=t_abs < REPORT_SEPARABLE_TOL,
        chart=chart,
        nu_spectral=nu(x, chart, 1.0)
    )
