"""
Data models for 2x2 unitary matrices
"""

from dataclasses import dataclass

import numpy as np

from exceptions import NotSpecialUnitaryError, NotUnitaryError
from services.linalg_core import CMat, as_cmat, det2, frobenius_norm

UNITARY_TOL = 1e-10


def unitarity_defect(mat: CMat) -> float:
    """||M^H M - I||_F"""
    return frobenius_norm(mat.conj().T @ mat - np.eye(mat.shape[0]))


@dataclass(frozen=True, eq=False)
class Gate2:
    """
    Represents a single-qubit quantum gate (any 2x2 unitary)
    """
    mat: CMat

    def __post_init__(self):
        mat = np.array(as_cmat(self.mat, 2), copy=True)
        defect = unitarity_defect(mat)
        if defect > UNITARY_TOL:
            raise NotUnitaryError(f"Gate is not unitary (||U^H U - I||_F = {defect:.3e})")
        mat.setflags(write=False)
        object.__setattr__(self, 'mat', mat)

    @property
    def det(self) -> complex:
        return det2(self.mat)


@dataclass(frozen=True, eq=False)
class SU2Matrix:
    """
    Represents an element of SU(2)
    """
    mat: CMat

    def __post_init__(self):
        mat = np.array(as_cmat(self.mat, 2), copy=True)
        defect = unitarity_defect(mat)
        det_defect = abs(det2(mat) - 1.0)
        if defect > UNITARY_TOL or det_defect > UNITARY_TOL:
            raise NotSpecialUnitaryError(
                f"Matrix is not in SU(2) (unitarity defect {defect:.3e}, |det - 1| = {det_defect:.3e})"
            )
        mat.setflags(write=False)
        object.__setattr__(self, 'mat', mat)

    def __matmul__(self, other: 'SU2Matrix') -> 'SU2Matrix':
        return SU2Matrix(self.mat @ other.mat)

    def as_gate(self) -> Gate2:
        return Gate2(self.mat)
