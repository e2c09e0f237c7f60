"""
Data models for density matrices and mixed states
"""

from dataclasses import dataclass
from typing import ClassVar, Sequence, Tuple

import numpy as np

from exceptions import InvalidDensityError, InvalidWeightsError
from models.quregister import Quregister2
from services.linalg_core import CMat, as_cmat, frobenius_norm, hermitian_eigenvalues

DENSITY_TOL = 1e-10
WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Hermitian positive-semidefinite matrix of unit trace
    """
    mat: CMat

    SIZE: ClassVar[int] = 0

    def __post_init__(self):
        mat = np.array(as_cmat(self.mat, self.SIZE), copy=True)
        hermitian_defect = frobenius_norm(mat - mat.conj().T)
        if hermitian_defect > DENSITY_TOL:
            raise InvalidDensityError(f"Density matrix is not Hermitian (defect {hermitian_defect:.3e})")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > DENSITY_TOL:
            raise InvalidDensityError(f"Density matrix trace is {trace}, expected 1")
        smallest = hermitian_eigenvalues(mat)[0]
        if smallest < -DENSITY_TOL:
            raise InvalidDensityError(f"Density matrix has negative eigenvalue {smallest:.3e}")
        mat.setflags(write=False)
        object.__setattr__(self, 'mat', mat)

    @property
    def eigenvalues(self) -> Tuple[float, ...]:
        return hermitian_eigenvalues(self.mat)


class DensityMatrix2(DensityMatrix):
    """Single-qubit density matrix"""
    SIZE: ClassVar[int] = 2


class DensityMatrix4(DensityMatrix):
    """Two-qubit density matrix"""
    SIZE: ClassVar[int] = 4


@dataclass(frozen=True)
class MixedState:
    """
    Represents a convex combination of pure 2-quregister states

    Keeps the (weight, state) decomposition so product-state checks stay possible.
    """
    components: Tuple[Tuple[float, Quregister2], ...]

    def __post_init__(self):
        components = tuple((float(weight), state) for weight, state in self.components)
        if not components:
            raise InvalidWeightsError("Mixed state needs at least one component")
        for weight, _ in components:
            if not np.isfinite(weight) or weight < 0.0 or weight > 1.0:
                raise InvalidWeightsError(f"Weight {weight!r} is outside [0, 1]")
        total = sum(weight for weight, _ in components)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidWeightsError(f"Weights sum to {total!r}, expected 1")
        object.__setattr__(self, 'components', components)

    @classmethod
    def of(cls, weights: Sequence[float], states: Sequence[Quregister2]) -> 'MixedState':
        if len(weights) != len(states):
            raise InvalidWeightsError("Weights and states differ in length")
        return cls(tuple(zip(weights, states)))

    @property
    def weights(self) -> Tuple[float, ...]:
        return tuple(weight for weight, _ in self.components)

    @property
    def states(self) -> Tuple[Quregister2, ...]:
        return tuple(state for _, state in self.components)
