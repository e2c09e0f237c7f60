"""
Data models for unit state vectors
"""

from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from numpy.typing import ArrayLike

from exceptions import NotNormalizedError
from services.linalg_core import CVec, as_cvec, unit_normalize

# Allowed deviation of the squared norm from one at construction
NORM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class UnitVector:
    """
    Unit-norm complex vector of fixed length

    The strict constructor rejects vectors whose squared norm is off by more
    than NORM_TOL; from_vector(..., normalize=True) rescales instead.
    """
    vec: CVec

    SIZE: ClassVar[int] = 0

    def __post_init__(self):
        vec = np.array(as_cvec(self.vec, self.SIZE), copy=True)
        deviation = abs(float(np.vdot(vec, vec).real) - 1.0)
        if deviation > NORM_TOL:
            raise NotNormalizedError(
                f"{type(self).__name__} squared norm is off by {deviation:.3e}"
            )
        vec.setflags(write=False)
        object.__setattr__(self, 'vec', vec)

    @classmethod
    def from_vector(cls, values: ArrayLike, normalize: bool = False):
        """
        Build from raw entries

        Args:
            values: Complex entries
            normalize: Divide by the norm instead of rejecting non-unit input

        Raises:
            ZeroVectorError: If normalising a (near) zero vector
            NotNormalizedError: If strict and the input is not unit-norm
        """
        if normalize:
            vec, _ = unit_normalize(values, cls.SIZE)
            return cls(vec)
        return cls(values)

    def __getitem__(self, index: int) -> complex:
        return complex(self.vec[index])

    def __len__(self) -> int:
        return self.SIZE

    def distance(self, other: 'UnitVector') -> float:
        """Euclidean distance between the two vectors"""
        return float(np.linalg.norm(self.vec - other.vec))


class Qubit(UnitVector):
    """
    Represents a qubit, a unit vector in C^2
    """
    SIZE: ClassVar[int] = 2
