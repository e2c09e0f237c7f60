"""
Data model for 2-quregisters
"""

from typing import ClassVar

from models.qubit import UnitVector
from services.linalg_core import det2


class Quregister2(UnitVector):
    """
    Represents a 2-quregister, a unit vector in C^4

    Basis order is e_{2*i1 + i0} = e_{i1} (x) e_{i0}, so index 0 of a
    tensor split is the most significant factor.
    """
    SIZE: ClassVar[int] = 4

    def as_matrix(self):
        """Entries reshaped to 2x2; its determinant is the t-invariant"""
        return self.vec.reshape(2, 2)

    @property
    def t(self) -> complex:
        """t(x) = x0 x3 - x1 x2"""
        return det2(self.as_matrix())
