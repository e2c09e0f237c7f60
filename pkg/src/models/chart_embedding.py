"""
Data models for chart embeddings and tensor splits
"""

from dataclasses import dataclass

import numpy as np

from models.qubit import Qubit
from models.quregister import Quregister2
from services.linalg_core import CMat, kron_vec


@dataclass(frozen=True, eq=False)
class ChartEmbedding:
    """
    Represents the 4x4 image of a quregister under the chart-k embedding with gauge u
    """
    matrix: CMat
    chart: int
    gauge: complex

    @property
    def anchor(self) -> np.ndarray:
        """Column 0, which always equals the source quregister"""
        return self.matrix[:, 0]


@dataclass(frozen=True, eq=False)
class TensorSplit:
    """
    Represents a separable quregister written as c0 (x) c1
    """
    c0: Qubit
    c1: Qubit
    chart: int
    gauge: complex
    radius: float  # r02 for charts 0 and 2, r13 for charts 1 and 3

    def product(self) -> Quregister2:
        """Rebuild the quregister from its factors"""
        return Quregister2.from_vector(kron_vec(self.c0.vec, self.c1.vec), normalize=True)
