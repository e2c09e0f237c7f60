"""
Data model for one row of the x_p family sweep
"""

from dataclasses import dataclass
from typing import List, Tuple

CSV_HEADER: Tuple[str, ...] = ('p', 'nu', 'spectral_norm_minus_1', 'entropy')


@dataclass(frozen=True)
class SweepRow:
    """
    Represents the plotted quantities at one value of p
    """
    p: float
    nu: float
    spectral_norm_minus_1: float
    entropy: float

    @property
    def nu_gap(self) -> float:
        """Disagreement between the closed-form and spectral-norm measures"""
        return abs(self.nu - self.spectral_norm_minus_1)

    def as_csv_fields(self) -> List[str]:
        # repr keeps 17 significant digits so values parse back exactly
        return [repr(self.p), repr(self.nu), repr(self.spectral_norm_minus_1), repr(self.entropy)]
