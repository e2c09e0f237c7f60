"""
Data model for per-state entanglement summaries
"""

from dataclasses import dataclass, asdict
from typing import Dict, Union


@dataclass(frozen=True)
class EntanglementReport:
    """
    Represents every entanglement quantity of one 2-quregister
    """
    nu: float
    nu_scaled: float
    t_abs: float
    s: float
    lambda0: float
    lambda1: float
    entropy: float
    separable: bool
    chart: int
    nu_spectral: float

    def to_dict(self) -> Dict[str, Union[float, int, bool]]:
        return asdict(self)
