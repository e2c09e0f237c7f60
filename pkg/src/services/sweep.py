"""
Figure data for the x_p family
"""

import time
import uuid
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from aws_lambda_powertools import Logger

from config import SERVICE_NAME
from models.sweep_row import SweepRow
from services.density import reduced_entropy, rho2
from services.linalg_core import spectral_norm
from services.quregister_charts import nu_closed_form, phi, x_p_family

logger = Logger(service=SERVICE_NAME, child=True)

MIN_STEPS = 2


def sweep_row(p: float) -> SweepRow:
    """
    Measure x_p: closed-form nu, ||Phi(x_p)||_2 - 1 and the reduced entropy

    x_0 = e3 lies outside chart 0, so p = 0 is embedded in chart 3.
    """
    x = x_p_family(p)
    chart = 0 if p > 0 else 3
    return SweepRow(
        p=p,
        nu=nu_closed_form(x),
        spectral_norm_minus_1=spectral_norm(phi(x, chart).matrix) - 1.0,
        entropy=reduced_entropy(rho2(x), 0)
    )


class SweepEngine:
    """
    Evaluates the x_p family on an even grid of p
    """

    def __init__(self, workers: int = 1, correlation_id: Optional[str] = None):
        """
        Args:
            workers: Thread count for row evaluation; output order never depends on it
            correlation_id: Optional correlation ID for tracking
        """
        self.workers = max(1, workers)
        self.correlation_id = correlation_id or str(uuid.uuid4())

    @staticmethod
    def grid(steps: int) -> List[float]:
        """p = i / (steps - 1) for i = 0 .. steps - 1"""
        if steps < MIN_STEPS:
            raise ValueError(f"steps must be at least {MIN_STEPS}, got {steps}")
        return [i / (steps - 1) for i in range(steps)]

    def run(self, steps: int) -> List[SweepRow]:
        """
        Compute one row per grid point, ordered by p
        """
        start = time.time()
        grid = self.grid(steps)
        if self.workers == 1:
            rows = [sweep_row(p) for p in grid]
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                rows = list(pool.map(sweep_row, grid))

        worst_gap = max(row.nu_gap for row in rows)
        logger.info("Sweep completed", extra={
            "correlation_id": self.correlation_id,
            "operation": "sweep_xp",
            "steps": steps,
            "workers": self.workers,
            "max_nu_gap": worst_gap,
            "execution_time_seconds": round(time.time() - start, 3)
        })
        return rows
