from typing import Sequence

import numpy as np
from scipy import stats

from elastica.common_exceptions import InsufficientData

MIN_SAMPLES = 10


class DecayFit:
    """Exponential rate r of v(t) ≈ C e^{-rt} and the correlation of the log-linear fit"""

    def __init__(self, rate: float, correlation: float, samples: int):
        self.rate = rate
        self.correlation = correlation
        self.samples = samples

    def __repr__(self) -> str:
        return f"DecayFit(rate={self.rate:.6g}, r={self.correlation:.4f}, samples={self.samples})"


def density_decay_fit(times: Sequence[float], values: Sequence[float]) -> DecayFit:
    """Least-squares slope of log(values) against times over the last half of the trace.

    `values` is typically ‖ρ - ν‖² along a flow run.
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if t.shape != v.shape or t.ndim != 1:
        raise InsufficientData("times and values must be 1-d sequences of equal length")
    if t.size < MIN_SAMPLES:
        raise InsufficientData(f"Need at least {MIN_SAMPLES} samples, got {t.size}")
    if np.any(v <= 0) or not np.all(np.isfinite(v)):
        raise InsufficientData("Decay fit needs finite positive values")

    tail = slice(t.size // 2, None)
    fit = stats.linregress(t[tail], np.log(v[tail]))
    return DecayFit(
        rate=-float(fit.slope),
        correlation=float(fit.rvalue),
        samples=t.size - t.size // 2,
    )
