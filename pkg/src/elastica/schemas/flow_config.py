import math
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import Field, root_validator, validator

from elastica.core.config import config
from elastica.schemas.base_class import BaseSchema


class SymmetryMode(Enum):
    """How the Fourier symmetry projection is applied after each step"""

    increment = "increment"  # project η^{n+1} - η^n, keeps the means
    verbatim = "verbatim"  # project η^{n+1} itself, drops the constant modes


class FlowConfig(BaseSchema):
    """Time step policy, Newton tolerances and stopping rules of a flow run.

    Unset values are taken from the [solver] section of the settings.
    """

    tau0: float = 1e-4
    tau_min: float = 1e-12
    tau_max: float = 1e-2
    grow_factor: float = Field(default_factory=lambda: config.solver.GROW_FACTOR)
    grow_threshold: float = Field(
        default_factory=lambda: config.solver.GROW_THRESHOLD
    )
    shrink_threshold: float = Field(
        default_factory=lambda: config.solver.SHRINK_THRESHOLD
    )
    # None means NEWTON_TOL_SCALE·√(2N), see `newton_tol_for`
    newton_tol_abs: Optional[float] = None
    newton_tol_rel: float = Field(default_factory=lambda: config.solver.NEWTON_TOL_REL)
    newton_max_iter: int = Field(
        default_factory=lambda: config.solver.NEWTON_MAX_ITER
    )
    t_final: float = 1.0
    stationarity_eps: float = Field(
        default_factory=lambda: config.solver.STATIONARITY_EPS
    )
    symmetry_k: Optional[int] = None
    symmetry_mode: SymmetryMode = SymmetryMode.increment
    snapshot_every: int = 100
    diagnostics_every: int = 1
    max_steps: Optional[int] = None
    max_rejections: int = Field(default_factory=lambda: config.solver.MAX_REJECTIONS)
    divergence_factor: float = Field(
        default_factory=lambda: config.solver.DIVERGENCE_FACTOR
    )

    @validator("grow_factor")
    def validate_grow_factor(cls, v: float) -> float:  # pylint: disable=E0213
        """The time step factor must enlarge the step"""
        if not v > 1:
            raise ValueError("grow_factor must be larger than one")
        return v

    @validator("symmetry_k")
    def validate_symmetry_k(cls, v: Optional[int]) -> Optional[int]:  # pylint: disable=E0213
        """A symmetry projection needs at least two-fold symmetry"""
        if v is not None and v < 2:
            raise ValueError("symmetry_k must be at least 2")
        return v

    @validator(
        "newton_tol_abs",
        "newton_tol_rel",
        "newton_max_iter",
        "t_final",
        "stationarity_eps",
        "snapshot_every",
        "diagnostics_every",
        "max_rejections",
    )
    def validate_positive(cls, v: Any) -> Any:  # pylint: disable=E0213
        """Tolerances, counts and horizons are positive"""
        if v is not None and not v > 0:
            raise ValueError("must be strictly positive")
        return v

    @root_validator
    @classmethod
    def validate_time_step_policy(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        """
        0 < tau_min ≤ tau0 ≤ tau_max and shrink_threshold > grow_threshold > 0.
        """
        tau_min, tau0, tau_max = (
            values.get("tau_min"),
            values.get("tau0"),
            values.get("tau_max"),
        )
        if None not in (tau_min, tau0, tau_max) and not 0 < tau_min <= tau0 <= tau_max:
            raise ValueError("time steps must satisfy 0 < tau_min <= tau0 <= tau_max")
        grow, shrink = values.get("grow_threshold"), values.get("shrink_threshold")
        if None not in (grow, shrink) and not shrink > grow > 0:
            raise ValueError(
                "thresholds must satisfy shrink_threshold > grow_threshold > 0"
            )
        return values

    def newton_tol_for(self, N: int) -> float:
        """Absolute Newton tolerance on a grid of N nodes"""
        if self.newton_tol_abs is not None:
            return self.newton_tol_abs
        return config.solver.NEWTON_TOL_SCALE * math.sqrt(2 * N)

    def resolved(self, N: int) -> Dict[str, Any]:
        """All values with defaults filled in, as recorded in run metadata"""
        values = self.dict()
        values["newton_tol_abs"] = self.newton_tol_for(N)
        values["symmetry_mode"] = self.symmetry_mode.value
        return values
