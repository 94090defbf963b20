from typing import Any, Dict

from pydantic import BaseModel, validator

from elastica.model.stiffness.stiffness import Stiffness


class ModelParams(BaseModel):
    """The fixed model constants L, ν, μ, ω, c0 together with the stiffness β."""

    L: float
    nu: float = 0.0
    mu: float
    omega: int = 1
    c0: float = 0.0
    beta: Stiffness

    @validator("L", "mu")
    def validate_positive(cls, v: float) -> float:  # pylint: disable=E0213
        """Length and diffusivity must be strictly positive"""
        if not v > 0:
            raise ValueError("must be strictly positive")
        return v

    def to_dict(self) -> Dict[str, Any]:
        """JSON friendly form used in run metadata"""
        return {
            "L": self.L,
            "nu": self.nu,
            "mu": self.mu,
            "omega": self.omega,
            "c0": self.c0,
            "beta": self.beta.to_dict(),
        }

    class Config:
        """Stiffness objects are plain classes"""

        arbitrary_types_allowed = True
        allow_mutation = False
