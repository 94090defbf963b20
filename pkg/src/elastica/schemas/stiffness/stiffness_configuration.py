from typing import List

from pydantic import BaseModel, validator


class StiffnessConfiguration(BaseModel):
    """Base class for stiffness family configuration"""

    class Config:
        """Unknown parameters are a configuration error"""

        extra = "forbid"


class ExponentialStiffnessConfiguration(StiffnessConfiguration):
    """Configuration for x ↦ exp(a x)"""

    a: float = 1.0


class QuadraticStiffnessConfiguration(StiffnessConfiguration):
    """Configuration for x ↦ c + b x²"""

    c: float
    b: float = 1.0


class DoubleWellStiffnessConfiguration(StiffnessConfiguration):
    """Configuration for x ↦ (x² - 1)² + c"""

    c: float


class ShiftedQuarticStiffnessConfiguration(StiffnessConfiguration):
    """Configuration for x ↦ c + (x - x0)⁴"""

    c: float
    x0: float = 0.0


class NegQuadraticStiffnessConfiguration(StiffnessConfiguration):
    """x ↦ 1 - x²/2 has no parameters"""


class PolynomialStiffnessConfiguration(StiffnessConfiguration):
    """Coefficients in increasing degree, x ↦ Σ coefficients[n] xⁿ"""

    coefficients: List[float]

    @validator("coefficients")
    def validate_coefficients(cls, v: List[float]) -> List[float]:  # pylint: disable=E0213
        """At least the constant term is required"""
        if not v:
            raise ValueError("coefficients must not be empty")
        return v
