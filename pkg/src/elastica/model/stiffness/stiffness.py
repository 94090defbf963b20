from abc import ABC, abstractmethod
from typing import List, Type

import numpy as np

from elastica.common_exceptions import NonpositiveStiffness
from elastica.schemas.stiffness.stiffness_configuration import StiffnessConfiguration
from elastica.schemas.stiffness.stiffness_description import StiffnessDescription


class Stiffness(ABC):
    """Abstract base class for bending stiffness families β(ρ).

    Every family provides β, β' and β'' in closed form.
    """

    name: str = ""

    def __init__(self, configuration: StiffnessConfiguration):
        self.configuration = configuration

    @abstractmethod
    def value(self, x: np.ndarray) -> np.ndarray:
        """β(x)"""

    @abstractmethod
    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        """β'(x)"""

    @abstractmethod
    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        """β''(x)"""

    @abstractmethod
    def critical_points(self) -> List[float]:
        """Real zeros of β'"""

    @staticmethod
    @abstractmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        """Used to get the configuration model to configure the family"""

    @staticmethod
    @abstractmethod
    def get_description() -> StiffnessDescription:
        """Returns the description written to run metadata"""

    def positive_value(self, x: np.ndarray) -> np.ndarray:
        """β(x), raising NonpositiveStiffness if any entry is not strictly positive"""
        values = self.value(x)
        bad = np.flatnonzero(~(values > 0))
        if bad.size:
            raise NonpositiveStiffness(
                f"{self.name} stiffness is not positive at {bad.size} node(s), "
                f"first at x={float(np.asarray(x).flat[bad[0]]):.6g}"
            )
        return values

    def infimum(self, lower: float, upper: float) -> float:
        """inf β over the closed interval [lower, upper]"""
        if lower > upper:
            raise ValueError(f"empty interval [{lower}, {upper}]")
        candidates = [lower, upper] + [
            p for p in self.critical_points() if lower <= p <= upper
        ]
        return float(np.min(self.value(np.asarray(candidates, dtype=float))))

    def to_dict(self) -> dict:
        """Family name, parameters and description, as written to run metadata"""
        return {
            "family": self.name,
            "params": self.configuration.dict(),
            "description": self.get_description().dict(),
        }

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.configuration.dict().items())
        return f"{type(self).__name__}({params})"
