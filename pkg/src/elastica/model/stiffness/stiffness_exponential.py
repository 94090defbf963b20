from typing import List, Type

import numpy as np

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    ExponentialStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import (
    StiffnessDescription,
    StiffnessParameterDescription,
)

EXPONENTIAL = "exponential"


class ExponentialStiffness(Stiffness):
    """β(x) = exp(a x)"""

    name = EXPONENTIAL

    def __init__(self, configuration: ExponentialStiffnessConfiguration):
        super().__init__(configuration)
        self.a = configuration.a

    def value(self, x: np.ndarray) -> np.ndarray:
        return np.exp(self.a * np.asarray(x, dtype=float))

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        return self.a * self.value(x)

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        return self.a**2 * self.value(x)

    def critical_points(self) -> List[float]:
        return []

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return ExponentialStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=EXPONENTIAL,
            formula="exp(a*x)",
            parameters=[
                StiffnessParameterDescription(
                    key="a", description="Rate of the exponential, default 1"
                )
            ],
        )
