from typing import List, Type

import numpy as np

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    DoubleWellStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import (
    StiffnessDescription,
    StiffnessParameterDescription,
)

DOUBLE_WELL = "double_well"


class DoubleWellStiffness(Stiffness):
    """β(x) = (x² - 1)² + c, minimal at x = ±1"""

    name = DOUBLE_WELL

    def __init__(self, configuration: DoubleWellStiffnessConfiguration):
        super().__init__(configuration)
        self.c = configuration.c

    def value(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return (x**2 - 1.0) ** 2 + self.c

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return 4.0 * x * (x**2 - 1.0)

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return 12.0 * x**2 - 4.0

    def critical_points(self) -> List[float]:
        return [-1.0, 0.0, 1.0]

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return DoubleWellStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=DOUBLE_WELL,
            formula="(x**2 - 1)**2 + c",
            parameters=[
                StiffnessParameterDescription(
                    key="c", optional=False, description="Height of the wells"
                )
            ],
        )
