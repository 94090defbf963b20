from typing import List, Type

import numpy as np

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    QuadraticStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import (
    StiffnessDescription,
    StiffnessParameterDescription,
)

QUADRATIC = "quadratic"


class QuadraticStiffness(Stiffness):
    """β(x) = c + b x²"""

    name = QUADRATIC

    def __init__(self, configuration: QuadraticStiffnessConfiguration):
        super().__init__(configuration)
        self.c = configuration.c
        self.b = configuration.b

    def value(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return self.c + self.b * x**2

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        return 2.0 * self.b * np.asarray(x, dtype=float)

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        return np.full(np.shape(x), 2.0 * self.b)

    def critical_points(self) -> List[float]:
        return [0.0] if self.b != 0 else []

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return QuadraticStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=QUADRATIC,
            formula="c + b*x**2",
            parameters=[
                StiffnessParameterDescription(
                    key="c", optional=False, description="Value at x = 0"
                ),
                StiffnessParameterDescription(
                    key="b", description="Curvature of the parabola, default 1"
                ),
            ],
        )
