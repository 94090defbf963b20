from typing import List, Type

import numpy as np

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    NegQuadraticStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import StiffnessDescription

NEG_QUADRATIC = "neg_quadratic"


class NegQuadraticStiffness(Stiffness):
    """β(x) = 1 - x²/2, positive only for |x| < √2"""

    name = NEG_QUADRATIC

    def __init__(self, configuration: NegQuadraticStiffnessConfiguration):
        super().__init__(configuration)

    def value(self, x: np.ndarray) -> np.ndarray:
        return 1.0 - 0.5 * np.asarray(x, dtype=float) ** 2

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        return -np.asarray(x, dtype=float)

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        return np.full(np.shape(x), -1.0)

    def critical_points(self) -> List[float]:
        return [0.0]

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return NegQuadraticStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=NEG_QUADRATIC, formula="1 - x**2/2", parameters=[]
        )
