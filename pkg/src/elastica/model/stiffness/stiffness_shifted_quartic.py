from typing import List, Type

import numpy as np

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    ShiftedQuarticStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import (
    StiffnessDescription,
    StiffnessParameterDescription,
)

SHIFTED_QUARTIC = "shifted_quartic"


class ShiftedQuarticStiffness(Stiffness):
    """β(x) = c + (x - x0)⁴"""

    name = SHIFTED_QUARTIC

    def __init__(self, configuration: ShiftedQuarticStiffnessConfiguration):
        super().__init__(configuration)
        self.c = configuration.c
        self.x0 = configuration.x0

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.c + (np.asarray(x, dtype=float) - self.x0) ** 4

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        return 4.0 * (np.asarray(x, dtype=float) - self.x0) ** 3

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        return 12.0 * (np.asarray(x, dtype=float) - self.x0) ** 2

    def critical_points(self) -> List[float]:
        return [self.x0]

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return ShiftedQuarticStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=SHIFTED_QUARTIC,
            formula="c + (x - x0)**4",
            parameters=[
                StiffnessParameterDescription(
                    key="c", optional=False, description="Minimum value"
                ),
                StiffnessParameterDescription(
                    key="x0", description="Location of the minimum, default 0"
                ),
            ],
        )
