from typing import List, Type

import numpy as np
from numpy.polynomial import Polynomial

from elastica.model.stiffness.stiffness import Stiffness
from elastica.schemas.stiffness.stiffness_configuration import (
    PolynomialStiffnessConfiguration,
    StiffnessConfiguration,
)
from elastica.schemas.stiffness.stiffness_description import (
    StiffnessDescription,
    StiffnessParameterDescription,
)

POLYNOMIAL = "polynomial"


class PolynomialStiffness(Stiffness):
    """β(x) = Σ coefficients[n] xⁿ"""

    name = POLYNOMIAL

    def __init__(self, configuration: PolynomialStiffnessConfiguration):
        super().__init__(configuration)
        self.polynomial = Polynomial(configuration.coefficients)
        self.derivative = self.polynomial.deriv(1)
        self.derivative2 = self.polynomial.deriv(2)

    def value(self, x: np.ndarray) -> np.ndarray:
        return self.polynomial(np.asarray(x, dtype=float))

    def first_derivative(self, x: np.ndarray) -> np.ndarray:
        return self.derivative(np.asarray(x, dtype=float))

    def second_derivative(self, x: np.ndarray) -> np.ndarray:
        return self.derivative2(np.asarray(x, dtype=float)) + np.zeros(np.shape(x))

    def critical_points(self) -> List[float]:
        if self.derivative.degree() < 1:
            return []
        roots = self.derivative.roots()
        return [float(r.real) for r in roots if abs(r.imag) < 1e-12]

    @staticmethod
    def get_configuration_model() -> Type[StiffnessConfiguration]:
        return PolynomialStiffnessConfiguration

    @staticmethod
    def get_description() -> StiffnessDescription:
        return StiffnessDescription(
            name=POLYNOMIAL,
            formula="sum(coefficients[n] * x**n)",
            parameters=[
                StiffnessParameterDescription(
                    key="coefficients",
                    optional=False,
                    description="Coefficients in increasing degree",
                )
            ],
        )
