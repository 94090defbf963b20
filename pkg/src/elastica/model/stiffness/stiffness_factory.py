from enum import Enum
from typing import Any, Dict, List, Type

from pydantic import ValidationError

from elastica.common_exceptions import ConfigurationError, NoSuchStiffnessException
from elastica.model.stiffness.stiffness import Stiffness
from elastica.model.stiffness.stiffness_double_well import DoubleWellStiffness
from elastica.model.stiffness.stiffness_exponential import ExponentialStiffness
from elastica.model.stiffness.stiffness_neg_quadratic import NegQuadraticStiffness
from elastica.model.stiffness.stiffness_polynomial import PolynomialStiffness
from elastica.model.stiffness.stiffness_quadratic import QuadraticStiffness
from elastica.model.stiffness.stiffness_shifted_quartic import (
    ShiftedQuarticStiffness,
)


class SupportedStiffnessFamilies(Enum):
    """
    The closed set of stiffness families; each has closed form derivatives.
    """

    exponential = ExponentialStiffness
    quadratic = QuadraticStiffness
    double_well = DoubleWellStiffness
    shifted_quartic = ShiftedQuarticStiffness
    neg_quadratic = NegQuadraticStiffness
    polynomial = PolynomialStiffness


def get_stiffness(family_name: str, configuration: Dict[str, Any]) -> Stiffness:
    """
    Returns the stiffness given the family name and its parameters.
    Raises NoSuchStiffnessException if the family does not exist
    """
    if family_name not in SupportedStiffnessFamilies.__members__:
        valid_families = ", ".join([s.name for s in SupportedStiffnessFamilies])
        raise NoSuchStiffnessException(
            f"Stiffness family '{family_name}' does not exist. Valid families are [{valid_families}]"
        )
    family: Type[Stiffness] = SupportedStiffnessFamilies[family_name].value
    try:
        family_config = family.get_configuration_model()(**configuration)
        return family(configuration=family_config)  # type: ignore
    except ValidationError as e:
        raise ConfigurationError(message=str(e), key="beta.params")


def get_families() -> List[Type[Stiffness]]:
    """Returns all supported stiffness families"""
    return [e.value for e in SupportedStiffnessFamilies]
