from typing import List

from pydantic import BaseModel


class StiffnessParameterDescription(BaseModel):
    """The description model for a single parameter of a stiffness family"""

    key: str
    optional: bool = True
    description: str


class StiffnessDescription(BaseModel):
    """The description model for a stiffness family"""

    name: str
    formula: str
    parameters: List[StiffnessParameterDescription]
