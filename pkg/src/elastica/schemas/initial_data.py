from enum import Enum
from typing import Any, Dict, Optional

from pydantic import root_validator

from elastica.schemas.base_class import BaseSchema


class InitialDataKind(Enum):
    """Generators selectable through `initial.kind`"""

    circle = "circle"
    perturbed_circle = "perturbed_circle"
    random_perturbed_circle = "random_perturbed_circle"
    stadium = "stadium"
    neck = "neck"
    lemniscate = "lemniscate"
    double_lemniscate = "double_lemniscate"
    file = "file"


class InitialDataSpec(BaseSchema):
    """Initial datum of a run"""

    kind: InitialDataKind = InitialDataKind.circle
    params: Dict[str, Any] = {}
    file: Optional[str] = None
    project: bool = True

    @root_validator
    @classmethod
    def validate_file(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        """`initial.file` is required exactly for file input"""
        if values.get("kind") == InitialDataKind.file and not values.get("file"):
            raise ValueError("initial.file is required when initial.kind is 'file'")
        return values
