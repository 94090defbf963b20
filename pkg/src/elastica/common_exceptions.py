from typing import List, Optional


class ElasticaException(Exception):
    """Base class for elastica exceptions"""

    def __init__(self, message: str, errors: Optional[List[str]] = None):
        super().__init__(message)
        self.message = message
        self.errors = errors or []


class NonpositiveStiffness(ElasticaException):
    """The stiffness evaluated to a nonpositive value at some node."""


class SingularPi(ElasticaException):
    """The Gram matrix of (sin θ, cos θ) is numerically singular."""


class DegenerateEdge(ElasticaException):
    """A polyline edge is too short to take part in an intersection test."""


class IncompatibleGrid(ElasticaException):
    """The symmetry order does not divide the number of nodes."""


class InsufficientData(ElasticaException):
    """Not enough (or not positive) samples to fit a decay rate."""


class LinearSolveFailure(ElasticaException):
    """The bordered KKT matrix could not be factorized."""


class SingularKKT(LinearSolveFailure):
    """The KKT matrix of the stationary problem is singular."""


class NewtonDivergence(ElasticaException):
    """The Newton residual grew beyond the divergence factor."""


class StepStalled(ElasticaException):
    """Too many consecutive rejected time steps."""


class InfeasibleInitialState(ElasticaException):
    """The initial datum violates the constraints or the requested symmetry."""


class ProjectionFailure(ElasticaException):
    """Constraint restoration did not converge."""


class FormatError(ElasticaException):
    """A state file does not have the expected layout."""


class DimensionMismatch(ElasticaException):
    """A state file holds a different number of nodes than the grid."""


class ConfigurationError(ElasticaException):
    """A run configuration is missing a key or holds an invalid value."""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message, [key] if key else [])
        self.key = key


class NoSuchStiffnessException(ValueError):
    """Exception for when a stiffness family does not exist"""


class MissingConfig(Exception):
    """Custom exception for when no valid configuration file is provided."""
