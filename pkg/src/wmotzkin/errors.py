"""Exception types shared by all wmotzkin modules."""


class MotzkinError(Exception):
    """Base class for all library errors."""


class ConfigError(MotzkinError, ValueError):
    """Invalid run configuration or malformed parameter input."""


class DomainError(MotzkinError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class RegimeError(MotzkinError, ValueError):
    """Operation not defined for the drift regime (or balance) of the model."""


class BoundaryError(MotzkinError, ValueError):
    """Saddle point does not exist at a boundary or mass-free lattice site."""


class CapacityError(MotzkinError):
    """Requested computation exceeds a configured size or memory budget."""


class AccuracyError(MotzkinError):
    """A numerical routine could not reach its required accuracy."""


class ConvergenceError(MotzkinError):
    """An iterative solver failed to converge within its limits."""
