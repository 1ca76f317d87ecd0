"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParameterError(ValueError):
    """A parameter combination violates a validity constraint."""


class PoleError(DomainError):
    """Evaluation was requested at a pole."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation did not converge within its term budget."""


class StencilError(DomainError):
    """A finite-difference stencil would leave the open unit disk."""


class BoundaryFileError(ValueError):
    """A boundary-data document is malformed."""
