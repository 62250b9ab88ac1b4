"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class SingularityError(DomainError):
    """Evaluation exactly on the collision set q3 = q4 with mu > 0."""


class CollisionApproachError(RuntimeError):
    """Direct integration got too close to collision; switch to the regularized chart."""


class LevelSetError(DomainError):
    """Regularized initial condition is off the L = 0 level set."""


class ConvergenceError(RuntimeError):
    """An iterative solver failed to meet its tolerance."""
