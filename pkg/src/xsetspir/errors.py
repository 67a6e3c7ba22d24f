"""Exception types shared across the package."""


class FieldMismatchError(ValueError):
    """Operands belong to different finite fields."""


class SingularMatrixError(ValueError):
    """A square matrix required to be invertible is rank deficient."""

    def __init__(self, rank: int, size: int):
        self.rank = rank
        self.size = size
        super().__init__(f"singular matrix: rank {rank} < size {size}")


class ParameterError(ValueError):
    """Scheme or scenario parameters violate an invariant."""


class BudgetExceededError(RuntimeError):
    """Exact enumeration would exceed the configured work budget."""


class AuditModelError(RuntimeError):
    """An adversary view could not be expressed in the expected linear form."""
