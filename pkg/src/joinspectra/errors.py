"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Matrix or vector dimensions do not line up."""


class SpecError(ValueError):
    """A join specification (or its serialized form) is malformed."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PreconditionError(ValueError):
    """A documented precondition of a formula route was violated."""
