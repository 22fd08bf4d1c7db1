"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A guard on an argument or a parameter combination failed."""


class NormalizationError(ParameterError):
    """A series or map violates the required normalization."""


class NonMemberError(ParameterError):
    """An operation that requires a class member received a non-member."""


class ConsistencyError(RuntimeError):
    """Two computation routes that must agree numerically failed to agree."""
