"""Exception types shared across the package.

The CLI maps these onto exit codes: ParameterError -> 2,
DomainError (and subclasses) -> 3, ContractError -> 4.
"""


class ParameterError(ValueError):
    """A caller-supplied parameter is outside its documented range."""


class DomainError(ValueError):
    """An input lies outside the mathematical domain of an operation."""


class ModelValidityError(DomainError):
    """A model precondition fails, e.g. an edge probability outside [0, 1]."""


class DegenerateSpectrumError(DomainError):
    """A trailing eigenspace is numerically degenerate; per-vector
    quantities such as entrywise maxima are not well defined there."""


class ContractError(RuntimeError):
    """A numerical contract (shape, residual or tolerance guarantee)
    was violated."""
