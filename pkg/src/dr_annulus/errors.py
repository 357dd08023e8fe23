"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InternalInconsistencyError(RuntimeError):
    """A geometric invariant failed; indicates a bug, not bad input.

    Raised e.g. when a square-root argument is negative far beyond float
    noise, or when a root is not bracketed where the shape analysis says
    it must be.
    """
