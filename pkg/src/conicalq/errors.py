"""Exception hierarchy shared by all conicalq modules."""


class ConicalQError(Exception):
    """Base class for all conicalq errors."""


class DomainError(ConicalQError):
    """An argument lies outside the supported domain of an operation."""


class ConvergenceError(ConicalQError):
    """A series failed to meet its stop rule within the term budget."""


class RecursionOverflowError(ConicalQError):
    """Forward recursion in the order left the double-precision range.

    Carries the order at which the iterate stopped being finite.
    """

    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"recursion iterate overflowed at m={order}")


class DegenerateGeometryError(ConicalQError):
    """The evaluation point is too close to a geometric singularity."""
