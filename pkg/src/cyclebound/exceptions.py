"""Exception types raised across the package."""


class CapExceeded(ValueError):
    """An exhaustive computation would exceed its configured size cap."""


class AcyclicError(ValueError):
    """A parameter is undefined because the digraph has no cycle."""


class NotSpecialError(ValueError):
    """A packing passed to a construction is not special."""


class InessentialInputError(ValueError):
    """A declared input of a network does not actually influence its component.

    Raised by operations that need the declared graph to coincide with the
    interaction graph.
    """


class ConstructionError(AssertionError):
    """A construction failed one of its own postconditions."""


class BudgetExceeded(ValueError):
    """The brute-force oracle would enumerate more candidates than allowed."""


class ProjectionError(ValueError):
    """Restricting fixed points to a vertex set lost injectivity or order."""
