"""Exception hierarchy."""


class CoxcellError(Exception):
    """Base class for errors raised by this package."""


class GraphError(CoxcellError, ValueError):
    """Malformed Coxeter graph description."""


class NotReducedError(CoxcellError, ValueError):
    pass


class CapExceededError(CoxcellError):
    """A length or size cap was hit (typically on an infinite group)."""


class InfiniteGroupError(CapExceededError):
    """Enumeration did not exhaust the group within the caps."""


class ConductorMismatch(CoxcellError, ValueError):
    pass


class RelationError(CoxcellError, ValueError):
    """Matrices do not satisfy the Coxeter relations."""


class PreconditionError(CoxcellError, ValueError):
    pass


class UnsupportedGraphError(CoxcellError, ValueError):
    pass
