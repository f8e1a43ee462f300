"""Exception hierarchy shared by all wdtk modules."""


class WdtkError(Exception):
    """Base class for all errors raised by wdtk."""


class DomainError(WdtkError):
    """Arithmetic request that the coefficient domain cannot satisfy
    (division by zero, non-unit inversion, incompatible cyclotomic orders,
    unassigned variables, ...)."""


class ShapeError(WdtkError):
    """Matrix dimension or structural mismatch."""


class ParseError(WdtkError):
    """Malformed scalar expression or input document."""


class ValidationFailed(WdtkError):
    """An object failed its invariant checks where a valid one was required."""


class NotApplicable(WdtkError):
    """Operation is well defined but not applicable to this input
    (e.g. block decomposition of a non-semisimple Frobenius)."""


class Undecidable(WdtkError):
    """The requested verdict needs eigenvalue data outside the supported
    monomial form zeta^a * q^b."""


class SearchInconclusive(WdtkError):
    """A bounded deterministic search ended without a certificate either way."""
