"""Exception hierarchy.

Every error raised on bad input derives from :class:`ProjAreaError` (and from
``ValueError``) so callers can catch the whole family at once. The CLI maps
these to exit code 2.
"""


class ProjAreaError(ValueError):
    pass


class NegativeInput(ProjAreaError):
    pass


class NegativeEntry(ProjAreaError):
    pass


class NotSymmetric(ProjAreaError):
    pass


class EmptyInput(ProjAreaError):
    pass


class BadIndexPair(ProjAreaError):
    pass


class NotApplicable(ProjAreaError):
    pass


class NonIntegerInput(ProjAreaError):
    pass


class OutsideT2(ProjAreaError):
    pass


class NotOnBoundary(ProjAreaError):
    pass


class NotAllPositive(ProjAreaError):
    pass


class NotInterior(ProjAreaError):
    pass


class ToleranceNotPositive(ProjAreaError):
    pass


class SLessThanOne(ProjAreaError):
    pass


class IllFormed(ProjAreaError):
    pass


class DimensionMismatch(ProjAreaError):
    pass


class RangeError(ProjAreaError):
    pass


class ParseError(ProjAreaError):
    pass


class CertificateError(RuntimeError):
    """An internal construction produced a witness that failed recomputation.

    This is never the caller's fault; it signals a bug.
    """
