"""Exception types raised by the library.

All of them derive from :class:`FSCodeError` (itself a ``ValueError``) so
callers can catch the whole family at once.
"""


class FSCodeError(ValueError):
    pass


class NotPrime(FSCodeError):
    pass


class DegreeOutOfRange(FSCodeError):
    pass


class NoPrimitivePolynomialFound(FSCodeError):
    pass


class FieldMismatch(FSCodeError):
    pass


class AmbientMismatch(FSCodeError):
    pass


class NontrivialIntersection(FSCodeError):
    pass


class DimensionOverflow(FSCodeError):
    pass


class FoldingTooLarge(FSCodeError):
    pass


class DegreeTooLarge(FSCodeError):
    pass


class BadS(FSCodeError):
    pass


class MessageDegreeTooLarge(FSCodeError):
    pass


class DegreeTooSmall(FSCodeError):
    pass


class OutOfRange(FSCodeError):
    pass


class RadiusViolation(FSCodeError):
    pass


class ConfigInvalid(FSCodeError):
    pass
