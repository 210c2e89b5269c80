"""Exception hierarchy shared by every module."""


class GrassError(ValueError):
    """Base class for all library errors."""


class NotPrime(GrassError):
    pass


class SizeLimitExceeded(GrassError):
    """A field, enumeration or search would exceed a configured cap."""


class IrreducibleNotFound(RuntimeError):
    """Raised only if the modulus search fails, which cannot happen for valid input."""


class LevelMismatch(GrassError):
    pass


class DivisionByZero(GrassError, ZeroDivisionError):
    pass


class TooManyVectors(GrassError):
    pass


class ZeroSpace(GrassError):
    pass


class ZeroVector(GrassError):
    pass


class DependentInput(GrassError):
    pass


class AmbientMismatch(GrassError):
    pass


class ParamMismatch(GrassError):
    pass


class BadSubset(GrassError):
    pass


class BadDim(GrassError):
    pass


class DependentPair(GrassError):
    pass


class OddCharacteristic(GrassError):
    pass


class OddN(GrassError):
    pass


class DimMismatch(GrassError):
    pass


class NotLines(GrassError):
    pass
