"""Exception types raised across the package."""


class NBSError(Exception):
    """Base class for every error raised by nbsmooth."""


class InvalidParameterError(NBSError, ValueError):
    """A size, bandwidth, rank or other argument is outside its valid range."""


class InvalidSpecError(InvalidParameterError):
    """A graphon description is malformed."""


class InstanceTooSmallError(InvalidParameterError):
    """The network is too small for the requested computation."""


class ModelViolationError(NBSError, ValueError):
    """A graphon produced a value outside [0, 1]."""


class DimensionMismatchError(NBSError, ValueError):
    pass


class UndefinedCurveError(NBSError, ValueError):
    """No hidden positive or no hidden negative pairs: the ROC curve is undefined."""


class FormatError(NBSError, ValueError):
    """A matrix or edge-list file could not be parsed."""


class NumericalError(NBSError, ArithmeticError):
    pass
