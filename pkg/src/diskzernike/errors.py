"""Exception hierarchy."""


class ZernikeError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(ZernikeError, ValueError):
    """A weight parameter is outside its admissible range."""


class ParameterMismatchError(ParameterError):
    """Polynomials with different weight parameters were combined."""


class ConstructionError(ZernikeError, ValueError):
    pass


class DomainError(ZernikeError, ValueError):
    pass


class ArgumentError(ZernikeError, ValueError):
    pass


class PreconditionError(ZernikeError, ValueError):
    pass


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha > -1.0:
        raise ParameterError(f"weight parameter must be > -1, got {alpha!r}")
    return alpha
