"""Exception hierarchy shared by every evaluator in the package."""


class GenBesselError(Exception):
    """Base class for all errors raised by genbessel."""


class PoleError(GenBesselError):
    """Argument sits on a pole of the function being evaluated."""


class DomainError(GenBesselError):
    """Argument outside the domain where the routine is defined."""


class ParameterError(GenBesselError):
    """Inadmissible parameter, e.g. a nonpositive-integer denominator."""


class ConvergenceError(GenBesselError):
    """A series or iteration hit its term cap before meeting tolerance.

    The best partial result, when one exists, is attached as ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ContourError(ConvergenceError):
    """Contour truncation could not be certified within the height cap."""
