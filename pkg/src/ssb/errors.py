"""Exception types shared across the package."""


class SsbError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParams(SsbError):
    """Family parameters violate the admissibility constraints."""


class NonAdmissible(SsbError):
    """A relation has a component of path-length < 2."""


class NotFiniteDimensional(SsbError):
    """Path closure exceeded the configured length bound."""


class NonConfluent(SsbError):
    """Rewriting could not be completed to a confluent system."""


class NotSymmetric(SsbError):
    """The socle-indicator form fails symmetry or nondegeneracy."""


class CharZero(SsbError):
    """Power-map ideals are undefined in characteristic zero."""


class CharUnsupported(SsbError):
    """A classifier branch was reached in an impossible characteristic."""


class NotAnIdeal(SsbError):
    """The given subspace is not an ideal of the ambient algebra."""


class UnsupportedDegree(SsbError):
    """Cohomology requested beyond the supported resolution range."""


class ComplexCheckFailed(SsbError):
    """Composite of consecutive differentials is nonzero."""


class ExactnessFailure(SsbError):
    """The induced complex of right modules is not exact where required."""


class NoSquareRoot(SsbError):
    """The working field has no square root of -1."""


class TooLarge(SsbError):
    """Input exceeds a brute-force oracle's size bound."""


class ParseError(SsbError):
    """Syntax error in a presentation document or family string."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, col {column}: {message}"
        super().__init__(message)


class ValidationError(SsbError):
    """A parsed document is syntactically fine but semantically invalid."""
