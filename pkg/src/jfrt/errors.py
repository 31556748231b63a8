"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` for bad input
(shape, range, parse problems) and :class:`NumericalError` for failures of
the numerics themselves. The CLI maps them to exit codes 2 and 3.
"""


class JfrtError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(JfrtError, ValueError):
    pass


class NumericalError(JfrtError, ArithmeticError):
    pass


# -- linear algebra ---------------------------------------------------------

class NotHermitian(ValidationError):
    pass


class NotUnitary(ValidationError):
    pass


class NegativeEigenvalue(ValidationError):
    pass


class SizeOverflow(ValidationError):
    pass


class ConvergenceFailure(NumericalError):
    pass


# -- graphs and transforms --------------------------------------------------

class DegenerateGeometry(ValidationError):
    pass


class NotUndirected(ValidationError):
    pass


class TooSmall(ValidationError):
    pass


class Defective(NumericalError):
    """Matrix is not (numerically) diagonalizable."""


class NegativeOrder(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class NonRealQuadraticForm(NumericalError):
    pass


class FlavorMismatch(ValidationError):
    pass


# -- experiments ------------------------------------------------------------

class ParseError(ValidationError):
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)


class ZeroSignal(ValidationError):
    pass


class BadDensity(ValidationError):
    pass


class WindowTooLarge(ValidationError):
    pass


class GeometryMismatch(ValidationError):
    pass


class TooFewPoints(ValidationError):
    pass


class TooManyLabels(ValidationError):
    pass
