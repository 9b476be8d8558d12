class HyperMetException(Exception):
    """
    Base HyperMet exception
    """


class HyperMetValueError(HyperMetException):
    """Input is well formed but violates a metric or geometric requirement"""

    pass


class HyperMetParseError(HyperMetException):
    """Input file could not be read in any supported format"""

    pass


class HyperMetTypeError(HyperMetException):
    pass


# distance matrices
class NonSquare(HyperMetValueError):
    pass


class Asymmetric(HyperMetValueError):
    pass


class NegativeEntry(HyperMetValueError):
    pass


class NonFiniteEntry(HyperMetValueError):
    pass


class NonZeroDiagonal(HyperMetValueError):
    pass


class ZeroOffDiagonal(HyperMetValueError):
    pass


class DuplicateLabel(HyperMetValueError):
    pass


class TriangleViolation(HyperMetValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IndexOutOfRange(HyperMetValueError):
    pass


class DuplicateIndex(HyperMetValueError):
    pass


class EmptySubset(HyperMetValueError):
    pass


# four point analysis
class NonPositiveEpsilon(HyperMetValueError):
    pass


class BracketDoesNotStraddle(HyperMetValueError):
    pass


class NegativeInput(HyperMetValueError):
    pass


# domains and boundary metric
class EmptyBoundary(HyperMetValueError):
    pass


class PointOnBoundary(HyperMetValueError):
    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class DuplicatePoint(HyperMetValueError):
    def __init__(self, message, label=None):
        super().__init__(message)
        self.label = label


class NonPositiveR(HyperMetValueError):
    pass


# model spaces
class ConstraintViolation(HyperMetValueError):
    pass


class NonUnitDirection(HyperMetValueError):
    pass


class CoincidentPoints(HyperMetValueError):
    pass


class AntipodalPoints(HyperMetValueError):
    pass


class ParameterOutOfRange(HyperMetValueError):
    pass


class ConfigurationError(HyperMetValueError):
    pass
