"""Exception hierarchy shared by all modules."""


class FrobtailError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FrobtailError, ValueError):
    pass


class UnknownVariable(ParseError):
    def __init__(self, name, offset=None):
        self.name = name
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"unknown variable {name!r}{where}")


class PolynomialSyntaxError(ParseError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at byte offset {offset})")


class ExponentOverflow(ParseError):
    pass


class RingMismatch(FrobtailError, ValueError):
    pass


class NonHomogeneousInput(FrobtailError, ValueError):
    pass


NonHomogeneousMatrix = NonHomogeneousInput
NonHomogeneous = NonHomogeneousInput


class ModuleMismatch(FrobtailError, ValueError):
    pass


class ZeroDivisorArgument(FrobtailError, ValueError):
    pass


class PrefixTooShort(FrobtailError, ValueError):
    pass


class NotArtinian(FrobtailError):
    pass


class NotGradeThree(FrobtailError):
    pass


class NotGorenstein(FrobtailError):
    pass


class NotAPowerOfP(FrobtailError, ValueError):
    pass


class FDegreeNotThree(FrobtailError, ValueError):
    pass


class SocleNotPure(FrobtailError, ValueError):
    pass


class PeriodicityNotDetected(FrobtailError):
    pass


class CorrectionNotInvertible(FrobtailError):
    pass


class OddSize(FrobtailError, ValueError):
    pass


class NoInvertibleSolution(FrobtailError):
    pass


class SingularInput(FrobtailError, ValueError):
    pass


class ConfigError(FrobtailError, ValueError):
    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class BudgetExceeded(FrobtailError):
    def __init__(self, message, last_completed=None):
        self.last_completed = last_completed
        super().__init__(message)
