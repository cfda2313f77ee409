"""Exception hierarchy shared across the package.

Two families matter for the CLI exit codes: precondition/configuration
problems (exit 2) and numeric certification failures (exit 3).
"""


class PreconditionError(ValueError):
    """A documented precondition or configuration constraint was violated."""


class CapacityError(PreconditionError):
    """An enumeration or sieve guard would be exceeded."""


class ParameterRangeError(PreconditionError):
    """A parameter lies outside its admissible range."""

    def __init__(self, message: str, *, name: str = "", value=None, bound=None):
        super().__init__(message)
        self.name = name
        self.value = value
        self.bound = bound


class RatioTooSmallError(PreconditionError):
    """Moment ratio below the threshold required by the measure bound."""

    def __init__(self, ratio: float, threshold: float):
        super().__init__(
            f"moment ratio {ratio:.6g} is below the required threshold "
            f"{threshold:.6g}"
        )
        self.ratio = ratio
        self.threshold = threshold


class TableFormatError(PreconditionError):
    """A zero-table file failed to parse."""

    def __init__(self, message: str, *, line: int = 0):
        super().__init__(message)
        self.line = line


class CertificationError(RuntimeError):
    """A numeric self-check failed beyond its tolerance."""


class MissedZerosError(CertificationError):
    """Zero scan count disagrees with the counting formula."""

    def __init__(self, message: str, *, expected: int, found: int):
        super().__init__(message)
        self.expected = expected
        self.found = found


class CrossCheckError(CertificationError):
    """Two independent evaluation routes disagree beyond tolerance."""


class PrecisionUnreachableError(CertificationError):
    """The requested tolerance cannot be met within the configured budget."""
