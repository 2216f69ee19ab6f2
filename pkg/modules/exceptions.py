"""
Error types shared by the quintic field modules
"""

from typing import Optional


class QuinticFieldError(ValueError):
    """Base class for every error raised by the classification modules"""


class FactorizationError(QuinticFieldError):
    """Integer outside the supported factorization range or malformed factored string"""


class RadicandError(QuinticFieldError):
    """Radicand that cannot be reduced to a valid pth-power-free value"""


class InconsistentInputError(QuinticFieldError):
    """Input values that contradict an arithmetic identity or precondition"""


class OracleLimitError(QuinticFieldError):
    """Brute-force enumeration bound too small for the requested conductor"""


class DatasetFormatError(QuinticFieldError):
    """Malformed dataset line"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
