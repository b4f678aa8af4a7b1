"""Exception hierarchy shared by every module.

Validation errors (bad numeric input) and decode errors (bad file bytes)
are kept on separate branches so the CLI can map them to distinct exit
codes.
"""


class WeberBitsError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(WeberBitsError, ValueError):
    """Input violates a domain precondition."""


class NonPositiveInput(ValidationError):
    """A magnitude or threshold that must be strictly positive is not."""


class BelowThreshold(ValidationError):
    """Stimulus magnitude is below its perception threshold."""


class UnitMismatch(ValidationError):
    """Two quantities that must share a unit tag do not."""


class NegativeResponse(ValidationError):
    """A response magnitude that must be non-negative is negative."""


class InvalidSteps(ValidationError):
    """Step count for numerical integration must be at least 1."""


class OutOfRange(ValidationError):
    """Probability outside the half-open interval (0, 1]."""


class InvalidDistribution(ValidationError):
    """Probability vector with a negative entry or a sum away from 1."""


class WindowTooLarge(ValidationError):
    """Analysis window longer than the available samples."""


class InvalidHop(ValidationError):
    """Hop size outside [1, window_size]."""


class DecodeError(WeberBitsError):
    """Base class for audio decode failures."""


class UnsupportedFormat(DecodeError):
    """Well-formed RIFF/WAVE file using an unsupported encoding."""


class CorruptFile(DecodeError):
    """Byte stream that is not a well-formed RIFF/WAVE file."""
