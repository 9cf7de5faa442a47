"""Exception hierarchy.

Two families matter to callers: :class:`ValidationError` for bad inputs and
:class:`CodecError` for spectra that cannot be decoded into a delay. The CLI
maps them to exit codes 2 and 3.
"""


class DftSnnError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(DftSnnError, ValueError):
    pass


class InvalidPhase(ValidationError):
    pass


class SingularOrigin(ValidationError):
    pass


class InvalidSignal(ValidationError):
    pass


class InvalidSpectrum(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


class InvalidDelay(ValidationError):
    pass


class ImaginaryResidual(ValidationError):
    pass


class UnwritablePath(ValidationError):
    pass


class EmptyData(ValidationError):
    pass


class CodecError(DftSnnError):
    pass


class NoDelayInformation(CodecError):
    """The pattern is all zeros or all ones; there is no delay to recover."""


class NonUniformMagnitude(CodecError):
    pass


class NonLinearPhase(CodecError):
    pass


class NonIntegerDelay(CodecError):
    pass


class ZeroSpectrum(NoDelayInformation):
    pass


class ConstantSpectrum(NonUniformMagnitude, NoDelayInformation):
    """Only the DC coefficient is nonzero (a constant, e.g. all-ones, signal)."""
