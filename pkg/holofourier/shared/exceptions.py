"""Custom exception hierarchy for holofourier."""


class HoloFourierError(Exception):
    """Base exception for all holofourier errors."""

    pass


class ConfigError(HoloFourierError):
    """Raised when configuration validation fails."""

    pass


class InvalidArgumentError(HoloFourierError):
    """Raised when an operation's preconditions are violated."""

    pass


class UndefinedMetricError(InvalidArgumentError):
    """Raised when a quality metric has no defined value (e.g. PSNR of a zero reference)."""

    pass


class InvalidStateError(HoloFourierError):
    """Raised when an object is not in a state that allows the operation."""

    pass


class FormatError(HoloFourierError):
    """Raised when image, signal, hologram or packet bytes cannot be parsed."""

    pass


class ProtocolError(HoloFourierError):
    """Raised when a packet does not belong to the receiver's stream."""

    pass


class IntegrityError(HoloFourierError):
    """Raised when checksums fail or duplicate packets disagree."""

    pass


class StorageError(HoloFourierError):
    """Raised when artifact files cannot be read or written."""

    pass
