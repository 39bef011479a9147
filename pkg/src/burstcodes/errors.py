"""Exception hierarchy shared by all modules."""


class BurstCodeError(Exception):
    """Base class for every error raised by this package."""


class RangeError(BurstCodeError, ValueError):
    """An index, burst or residue lies outside its valid range."""


class ShapeError(BurstCodeError, ValueError):
    """Lengths of the inputs are inconsistent with each other."""


class FormatError(BurstCodeError, ValueError):
    """Malformed textual input or a string outside an encoder's image."""


class DomainError(BurstCodeError, ValueError):
    """Input violates a structural requirement (e.g. a non-dense string)."""


class EncodeError(BurstCodeError, ValueError):
    """A value cannot be represented in the requested layout."""


class ResourceLimitError(BurstCodeError):
    """Exhaustive enumeration was requested above the configured limit."""


class DecodeFailure(BurstCodeError):
    """No codeword is consistent with the received string."""

    def __init__(self, message, stage=None):
        super().__init__(message)
        self.stage = stage


class AmbiguityError(BurstCodeError):
    """More than one codeword is consistent with the received string.

    For inputs satisfying a decoder's preconditions this indicates a bug.
    """
