"""Exception types shared across the library."""


class DualcoreError(Exception):
    """Base class for all library errors."""


class ParseError(DualcoreError):
    """Malformed scalar string, payload or ring descriptor."""


class DescriptorMismatch(DualcoreError):
    """Elements of different rings were mixed in one operation."""


class NotIdempotent(DualcoreError):
    """An element required to be idempotent is not."""


class NotInvertible(DualcoreError):
    """A compute path was requested for an element that has no inverse of the requested kind."""


class CorpusTooLarge(DualcoreError):
    """An exhaustive sweep request exceeds the configured tuple budget."""
