from __future__ import annotations


class MdBurstError(Exception):
    """Root of every error raised by mdburst."""


class ParameterError(MdBurstError, ValueError):
    """A construction or operation precondition does not hold."""


class CapExceededError(ParameterError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, value: int, cap: int) -> None:
        super().__init__(f"{what}={value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


class ConstructionError(MdBurstError, RuntimeError):
    """An internal consistency check failed while building an object."""


class FormatError(MdBurstError, ValueError):
    """A spec, word or design file could not be parsed."""
