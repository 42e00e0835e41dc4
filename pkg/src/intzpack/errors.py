class CorruptStreamError(ValueError):
    """Compressed input is truncated or inconsistent with its own headers."""


class ContainerError(ValueError):
    """A container file cannot be parsed."""
