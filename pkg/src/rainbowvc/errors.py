"""Exception types shared across the package."""


class RainbowError(Exception):
    """Base class for all package errors."""


class GraphError(RainbowError, ValueError):
    pass


class ParseError(RainbowError, ValueError):
    """Malformed graph or coloring text.

    ``kind`` is one of ``malformed``, ``range``, ``loop``, ``duplicate``,
    ``count``, ``missing`` or ``color``.
    """

    def __init__(self, message: str, kind: str = "malformed"):
        super().__init__(message)
        self.kind = kind


class ColoringError(RainbowError, ValueError):
    pass


class PaletteTooLarge(ColoringError):
    pass


class GuardExceeded(RainbowError, ValueError):
    """An exhaustive routine was asked to run on an input beyond its size guard."""


class FamilyError(RainbowError, ValueError):
    pass
