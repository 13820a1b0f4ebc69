class CascadeError(Exception):
    """Base class for every error raised by this package."""


class CellError(CascadeError, ValueError):
    """Illegal write or erase on a grid cell."""


class GenerationError(CascadeError):
    """Puzzle generation could not satisfy the requested constraints."""


class UnsatisfiablePuzzleError(CascadeError):
    """The given cells of a puzzle contradict each other."""


class ConfigError(CascadeError, ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
