"""Exception types.  The CLI maps these onto exit codes."""


class WidthLabError(Exception):
    """Base for validation and precondition failures (CLI exit code 2)."""


class DimensionMismatchError(WidthLabError):
    pass


class UnsupportedDimensionError(WidthLabError):
    pass


class EmptyIntersectionError(WidthLabError):
    pass


class NotConstantWidthError(WidthLabError):
    pass


class FiberMismatchError(WidthLabError):
    pass


class InvalidBoundError(WidthLabError):
    pass


class MaxIterationsError(WidthLabError):
    pass


class BodySchemaError(WidthLabError):
    """Body JSON violation, carrying a JSON pointer to the offending field."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        super().__init__(f"{pointer or '/'}: {message}")


class CheckFailedError(Exception):
    """An assertion-style check failed (CLI exit code 1)."""
