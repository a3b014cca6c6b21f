"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class NewtonJumpError(Exception):
    exit_code = 4


class GermSyntaxError(NewtonJumpError, ValueError):
    """Malformed germ text. ``position`` is a 0-based character offset."""

    exit_code = 1

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidInputError(NewtonJumpError, ValueError):
    exit_code = 1


class NotConvenientError(NewtonJumpError, ValueError):
    exit_code = 2


class EngineMismatchError(NewtonJumpError, ValueError):
    exit_code = 3


class InvariantViolation(NewtonJumpError, RuntimeError):
    exit_code = 4
