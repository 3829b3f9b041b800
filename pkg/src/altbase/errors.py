"""Exception hierarchy shared by the library and the CLI.

Each error class carries the process exit code the CLI uses for it.
"""


class AltBaseError(Exception):
    exit_code = 1


class ParseError(AltBaseError, ValueError):
    exit_code = 2

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DomainError(AltBaseError, ValueError):
    exit_code = 3


class InvalidAlgebraic(DomainError):
    pass


class FieldTooLarge(DomainError):
    pass


class ContextMismatch(DomainError):
    pass


class UnresolvedError(AltBaseError):
    exit_code = 4


class HypothesisViolated(AltBaseError):
    exit_code = 5
