"""Exception hierarchy. Each leaf class carries the CLI exit code it maps to."""


class StrongTieError(Exception):
    exit_code = 1


class ParseError(StrongTieError):
    exit_code = 2

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class InfeasibleCommunityError(StrongTieError):
    """A community is not connected under the given edge set."""

    exit_code = 3

    def __init__(self, index, message=None):
        super().__init__(message or f"community {index} is disconnected")
        self.index = index


class SizeCapError(StrongTieError):
    exit_code = 4


class PropertyCheckError(StrongTieError):
    exit_code = 5


class ContractViolation(StrongTieError, ValueError):
    """Precondition of an operation was not met by the caller."""

    exit_code = 1
