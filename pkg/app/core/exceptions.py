"""
Errors raised by the analysis pipeline.

Every error carries the process exit code the management commands use
when they turn it into a ``CommandError``.
"""


class KeyClassError(Exception):
    """Base class for all analysis errors."""
    exit_code = 1


class ArgumentError(KeyClassError, ValueError):
    """A pure function was called with arguments outside its domain."""


class GraphConstructionError(ArgumentError):
    pass


class UnknownNodeError(KeyClassError, LookupError):
    def __init__(self, node):
        super().__init__(f'Unknown node: {node!r}')
        self.node = node


class GraphFormatError(KeyClassError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)
        self.line_number = line_number


class SourceParseError(KeyClassError):
    def __init__(self, message, path='<string>', line=None):
        location = path if line is None else f'{path}:{line}'
        super().__init__(f'{location}: {message}')
        self.path = path
        self.line = line
        self.reason = message


class ModelError(KeyClassError):
    pass


class ConfigError(KeyClassError):
    pass


class EmptyInputError(KeyClassError):
    exit_code = 2


class InvariantViolation(KeyClassError):
    exit_code = 3
