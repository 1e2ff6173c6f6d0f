"""Shared exception types."""


class ParseError(ValueError):
    """Malformed user input: group words, element literals, expression ASTs."""


class ResourceLimitError(RuntimeError):
    """A computation refused to run because an intermediate basis would
    exceed the configured cap."""
