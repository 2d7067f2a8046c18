class CodePropsError(Exception):
    """Base class for errors raised by this package."""


class AlphabetError(CodePropsError, ValueError):
    pass


class UsageError(CodePropsError, ValueError):
    """A precondition of an operation was violated by the caller."""


class NotSatisfiedError(CodePropsError):
    """Raised when an operation needs a language that satisfies a property.

    The offending witness is kept on the ``witness`` attribute.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class NotUDCodeError(NotSatisfiedError):
    pass


class ParseError(CodePropsError, ValueError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line
