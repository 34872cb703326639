"""Exception hierarchy shared by the library and the command line."""


class BiregkitError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 3

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def payload(self):
        """JSON-ready description of the error"""
        return {
            'type': type(self).__name__,
            'message': self.message,
            **self.details,
        }


class ParseError(BiregkitError):
    """Malformed polynomial text or ideal document."""

    exit_code = 2

    def __init__(self, message, line=1, column=1, **details):
        super().__init__(message, line=line, column=column, **details)
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.message} (line {self.line}, column {self.column})"


class RingMismatchError(BiregkitError):
    """Operands live in different rings."""


class MathError(BiregkitError):
    """A mathematical precondition does not hold."""


class RetriesExhaustedError(MathError):
    """No admissible random choice was found within the retry budget."""


class ConsensusError(BiregkitError):
    """Randomized trials failed to agree."""

    exit_code = 4
