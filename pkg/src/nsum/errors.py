"""Exception hierarchy shared by all nsum modules."""


class NsumError(Exception):
    """Base class for every error raised by this package."""


class ParseError(NsumError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonSimpleError(NsumError):
    """Self-loop or repeated edge in what must be a simple graph."""


class NotATreeError(NsumError):
    pass


class IndeterminateSum(NsumError, ArithmeticError):
    """+inf and -inf were added together."""


class PreconditionError(NsumError):
    pass


class WitnessVerificationError(NsumError):
    """A constructed assignment failed exact verification (always a bug)."""


class InvalidSpec(NsumError, ValueError):
    pass


class HypothesisViolation(NsumError):
    """An expanded vertex of an infinite tree has only leaf children."""
