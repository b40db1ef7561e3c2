"""Exception types raised by the group engine and the verification harness."""


class PinilotError(Exception):
    """Base class for every error raised by this package."""


class MalformedPermutation(PinilotError, ValueError):
    pass


class ClosureExceedsBound(PinilotError):
    def __init__(self, bound, message=None):
        self.bound = bound
        super().__init__(message or f"group closure exceeds max_order={bound}")


class NotAnElement(PinilotError, ValueError):
    pass


class WrongParent(PinilotError, ValueError):
    pass


class NotNormal(PinilotError, ValueError):
    pass


class NotAnAutomorphism(PinilotError, ValueError):
    pass


class NotAHomomorphism(PinilotError, ValueError):
    pass


class LatticeBudgetExceeded(PinilotError):
    pass


class JoinPredicateFailure(PinilotError):
    """The join of predicate-satisfying normal subgroups failed the predicate.

    Mathematically impossible; raised only if the engine is broken.
    """


class BadPrime(PinilotError, ValueError):
    pass


class BadCondition(PinilotError, ValueError):
    pass


class UnknownCorollary(PinilotError, KeyError):
    pass


class UnknownLemma(PinilotError, KeyError):
    pass


class ParseError(PinilotError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
