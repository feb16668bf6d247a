"""Exception hierarchy shared by every module of the package."""


class LeibnizError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(LeibnizError, ZeroDivisionError):
    pass


class MixedFieldsError(LeibnizError, TypeError):
    """Two scalars (or containers) from different fields were combined."""


class DimensionMismatch(LeibnizError, ValueError):
    pass


class NotInSpan(LeibnizError):
    """A matrix expected to lie in a derivation basis span does not.

    Raised for commutators of basis derivations this signals an internal
    consistency failure, not bad user input.
    """


class LambdaZero(LeibnizError, ValueError):
    pass


class SearchSpaceTooLarge(LeibnizError):
    pass


class IdentityViolation(LeibnizError):
    """The structure constants break the left Leibniz identity.

    ``triple`` holds the first failing basis index triple (i, j, k) in
    lexicographic order.
    """

    def __init__(self, triple, names=None):
        self.triple = tuple(triple)
        if names is not None:
            label = "(" + ", ".join(names[t] for t in self.triple) + ")"
        else:
            label = str(self.triple)
        super().__init__(f"left Leibniz identity fails on basis triple {label}")


class ParseError(LeibnizError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
