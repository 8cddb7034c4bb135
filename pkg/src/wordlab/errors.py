"""Exception types raised by wordlab operations."""


class WordError(ValueError):
    """Base class for every error raised on a bad word or bad parameter."""


class ParseError(WordError):
    pass


class NonBinaryAlphabet(WordError):
    pass


class EmptyWordUndefined(WordError):
    pass


class LengthMismatch(WordError):
    pass


class LengthCapExceeded(WordError):
    pass


class InvalidExponent(WordError):
    pass


class InvalidLength(WordError):
    pass


class NotWeaklyRich(WordError):
    pass


class NotOverlapFree(WordError):
    pass


class NotLyndon(WordError):
    pass


class WordTooShort(WordError):
    pass


class PreconditionViolated(WordError):
    pass


class OrderOutOfRange(WordError):
    pass


class NotProlongable(WordError):
    pass


class CapTooSmall(WordError):
    pass


class UnknownPatternSymbol(WordError):
    pass


class UnknownProperty(WordError):
    pass


class BadFilterExpression(WordError):
    pass


class UnknownClaim(KeyError):
    pass
