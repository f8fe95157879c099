"""Exception hierarchy shared by every module."""


class SchubDualError(Exception):
    """Base class for all library errors."""


class InvalidParams(SchubDualError, ValueError):
    pass


class NotExtreme(SchubDualError, ValueError):
    """Weight is not in the Weyl orbit of the expected highest weight."""


class WrongArity(SchubDualError, ValueError):
    pass


class MultipleMinima(SchubDualError, RuntimeError):
    """The achievable target set has no unique lowest weight.

    Never expected to fire; raised rather than tie-broken so that an
    implementation bug cannot hide behind an arbitrary choice.
    """


class NotSuitable(SchubDualError, ValueError):
    pass


class BadParity(SchubDualError, ValueError):
    pass


class DegeneratePoint(SchubDualError, ValueError):
    pass


class Undefined(SchubDualError, ValueError):
    pass


class TooLarge(SchubDualError, ValueError):
    pass


class UnknownFormat(SchubDualError, ValueError):
    pass


class ParseError(SchubDualError, ValueError):
    pass


class CaseMismatch(SchubDualError, ValueError):
    pass
