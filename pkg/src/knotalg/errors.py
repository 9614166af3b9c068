"""Exception hierarchy shared by every module of the package."""


class KnotAlgError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ZeroPolynomial(KnotAlgError, ZeroDivisionError):
    pass


class ZeroDenominator(KnotAlgError, ZeroDivisionError):
    pass


class InexactDivision(KnotAlgError, ArithmeticError):
    pass


class ParseError(KnotAlgError, ValueError):
    """Malformed textual or JSON input.

    ``line`` and ``column`` are 1-based when known.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class InvalidSeifertMatrix(KnotAlgError, ValueError):
    pass


class UnknownName(KnotAlgError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class SizeMismatch(KnotAlgError, ValueError):
    pass


class NotUnimodular(KnotAlgError, ValueError):
    pass


class SingularPresentation(KnotAlgError, ValueError):
    pass


class AtUnity(KnotAlgError, ValueError):
    pass


class AtRoot(KnotAlgError, ValueError):
    pass


class NotSymmetric(KnotAlgError, ValueError):
    pass


class RankMismatch(KnotAlgError, ValueError):
    pass


class VerificationFailed(KnotAlgError, RuntimeError):
    pass


class NotFibered(KnotAlgError, ValueError):
    pass


class InvalidEta(KnotAlgError, ValueError):
    pass
