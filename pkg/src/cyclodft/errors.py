"""Exception hierarchy shared by all cyclodft modules."""


class CycloDFTError(Exception):
    """Base class for every error raised by this package."""


class FieldError(CycloDFTError):
    pass


class DegreeMismatch(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class ZeroToNonpositivePower(FieldError, ZeroDivisionError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class NotInSubfield(FieldError):
    pass


class ElementParseError(CycloDFTError, ValueError):
    pass


class LengthMismatch(CycloDFTError, ValueError):
    pass


class NotNormal(CycloDFTError):
    pass


class NoBasisFound(CycloDFTError):
    """Internal error: every finite field has a normal basis."""


class SingularGram(CycloDFTError):
    pass


class SingularMatrix(CycloDFTError):
    pass


class IndexOutOfRange(CycloDFTError, IndexError):
    pass


class VerificationFailed(CycloDFTError):
    pass
