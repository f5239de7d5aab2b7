"""Exception hierarchy shared by every module of the package."""


class GlsymError(Exception):
    """Base class for all errors raised by glsym."""


class ScalarParseError(GlsymError, ValueError):
    def __init__(self, text, offset, reason):
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f"cannot parse scalar {text!r} at byte {offset}: {reason}")


class DomainError(GlsymError, ArithmeticError):
    """Division by zero or a zero denominator in the input."""


class ValidationError(GlsymError, ValueError):
    """Input data violates a structural axiom.

    ``where`` names the failing location, e.g. a generator pair ``(j, l)``
    or a JSON path.
    """

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(message)


class ConsistencyError(GlsymError, RuntimeError):
    """An identity that must hold by construction failed (a bug or an unchecked input)."""
