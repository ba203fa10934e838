"""Exception hierarchy shared by every hcag module."""


class HcagError(Exception):
    """Base class for all library errors."""


class DivisionByZero(HcagError, ZeroDivisionError):
    pass


class ZeroPolynomial(HcagError, ValueError):
    """An operation needing a nonzero polynomial received zero."""


class ZeroDivisorPolynomial(ZeroPolynomial):
    pass


class ParseError(HcagError, ValueError):
    """Malformed polynomial text. ``pos`` is the 0-based offending offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")


class UnknownSymbol(ParseError):
    pass


class EmptyInput(HcagError, ValueError):
    pass


class Cancelled(HcagError):
    pass


class DegreeMismatch(HcagError, ValueError):
    pass


class NotMonic(HcagError, ValueError):
    pass


class NotSquareFree(HcagError, ValueError):
    pass


class NotOnCurve(HcagError, ValueError):
    pass


class NotEffective(HcagError, ValueError):
    pass


class DegreeViolation(HcagError, ValueError):
    pass


class DivisibilityViolation(HcagError, ValueError):
    pass


class NotSemiReduced(HcagError, ValueError):
    pass


class LiftObstruction(HcagError, ArithmeticError):
    pass


class CurveMismatch(HcagError, ValueError):
    pass


class ExtractionShapeError(HcagError, ArithmeticError):
    pass


class EmptyBasis(HcagError, ArithmeticError):
    pass


class ClubViolated(HcagError, ValueError):
    """gcd(b0, b1) is not a unit, so the Leitenberger pair is unusable."""


class GenusUnsupported(HcagError, ValueError):
    pass


class NotTorsion(HcagError, ValueError):
    pass


class CertificateFailure(HcagError, ArithmeticError):
    pass


class PreconditionViolated(HcagError, ValueError):
    pass


class NonPolynomialCoefficient(HcagError, ValueError):
    pass
