"""Exception types raised across the package."""


class CHMError(Exception):
    """Base class for all package errors."""


class NonUnimodularInput(CHMError, ValueError):
    pass


class NonHadamardInput(CHMError, ValueError):
    pass


class DimensionMismatch(CHMError, ValueError):
    pass


class ZeroAtNegativeExponent(CHMError, ZeroDivisionError):
    pass


class NotPalindromic(CHMError, ValueError):
    pass


class DegenerateLeadingCoefficient(CHMError, ValueError):
    pass


class IncoherentInput(CHMError, ValueError):
    pass


class NotUnimodular(CHMError, ValueError):
    """The roots of a palindromic quadratic leave the unit circle."""


class OutOfDomain(CHMError, ValueError):
    """Parameters fall outside a family's domain; carries the verdict."""

    def __init__(self, verdict):
        self.verdict = verdict
        reasons = ", ".join(f"{r.name}={r.value:.6g}" for r in verdict.reasons)
        super().__init__(f"point outside domain: {reasons}")


class DegenerateDenominator(OutOfDomain):
    pass


class UnknownSystem(CHMError, KeyError):
    pass


class UnknownFamily(CHMError, KeyError):
    pass


class UnsupportedFamily(CHMError, ValueError):
    pass


class MatrixFormatError(CHMError, ValueError):
    pass
