"""Exception hierarchy.

Two families matter to callers: input errors (bad data, invalid requests)
and ambiguity errors (a numerical decision could not be made reliably).
The CLI maps them to exit codes 2 and 3.
"""


class TensorClassError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TensorClassError, ValueError):
    """Invalid input data or request."""


class AmbiguityError(TensorClassError, ArithmeticError):
    """A discrete decision is numerically ambiguous; exact mode may resolve it."""


class SingularTransform(InputError):
    pass


class NonRealTransform(InputError):
    pass


class ZeroPolynomial(InputError):
    pass


class ZeroForm(InputError):
    pass


class NonRealInput(InputError):
    pass


class UnsupportedDegree(InputError):
    pass


class InvalidType(InputError):
    pass


class MissingModulus(InputError):
    pass


class AsymmetricTensor(InputError):
    pass


class PdeSyntaxError(InputError):
    """Malformed PDE text; ``pos`` is the 0-based character offset."""

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}\n  {text}\n  {' ' * pos}^"
        super().__init__(message)


class UnsupportedOrder(InputError):
    pass


class NonRealCoefficient(InputError):
    pass


class InternalInconsistency(AmbiguityError):
    """Spectral and root-based classifications disagree (float tolerance failure)."""


class BoundaryAmbiguity(AmbiguityError):
    """The modulus lies too close to a family boundary to decide in float mode."""
