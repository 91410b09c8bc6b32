"""Exception hierarchy shared by every module of the package."""


class HypinvError(Exception):
    """Base class for all package errors."""


class InvalidParameter(HypinvError, ValueError):
    """A parameter lies in an excluded set."""


class DegreeExceedsN(InvalidParameter):
    """Requested degree is larger than the family's cap N (Racah, Hahn)."""


class NonTerminating(HypinvError, ValueError):
    """The series has no nonpositive-integer numerator parameter."""


class DenominatorPole(HypinvError, ZeroDivisionError):
    """A denominator factor vanishes inside the evaluated range.

    ``where`` carries whatever locates the pole (indices, parameter value).
    """

    def __init__(self, message, **where):
        super().__init__(message)
        self.where = where
