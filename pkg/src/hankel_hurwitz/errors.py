"""Exception hierarchy shared by every stage of the pipeline."""


class HankelHurwitzError(Exception):
    """Base class for all errors raised by this package."""


class EmptyPolynomial(HankelHurwitzError):
    pass


class ZeroColumn(HankelHurwitzError):
    """A column is identically zero, so the polynomial is not regular."""


class NotColumnReduced(HankelHurwitzError):
    pass


class NotNormalized(HankelHurwitzError):
    """The highest column degree coefficient is not upper triangular with positive diagonal."""


class DegreeZero(HankelHurwitzError):
    pass


class SingularLeadingBlock(HankelHurwitzError):
    pass


class SequenceTooShort(HankelHurwitzError):
    pass


class NotHermitian(HankelHurwitzError):
    pass


class NotHermitianSequence(HankelHurwitzError):
    pass


class NotACommonMultiple(HankelHurwitzError):
    pass


class NotRegular(HankelHurwitzError):
    pass


class SolverFailure(HankelHurwitzError):
    pass


class ParseError(HankelHurwitzError):
    pass


class ShapeError(ParseError):
    pass
