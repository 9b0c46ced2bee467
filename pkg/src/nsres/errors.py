"""Exception hierarchy shared by all nsres modules."""


class NsresError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class GcdNotOne(NsresError):
    pass


class InternalInvariant(NsresError):
    pass


class LengthMismatch(NsresError):
    pass


class FaceMismatch(NsresError):
    pass


class NotMultiplicityFour(NsresError):
    pass


class WrongFace(NsresError):
    pass


class ReductionFailure(NsresError):
    pass


class DegreeBoundTooLow(NsresError):
    pass


class ZeroPolynomial(NsresError):
    pass


class MissingPIQ(NsresError):
    pass
