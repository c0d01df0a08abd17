"""Exception types raised by hfentangle."""


class HFEntangleError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(HFEntangleError, ValueError):
    pass


class NoConvergence(HFEntangleError, ArithmeticError):
    pass


class DimensionMismatch(HFEntangleError, ValueError):
    pass


class NotNormalized(HFEntangleError, ValueError):
    pass


class InvalidRange(HFEntangleError, ValueError):
    pass


class NoSignChange(HFEntangleError, ArithmeticError):
    """The initial bracket does not straddle a sign change."""
