"""Exception types shared across the package."""


class QmvError(Exception):
    """Base class for all errors raised by this package."""


class InversionOfZero(QmvError):
    """Attempted to invert a series that is zero to its known precision."""


class InsufficientPrecision(QmvError):
    """An operation asked for more coefficients than its inputs can certify."""


class BeyondPrecision(QmvError):
    """Coefficient lookup at or beyond the series precision bound."""


class PochhammerPole(QmvError):
    """A negative-index Pochhammer extension hit an identically-zero factor."""


class DivergentProduct(QmvError):
    """An infinite product whose factors do not tend to 1 q-adically."""


class DenominatorPole(QmvError):
    """A series denominator vanishes identically for some summation index."""


class NonterminatingBound(QmvError):
    """A term valuation bound cannot reach the requested truncation order."""


class UnknownIdentity(QmvError):
    """Catalog lookup with an id that is not registered."""


class OutOfDomain(QmvError):
    """Shift parameter m outside the identity's valid domain."""
