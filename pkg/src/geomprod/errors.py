"""Typed error hierarchy shared across the package."""


class GeomprodError(Exception):
    """Base class for all errors raised by this package."""


class ZeroSampleError(GeomprodError):
    """The function evaluated to exactly zero at a sample point.

    The log-space accumulator cannot represent a zero factor.
    """

    def __init__(self, abscissa: float, context: str = ""):
        self.abscissa = abscissa
        self.context = context
        msg = f"function value is zero at sample abscissa {abscissa!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class NonPositiveSampleError(GeomprodError):
    """A source that must stay positive returned a value <= 0."""

    def __init__(self, abscissa: float, value: float, context: str = ""):
        self.abscissa = abscissa
        self.value = value
        self.context = context
        msg = f"non-positive sample {value!r} at abscissa {abscissa!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class DomainCoverageError(GeomprodError):
    """A signal-backed source was queried outside its sampled range."""

    def __init__(self, abscissa: float, lo: float, hi: float, context: str = ""):
        self.abscissa = abscissa
        self.lo = lo
        self.hi = hi
        self.context = context
        msg = f"abscissa {abscissa!r} outside sampled range [{lo!r}, {hi!r}]"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class SignalFormatError(GeomprodError):
    """The input series file could not be parsed or is malformed."""


class NormalizationError(GeomprodError):
    """Normalization of a raw series failed its positivity contract."""
