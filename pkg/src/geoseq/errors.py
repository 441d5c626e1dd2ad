"""Exception hierarchy. The CLI maps each class to its own exit status."""


class GeoseqError(Exception):
    exit_code = 2


class ParameterError(GeoseqError, ValueError):
    """Bad parameter: non-prime p, m <= 1, shift out of range, ..."""

    exit_code = 2


class FieldConstructionError(GeoseqError):
    """A supplied modulus is reducible or a supplied generator is not primitive."""

    exit_code = 3


class VerificationError(GeoseqError):
    """Two routes that must agree did not."""

    exit_code = 1


class PeriodError(VerificationError):
    pass
