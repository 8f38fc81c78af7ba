class DimensionError(ValueError):
    """Matrix or vector shapes do not fit the requested operation."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class SpecError(ValueError):
    """A JSON input file is malformed; the message names the offending field."""
