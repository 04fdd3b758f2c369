"""Exception types raised across the package."""


class CoverTreesError(Exception):
    pass


class DimensionError(CoverTreesError, ValueError):
    """Matrix has the wrong shape for the requested operation."""


class InvalidParameterError(CoverTreesError, ValueError):
    pass


class SizeLimitError(CoverTreesError, ValueError):
    """Input exceeds a guard meant to stop exponential or memory blowup."""


class PreconditionError(CoverTreesError, ValueError):
    pass


class ParseError(CoverTreesError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line %d: %s" % (lineno, message)
        super().__init__(message)


class ConsistencyError(CoverTreesError, RuntimeError):
    """An identity that must hold exactly did not; indicates a bug."""
