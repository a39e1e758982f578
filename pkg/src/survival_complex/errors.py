"""Exception types shared across the package."""


class SurvivalError(Exception):
    """Base class for all errors raised by this package."""


class ContextMismatch(SurvivalError):
    """Two objects live over different variable contexts."""


class InvalidGenerator(SurvivalError):
    """A proposed ideal generator is constant or of degree one."""


class NotArtinian(SurvivalError):
    """Some variable has no pure-power generator, so infinitely many monomials survive."""


class CapExceeded(SurvivalError):
    """A configured size limit was hit; nothing is silently truncated."""

    def __init__(self, what, limit):
        super().__init__(f"{what} exceeds the configured cap of {limit}")
        self.what = what
        self.limit = limit


class SpecViolation(SurvivalError):
    """A prescribed socle set is not a valid antichain over its variables."""


class InvariantViolation(SurvivalError):
    """An internal consistency check failed. Always a bug."""
