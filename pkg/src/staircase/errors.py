"""Exception hierarchy shared by every staircase module."""


class StaircaseError(Exception):
    pass


class ExponentOverflow(StaircaseError, OverflowError):
    """An exponent would exceed the configured ceiling (default 2**64 - 1)."""


class ZeroIdeal(StaircaseError, ValueError):
    pass


class NotMPrimary(StaircaseError, ValueError):
    pass


class InvalidParams(StaircaseError, ValueError):
    pass


class VerificationError(StaircaseError):
    """Computed data disagrees with a closed-form prediction."""

    def __init__(self, message, mismatches=()):
        super().__init__(message)
        self.mismatches = list(mismatches)
