"""Exception types raised by the library and mapped to CLI exit codes."""


class ValidationError(ValueError):
    """Malformed input: bad shapes, asymmetric data, lo > hi, inconsistent bands."""


class DimensionCapError(ValueError):
    """Problem dimension exceeds the configured cap of an exponential algorithm."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: dimension {n} exceeds cap {cap} (raise it with --cap)")
        self.n = n
        self.cap = cap


class IterationLimitError(RuntimeError):
    """Local improvement hit its hard 2^n iteration cap."""
