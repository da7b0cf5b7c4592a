"""Exception types shared across the package."""


class SpecradError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(SpecradError):
    """Vector length does not match the tensor dimension."""


class TensorFormatError(SpecradError):
    """Malformed tensor data (file or constructor input)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NotWeaklyIrreducibleError(SpecradError):
    """Power-method entry point called on a weakly reducible tensor."""


class ZeroIterateError(SpecradError):
    """Power-method step produced the zero vector (input tensor has a zero row)."""


class NonConvergenceError(SpecradError):
    """Iteration budget exhausted or bracket stagnated before reaching tolerance.

    Carries the best bracket seen (`lower`, `upper`) and the iteration trace.
    """

    def __init__(self, message, lower=None, upper=None, trace=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.trace = trace or []


class SpectralNonConvergenceError(NonConvergenceError):
    """A block solve failed; carries results of the blocks finished so far."""

    def __init__(self, message, failing_block, partial_results, **kw):
        super().__init__(message, **kw)
        self.failing_block = failing_block
        self.partial_results = partial_results


class PrimitivityUndecidedError(SpecradError):
    """Support-state cap hit before the primitivity decision was reached."""


class OracleGuardError(SpecradError):
    """Brute-force oracle called beyond its hard input-size guard."""
