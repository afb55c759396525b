"""Exception hierarchy shared by every module of the package."""


class EulerProdError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(EulerProdError, ValueError):
    """An argument is outside the documented domain of an operation."""


class DivisibilityError(EulerProdError, ArithmeticError):
    """Division by an integer that is not invertible in the coefficient ring."""

    def __init__(self, divisor, ring=None):
        self.divisor = divisor
        self.ring = ring
        where = f" in {ring}" if ring is not None else ""
        super().__init__(f"cannot divide by {divisor}{where}")


class CapacityError(EulerProdError):
    """A length or modulus exceeds what the implementation supports."""


class IncompatiblePrimeError(EulerProdError):
    """The chosen prime cannot host the requested roots of unity."""


class ProviderError(EulerProdError):
    """An Euler factor provider failed at a given prime."""

    def __init__(self, p, cause):
        self.p = p
        self.cause = cause
        super().__init__(f"Euler factor provider failed at p={p}: {cause}")


class LiftError(EulerProdError):
    """Residues modulo q cannot be lifted to integers unambiguously."""

    def __init__(self, index, bound, q):
        self.index = index
        self.bound = bound
        self.q = q
        super().__init__(
            f"coefficient bound {bound:.4g} at index {index} exceeds (q-1)/2 for q={q}; "
            "combine with another prime"
        )


class IntegrityError(EulerProdError):
    """Independent computations disagree where they must agree."""


class DecompositionError(EulerProdError):
    """A decomposition file is malformed or fails self-certification."""


class PrecisionError(EulerProdError):
    """Numerical evaluation could not be certified at the working precision."""
