"""Shared exception types.

Every error that callers are expected to branch on gets its own class;
plain ValueError/TypeError are reserved for genuine misuse of the API.
"""


class ModLatticeError(Exception):
    """Base class for all library errors."""


class ShapeError(ModLatticeError):
    """Matrix input is not square / sizes do not match."""


class DefinitenessError(ModLatticeError):
    """Gram matrix is not symmetric positive definite.

    minor_index is the 1-based index of the first non-positive leading
    principal minor (0 means the symmetry check failed).
    """

    def __init__(self, message, minor_index=None):
        super().__init__(message)
        self.minor_index = minor_index


class ParityError(ModLatticeError):
    """Operation requires an even (or odd) lattice and got the other kind."""


class IntegralityError(ModLatticeError):
    """Operation requires an integral lattice."""


class LevelError(ModLatticeError):
    """Level is not admissible for the theta ring (sigma1(N) must divide 24)."""


class DivisorError(ModLatticeError):
    """m is not an exact divisor of the level."""


class CatalogError(ModLatticeError):
    """Catalogue entry failed validation or lookup."""


class CapacityError(ModLatticeError):
    """Enumeration collected more vectors than the configured guard.

    Carries whatever was counted before the guard tripped.
    """

    def __init__(self, message, partial_counts=None):
        super().__init__(message)
        self.partial_counts = partial_counts


class GranularityError(ModLatticeError):
    """Series rendering in q-powers requires all exponents divisible by 12."""


class ExponentOverflowError(ModLatticeError):
    """Series exponent left the supported integer range."""


class EmptyBasisError(ModLatticeError):
    """No monomials of the requested weight exist in the theta ring."""
