"""Exception hierarchy shared by all modules."""


class FockgenError(ValueError):
    """Base class for every error raised by fockgen."""


class DimensionError(FockgenError):
    """Truncation too small, zero dimension, or mismatched dimensions."""


class NormalizationError(FockgenError):
    """A vector that must be normalized is not."""


class HermiticityError(FockgenError):
    """An operator required to be Hermitian is not."""


class TruncationError(FockgenError):
    """A truncated expansion loses more weight than tolerated."""


class UnsupportedError(FockgenError):
    """Parameters outside the supported range of an operation."""
