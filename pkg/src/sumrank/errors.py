"""Exception types shared across the package."""


class SumrankError(Exception):
    """Base class for all package-specific errors."""


class NotPrime(SumrankError, ValueError):
    """Raised when a prime was required but a composite (or < 2) was given."""


class NotPrimePower(SumrankError, ValueError):
    """Raised when an integer is not a prime power."""


class NotExtension(SumrankError, TypeError):
    """Raised when an extension-field operation is applied to a prime field."""


class NotSubfield(SumrankError, ValueError):
    """Raised when an order is not a level of the field's extension tower."""


class FieldMismatch(SumrankError, ValueError):
    """Raised when operands live in different fields."""


class ShapeMismatch(SumrankError, ValueError):
    """Raised when matrix shapes are not conformable."""


class ProfileMismatch(SumrankError, ValueError):
    """Raised when two sum-rank vectors have different block profiles."""


class TooLarge(SumrankError, ValueError):
    """Raised when an exhaustive enumeration would exceed the configured cap."""

    def __init__(self, needed_bits: float, cap_bits: int):
        self.needed_bits = needed_bits
        self.cap_bits = cap_bits
        super().__init__(
            f"enumeration needs ~2^{needed_bits:.1f} codewords, cap is 2^{cap_bits}"
        )


class ZeroCode(SumrankError, ValueError):
    """Raised for the k=0 code, whose minimum distance is undefined."""


class DegreeOutOfRange(SumrankError, ValueError):
    """Raised when a q-polynomial degree bound is outside [0, n-1]."""


class BlockLengthTooSmall(SumrankError, ValueError):
    """Raised when a construction needs more blocks than were given."""


class DimensionMismatch(SumrankError, ValueError):
    """Raised when inner/outer code dimensions do not fit together."""


class LengthExceedsField(SumrankError, ValueError):
    """Raised when a code length exceeds the number of field elements."""


class DistanceOutOfRange(SumrankError, ValueError):
    """Raised when a distance parameter is outside its legal range."""


class UnsortedProfile(SumrankError, ValueError):
    """Raised when a block profile is not sorted as a bound requires."""


class DistanceTooSmall(SumrankError, ValueError):
    """Raised when a bound formula needs a strictly larger distance."""


class DomainError(SumrankError, ValueError):
    """Raised when a real-valued bound is evaluated outside its domain."""


class NotSquare(SumrankError, ValueError):
    """Raised when a field order is not the square of a prime power."""


class OddInnerDimension(SumrankError, ValueError):
    """Raised when an inner-code dimension must be even but is odd."""


class ParamConstraintViolated(SumrankError, ValueError):
    """Raised when bound-preset parameters violate a named constraint."""
