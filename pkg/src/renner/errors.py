"""Exception types raised by the construction and verification layers."""


class RennerError(Exception):
    """Base class for all library-specific errors."""


class UnsupportedType(RennerError, ValueError):
    """Family/rank combination outside the supported classical series."""


class GroupTooLarge(RennerError, ValueError):
    """Requested group enumeration exceeds the configured bound."""


class BadJ(RennerError, ValueError):
    """J is not a proper subset of the simple-root index set."""


class ZeroWeight(RennerError, ValueError):
    """The chosen dominant weight vanishes, so there is no orbit polytope."""


class LatticeInconsistent(RennerError, RuntimeError):
    """Face lattice failed a structural self-check during construction."""


class NotAFacePair(RennerError, ValueError):
    """Moebius function queried on a non-comparable pair of faces."""


class FaceNotInOrbit(RennerError, ValueError):
    """Face does not belong to the orbit of the given cross-section entry."""


class NotInWe(RennerError, ValueError):
    """Group element is not in the two-sided stabilizer of the entry."""


class WrongClass(RennerError, ValueError):
    """Monoid element does not lie in the expected two-sided class."""


class NotProjective(RennerError, ValueError):
    """Partial map does not arise from the unit-group action on the face."""


class ClosureViolation(RennerError, RuntimeError):
    """A product of enumerated elements left the enumerated set."""


class BadElement(RennerError, ValueError):
    """Element literal failed to parse or validate."""


class PropertyViolation(RennerError, RuntimeError):
    """An exhaustively checked algebraic law failed; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MismatchWitness(PropertyViolation):
    """An independent recomputation disagreed with the pipeline."""


class DimensionMismatch(RennerError, RuntimeError):
    """A dimension count disagrees with the predicted value."""


class NotIntegerValued(RennerError, RuntimeError):
    """A lifted character table failed the integrality post-check."""


class UnsupportedComponent(RennerError, ValueError):
    """Matrix-level representations are not implemented for this diagram type."""
