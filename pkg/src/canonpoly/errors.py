"""Exception types shared across the package."""


class CanonpolyError(Exception):
    """Base class for all library errors."""


class MalformedInput(CanonpolyError):
    """Structurally invalid input: wrong array length, NaN, bad model tag."""


class ModelMismatch(CanonpolyError):
    """Points from different plane models were mixed in one operation."""


class GenusMismatch(CanonpolyError):
    """Two polygons of different genus were compared."""


class GenusTooSmall(CanonpolyError):
    """The requested construction needs a larger genus."""


class TriangleInequalityViolated(CanonpolyError):
    """Three lengths do not satisfy the strict triangle inequalities."""


class AngleSumNotHyperbolic(CanonpolyError):
    """An angle triple sums to pi or more, so no hyperbolic triangle exists."""


class NotRealizable(CanonpolyError):
    """Angle/side data admit no triangle (cosine argument out of range)."""


class ParameterDomainError(CanonpolyError):
    """A parameter vector left the domain of the reconstruction chart."""


class ImageConsistencyError(CanonpolyError):
    """The overdetermined consistency condition failed; the parameters do not
    describe any canonical polygon."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(message)
        self.residual = residual


class FanNotInterior(CanonpolyError):
    """The vertex fan exits the polygon, so the decomposition is undefined."""


class NoBracket(CanonpolyError):
    """A root target lies outside the attainable range of a hinge solve."""


class HingeNoBracket(NoBracket):
    """The three-angle-sum target is unattainable for any diagonal length."""


class ClosureFailure(CanonpolyError):
    """The realization walk did not return to its starting frame."""

    def __init__(self, message: str, gap: float):
        super().__init__(message)
        self.gap = gap


class NotHyperelliptic(CanonpolyError):
    """Opposite angles differ, so there is no central involution."""


class MidpointMismatch(CanonpolyError):
    """The main diagonals do not share a common midpoint within tolerance."""


class DegenerateSide(CanonpolyError):
    """A polygon side is too short to define a pairing isometry."""
