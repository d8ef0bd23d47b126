"""Upper half-plane model: points, isometries, polygon realization, side pairings.

Points are complex numbers z with Im z > 0 internally.  An isometry is a real
2x2 matrix of determinant one, identified with its negative.  Angles are
measured conformally, so no hyperbolic trigonometric identities are used here;
this module doubles as the independent measurement path for the oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    ClosureFailure,
    DegenerateSide,
    MalformedInput,
    ModelMismatch,
)

HALFPLANE = "halfplane"
DISK = "disk"

_SIGN_TOL = 1e-12


# ---------------------------------------------------------------------------
# scalar half-plane primitives

def distance_h(z: complex, w: complex) -> float:
    """Hyperbolic distance between two points of the upper half-plane."""
    q = 1.0 + abs(z - w) ** 2 / (2.0 * z.imag * w.imag)
    return math.acosh(q) if q > 1.0 else 0.0


def direction_to(z: complex, w: complex) -> float:
    """Initial heading at z of the geodesic toward w, ccw radians from +x."""
    u = (w - z) / (w - z.conjugate())
    return math.atan2(u.imag, u.real) + 0.5 * math.pi


def angle_between(p: complex, q: complex, r: complex) -> float:
    """Interior angle at q of the geodesic wedge p-q-r, in [0, pi]."""
    d = direction_to(q, p) - direction_to(q, r)
    return abs(math.atan2(math.sin(d), math.cos(d)))


def distance_d(z: complex, w: complex) -> float:
    """Hyperbolic distance between two points of the unit disk."""
    q = 1.0 + 2.0 * abs(z - w) ** 2 / ((1.0 - abs(z) ** 2) * (1.0 - abs(w) ** 2))
    return math.acosh(q) if q > 1.0 else 0.0


def angle_between_d(p: complex, q: complex, r: complex) -> float:
    """Interior angle at q of the geodesic wedge p-q-r in the unit disk."""

    def head(w: complex) -> float:
        u = (w - q) / (1.0 - q.conjugate() * w)
        return math.atan2(u.imag, u.real)

    d = head(p) - head(r)
    return abs(math.atan2(math.sin(d), math.cos(d)))


# ---------------------------------------------------------------------------
# isometries

@dataclass(frozen=True)
class Isometry:
    """Orientation-preserving isometry of the half-plane, as a unit-determinant
    real matrix modulo global sign."""

    m11: float
    m12: float
    m21: float
    m22: float

    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self) -> float:
        return self.m11 + self.m22

    def compose(self, other: "Isometry") -> "Isometry":
        return Isometry(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    __matmul__ = compose

    def inverse(self) -> "Isometry":
        return Isometry(self.m22, -self.m12, -self.m21, self.m11)

    def apply(self, z: complex) -> complex:
        return (self.m11 * z + self.m12) / (self.m21 * z + self.m22)

    __call__ = apply

    def normalized(self) -> "Isometry":
        """Canonical representative of {A, -A}: trace >= 0, then m12 >= 0."""
        tr = self.trace()
        flip = tr < -_SIGN_TOL or (abs(tr) <= _SIGN_TOL and self.m12 < 0.0)
        if flip:
            return Isometry(-self.m11, -self.m12, -self.m21, -self.m22)
        return self

    def frobenius_from(self, other: "Isometry") -> float:
        return math.sqrt(
            (self.m11 - other.m11) ** 2
            + (self.m12 - other.m12) ** 2
            + (self.m21 - other.m21) ** 2
            + (self.m22 - other.m22) ** 2
        )


IDENTITY = Isometry(1.0, 0.0, 0.0, 1.0)


def translation_to(z: complex) -> Isometry:
    """Isometry moving i to z without turning the vertical direction."""
    s = math.sqrt(z.imag)
    return Isometry(s, z.real / s, 0.0, 1.0 / s)


def rotation_at_i(omega: float) -> Isometry:
    """Rotation of the tangent space at i by omega, counterclockwise."""
    c = math.cos(0.5 * omega)
    s = math.sin(0.5 * omega)
    return Isometry(c, s, -s, c)


def advance_matrix(d: float) -> Isometry:
    """Translation by distance d along the upward geodesic through i."""
    e = math.exp(0.5 * d)
    return Isometry(e, 0.0, 0.0, 1.0 / e)


def frame(z: complex, theta: float) -> Isometry:
    """Isometry carrying the base frame (i, straight up) to (z, heading theta)."""
    return translation_to(z) @ rotation_at_i(theta - 0.5 * math.pi)


def advance_point(z: complex, theta: float, d: float) -> complex:
    """Point reached from z after distance d along the heading theta."""
    return frame(z, theta).apply(1j * math.exp(d))


def midpoint_h(z: complex, w: complex) -> complex:
    """Hyperbolic midpoint of the segment from z to w."""
    if abs(z - w) == 0.0:
        return z
    return advance_point(z, direction_to(z, w), 0.5 * distance_h(z, w))


# ---------------------------------------------------------------------------
# plane types

@dataclass(frozen=True)
class PlanePoint:
    """A point of a hyperbolic-plane model."""

    model: str
    x: float
    y: float

    def __post_init__(self):
        if self.model == HALFPLANE:
            if not (math.isfinite(self.x) and self.y > 0.0):
                raise MalformedInput(f"not a half-plane point: ({self.x}, {self.y})")
        elif self.model == DISK:
            if not self.x * self.x + self.y * self.y < 1.0:
                raise MalformedInput(f"not a disk point: ({self.x}, {self.y})")
        else:
            raise MalformedInput(f"unknown model {self.model!r}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


@dataclass(frozen=True)
class PlanePolygon:
    """Realized polygon: vertices Q_1..Q_4g (entry j-1 holds Q_j)."""

    genus: int
    model: str
    vertices: tuple[PlanePoint, ...]

    @property
    def zs(self) -> tuple[complex, ...]:
        return tuple(v.z for v in self.vertices)


def distance(p: PlanePoint, q: PlanePoint) -> float:
    """Distance between two points of the same model."""
    if p.model != q.model:
        raise ModelMismatch(f"{p.model} vs {q.model}")
    return distance_h(p.z, q.z) if p.model == HALFPLANE else distance_d(p.z, q.z)


def angle_at(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> float:
    """Interior angle at q of the geodesic triangle p, q, r."""
    if not (p.model == q.model == r.model):
        raise ModelMismatch("mixed models")
    if p.model == HALFPLANE:
        return angle_between(p.z, q.z, r.z)
    return angle_between_d(p.z, q.z, r.z)


# ---------------------------------------------------------------------------
# realization

def _walk(poly) -> tuple[list[complex], float, float]:
    """Lay the boundary out from the anchor frame.

    Starts at Q_1 = i heading straight up, traverses a_1 first (so descending
    vertex order), turning left by pi - alpha at each vertex.  Returns the
    vertices in ascending label order plus the position and frame closure gaps.
    """
    n = 4 * poly.genus
    sides = poly.sides
    angles = poly.angles
    for s in sides:
        if not (math.isfinite(s) and s > 0.0):
            raise MalformedInput(f"side length {s} not positive and finite")

    F = IDENTITY
    walk = [1j]
    side_seq = [0] + list(range(n - 1, 0, -1))
    turn_seq = list(range(n - 1, -1, -1))
    for k, i in zip(side_seq, turn_seq):
        F = F @ advance_matrix(sides[k])
        walk.append(F.apply(1j))
        F = F @ rotation_at_i(math.pi - angles[i])

    gap_pos = distance_h(walk[n], 1j)
    Fn = F.normalized()
    gap_frame = min(Fn.frobenius_from(IDENTITY),
                    Isometry(-Fn.m11, -Fn.m12, -Fn.m21, -Fn.m22).frobenius_from(IDENTITY))
    ordered = [walk[0]] + [walk[n + 1 - j] for j in range(2, n + 1)]
    return ordered, gap_pos, gap_frame


def closure_gap(poly) -> float:
    """Combined closure defect of the realization walk (0 for consistent data)."""
    _, gap_pos, gap_frame = _walk(poly)
    return max(gap_pos, gap_frame)


def realize(poly, tol: float = 1e-7) -> PlanePolygon:
    """Place the polygon in the half-plane; deterministic anchored layout.

    Raises ClosureFailure when the side/angle data do not close up within tol.
    """
    zs, gap_pos, gap_frame = _walk(poly)
    gap = max(gap_pos, gap_frame)
    if gap > tol:
        raise ClosureFailure(
            f"boundary walk misses its start by {gap:.3e} (tol {tol:.1e})", gap=gap)
    pts = tuple(PlanePoint(HALFPLANE, z.real, z.imag) for z in zs)
    return PlanePolygon(genus=poly.genus, model=HALFPLANE, vertices=pts)


def measure_sides(pp: PlanePolygon) -> tuple[float, ...]:
    """Side lengths a_1..a_4g re-measured from the realized vertices."""
    zs = pp.zs
    n = len(zs)
    return tuple(distance_h(zs[(k - 1) % n], zs[k]) for k in range(n))


def measure_angles(pp: PlanePolygon) -> tuple[float, ...]:
    """Interior angles alpha_1..alpha_4g re-measured from the realized vertices."""
    zs = pp.zs
    n = len(zs)
    return tuple(angle_between(zs[k - 1], zs[k], zs[(k + 1) % n]) for k in range(n))


def polygon_area(pp: PlanePolygon) -> float:
    """Area by angle defect: (4g - 2)pi minus the measured angle sum."""
    n = len(pp.vertices)
    return (n - 2) * math.pi - math.fsum(measure_angles(pp))


# ---------------------------------------------------------------------------
# side pairings and the group relation

def side_pairings(pp: PlanePolygon) -> list[Isometry]:
    """The 2g side-pairing isometries of a realized canonical polygon.

    gamma_i carries side a_i onto a_{i+2g} for odd i and a_{i+2g} onto a_i for
    even i, with the polygon mapped off itself (endpoints swap order).
    """
    g = pp.genus
    n = 4 * g
    zs = pp.zs
    out = []
    for i in range(1, 2 * g + 1):
        if i % 2 == 1:
            p0, p1 = zs[(i - 2) % n], zs[i - 1]
            q0, q1 = zs[i + 2 * g - 1], zs[i + 2 * g - 2]
        else:
            p0, p1 = zs[i + 2 * g - 2], zs[i + 2 * g - 1]
            q0, q1 = zs[i - 1], zs[(i - 2) % n]
        if distance_h(p0, p1) < 1e-12:
            raise DegenerateSide(f"side pairing {i}: side shorter than 1e-12")
        M = frame(q0, direction_to(q0, q1)) @ frame(p0, direction_to(p0, p1)).inverse()
        out.append(M.normalized())
    return out


def relation_defect(gens: list[Isometry]) -> float:
    """Frobenius distance from the identity of the ordered product
    gamma_1..gamma_2g gamma_1^-1..gamma_2g^-1 (after sign normalization)."""
    W = IDENTITY
    for G in gens:
        W = W @ G
    for G in gens:
        W = W @ G.inverse()
    return W.normalized().frobenius_from(IDENTITY)


def classify(T: Isometry) -> str:
    """Trace classification: identity, parabolic, elliptic or hyperbolic."""
    if T.normalized().frobenius_from(IDENTITY) <= 1e-9:
        return "identity"
    t = abs(T.trace())
    if abs(t - 2.0) <= 1e-9:
        return "parabolic"
    return "elliptic" if t < 2.0 else "hyperbolic"


# ---------------------------------------------------------------------------
# test/oracle helpers

def contains_point(pp: PlanePolygon, z: complex, samples_per_side: int = 24) -> bool:
    """Approximate point-in-polygon test: each geodesic side is sampled and the
    resulting Euclidean polygon is tested with the even-odd rule."""
    zs = pp.zs
    n = len(zs)
    boundary: list[complex] = []
    for k in range(n):
        a, b = zs[k], zs[(k + 1) % n]
        d = distance_h(a, b)
        F = frame(a, direction_to(a, b))
        for j in range(samples_per_side):
            boundary.append(F.apply(1j * math.exp(d * j / samples_per_side)))
    inside = False
    x, y = z.real, z.imag
    m = len(boundary)
    for k in range(m):
        x1, y1 = boundary[k].real, boundary[k].imag
        x2, y2 = boundary[(k + 1) % m].real, boundary[(k + 1) % m].imag
        if (y1 > y) != (y2 > y) and x < x1 + (y - y1) * (x2 - x1) / (y2 - y1):
            inside = not inside
    return inside
