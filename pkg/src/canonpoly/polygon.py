"""Canonical 4g-gon data, validity conditions, and the apex fan decomposition.

A polygon is stored as abstract metric data (side lengths plus interior
angles); realization in a plane model is a separate, explicit step.  Indices
are 1-based in docstrings and file formats; in memory position i-1 holds the
item with label i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import embed
from .errors import FanNotInterior, GenusMismatch, GenusTooSmall, MalformedInput
from .hyptrig import Triangle, side_from_sas, solve_sas

DEFAULT_TOL = 1e-9
DEFAULT_CLOSURE_TOL = 1e-7


@dataclass(frozen=True)
class CanonicalPolygon:
    """A 4g-gon: sides a_1..a_4g clockwise, angle alpha_i between a_i and a_{i+1}."""

    genus: int
    sides: tuple[float, ...]
    angles: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise MalformedInput(f"genus must be an integer >= 2, got {self.genus}")
        object.__setattr__(self, "sides", tuple(float(v) for v in self.sides))
        object.__setattr__(self, "angles", tuple(float(v) for v in self.angles))
        n = 4 * self.genus
        if len(self.sides) != n or len(self.angles) != n:
            raise MalformedInput(
                f"need {n} sides and angles, got {len(self.sides)}/{len(self.angles)}")
        for v in self.sides + self.angles:
            if not math.isfinite(v):
                raise MalformedInput("non-finite entry in polygon data")

    @property
    def n(self) -> int:
        return 4 * self.genus


def regular_polygon(genus: int) -> CanonicalPolygon:
    """The regular canonical 4g-gon: all angles pi/(2g), side s with
    cosh(s/2) = cos(pi/4g)/sin(pi/4g)."""
    if genus < 2:
        raise GenusTooSmall("need genus >= 2")
    n = 4 * genus
    side = 2.0 * math.acosh(1.0 / math.tan(math.pi / n))
    alpha = math.pi / (2 * genus)
    return CanonicalPolygon(genus, (side,) * n, (alpha,) * n)


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class ConditionCheck:
    name: str
    passed: bool
    residual: float


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[ConditionCheck, ...]
    passed: bool

    def residual(self, name: str) -> float:
        for c in self.checks:
            if c.name == name:
                return c.residual
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "residual": c.residual}
                for c in self.checks
            ],
        }


def _alternating_residual(poly: CanonicalPolygon) -> float:
    """|sum of the distinguished angle classes| from the fifth defining condition:
    odd labels in the first half plus even labels in the second half, minus the
    complementary classes."""
    g = poly.genus
    al = poly.angles
    acc = 0.0
    for i in range(1, g + 1):
        acc += al[2 * i - 2] - al[2 * i - 1]          # alpha_{2i-1} - alpha_{2i}
    for i in range(g + 1, 2 * g + 1):
        acc += al[2 * i - 1] - al[2 * i - 2]          # alpha_{2i} - alpha_{2i-1}
    return abs(acc)


def validate_canonical(poly: CanonicalPolygon, tol: float = DEFAULT_TOL,
                       closure_tol: float = DEFAULT_CLOSURE_TOL) -> ValidationReport:
    """Check the five defining conditions plus realizability.

    Lengths are compared relatively, angles absolutely.  The realizability
    check walks the boundary and reports the closure gap against closure_tol.
    """
    g = poly.genus
    n = poly.n
    sides, angles = poly.sides, poly.angles

    r1 = max(abs(sides[i] - sides[i + 2 * g]) / max(sides[i], sides[i + 2 * g])
             for i in range(2 * g))
    r2 = abs(math.fsum(angles) - 2.0 * math.pi)
    range_ok = all(0.0 < a < math.pi for a in angles)
    r3 = max(max(-a, a - math.pi) for a in angles)
    r4 = abs(angles[0] - angles[2 * g])
    r5 = _alternating_residual(poly)
    try:
        gap = embed.closure_gap(poly)
        closed = gap <= closure_tol
    except MalformedInput:
        gap = math.inf
        closed = False

    checks = (
        ConditionCheck("opposite_sides_equal", r1 <= tol, r1),
        ConditionCheck("angle_sum_2pi", r2 <= tol, r2),
        ConditionCheck("angles_in_range", range_ok, max(0.0, r3)),
        ConditionCheck("first_angles_equal", r4 <= tol, r4),
        ConditionCheck("alternating_angle_sums", r5 <= tol, r5),
        ConditionCheck("realizable", closed, gap),
    )
    return ValidationReport(checks=checks, passed=all(c.passed for c in checks))


def equivalent(p: CanonicalPolygon, q: CanonicalPolygon, tol: float = DEFAULT_TOL) -> bool:
    """Marked equivalence: every corresponding side and angle agrees within tol
    (relative for lengths, absolute for angles).  No relabeling is allowed."""
    if p.genus != q.genus:
        raise GenusMismatch(f"genus {p.genus} vs {q.genus}")
    for a, b in zip(p.sides, q.sides):
        if abs(a - b) > tol * max(a, b):
            return False
    return all(abs(a - b) <= tol for a, b in zip(p.angles, q.angles))


def is_hyperelliptic(poly: CanonicalPolygon, tol: float = DEFAULT_TOL) -> bool:
    """True when every pair of opposite angles agrees within tol."""
    g = poly.genus
    return all(abs(poly.angles[i] - poly.angles[i + 2 * g]) <= tol
               for i in range(2 * g))


# ---------------------------------------------------------------------------
# JSON document form

def polygon_to_dict(poly: CanonicalPolygon) -> dict:
    return {"genus": poly.genus, "sides": list(poly.sides), "angles": list(poly.angles)}


def polygon_from_dict(doc: dict) -> CanonicalPolygon:
    try:
        genus = doc["genus"]
        sides = doc["sides"]
        angles = doc["angles"]
    except (KeyError, TypeError) as e:
        raise MalformedInput(f"polygon document missing field: {e}") from e
    if not isinstance(genus, int):
        raise MalformedInput("genus must be an integer")
    return CanonicalPolygon(genus, tuple(sides), tuple(angles))


# ---------------------------------------------------------------------------
# fan decomposition from the apex Q_4g

@dataclass(frozen=True)
class TerminalQuad:
    """The leftover quadrilateral Q_4g Q_{4g-3} Q_{4g-2} Q_{4g-1}: sides in
    boundary order starting with the diagonal, angles at (Q_4g, Q_{4g-3},
    Q_{4g-2}, Q_{4g-1}), and the hinge diagonal Q_4g Q_{4g-2}."""

    sides: tuple[float, float, float, float]
    angles: tuple[float, float, float, float]
    diag: float


@dataclass(frozen=True)
class FanDecomposition:
    """Triangulation of a canonical polygon from the apex Q_4g.

    diagonals[i-1] is b_i for i = 1..4g-4: the segment Q_4g Q_{i+1}, except
    b_2g which joins Q_2g and Q_{2g+2}.  phis[i-1] is the angle between b_i
    and a_{i+1} (for i = 2g this sits at Q_2g).  betas[i-1] is the angle
    between b_{i-1} and b_i (beta_1 between a_1 and b_1; entries 2g and 2g+1
    sit at Q_2g and Q_{2g+2} instead of the apex).  gamma is the apex angle
    of the triangle b_{2g-1}, b_2g, b_{2g+1}.
    """

    genus: int
    diagonals: tuple[float, ...]       # b_1..b_{4g-4}
    phis: tuple[float, ...]            # phi_1..phi_{4g-5}
    betas: tuple[float, ...]           # beta_1..beta_{4g-5}
    gamma: float
    triangles: tuple[Triangle, ...]    # T_1..T_{4g-4}
    quad: TerminalQuad


def _interior(x: float, where: str) -> float:
    if not 0.0 < x < math.pi:
        raise FanNotInterior(f"fan angle at {where} is {x}, outside (0, pi)")
    return x


def fan_triangulate(poly: CanonicalPolygon) -> FanDecomposition:
    """Decompose a valid polygon into 4g-4 triangles and one quadrilateral by
    the diagonals from Q_4g (plus the short-cut segment at Q_2g..Q_{2g+2}).

    Raises FanNotInterior when some diagonal would leave the polygon, i.e. the
    polygon is outside the chart of the apex-fan construction.
    """
    g = poly.genus
    if g < 3:
        raise GenusTooSmall("fan decomposition needs genus >= 3")
    n = poly.n
    a = [0.0] + list(poly.sides)        # a[1..4g]
    al = [0.0] + list(poly.angles)      # al[1..4g]

    tris: list[Triangle | None] = [None] * (n - 3)   # tris[1..4g-4]
    b = [0.0] * (n - 3)                 # b[1..4g-4]
    phi = [0.0] * (n - 4)               # phi[1..4g-5]
    beta = [0.0] * (n - 4)              # beta[1..4g-5]

    t1 = solve_sas(a[1], al[1], a[2])
    tris[1] = t1
    b[1] = t1.c
    phi[1] = t1.alpha
    beta[1] = t1.beta

    for i in range(2, 2 * g):
        inc = _interior(al[i] - phi[i - 1], f"Q_{i}")
        t = solve_sas(b[i - 1], inc, a[i + 1])
        tris[i] = t
        b[i] = t.c
        phi[i] = t.alpha
        beta[i] = t.beta

    ear = solve_sas(a[2 * g + 1], al[2 * g + 1], a[2 * g + 2])
    tris[2 * g] = ear
    b[2 * g] = ear.c
    phi[2 * g] = ear.beta               # between b_2g and a_{2g+1}, at Q_2g

    inc = _interior(al[2 * g] - phi[2 * g - 1] - ear.beta, f"Q_{2 * g}")
    bridge = solve_sas(b[2 * g - 1], inc, b[2 * g])
    tris[2 * g + 1] = bridge
    b[2 * g + 1] = bridge.c
    gamma = bridge.beta
    beta[2 * g] = inc                   # between b_{2g-1} and b_2g, at Q_2g
    beta[2 * g + 1] = bridge.alpha      # between b_2g and b_{2g+1}, at Q_{2g+2}
    phi[2 * g + 1] = ear.alpha + bridge.alpha

    apex_after_bridge = 0.0
    for j in range(2 * g + 2, n - 3):
        inc = _interior(al[j] - phi[j - 1], f"Q_{j}")
        t = solve_sas(b[j - 1], inc, a[j + 1])
        tris[j] = t
        b[j] = t.c
        apex_after_bridge += t.beta
        if j <= n - 5:
            phi[j] = t.alpha
            beta[j] = t.beta

    t_last = tris[n - 4]
    phi_last = t_last.alpha             # between b_{4g-4} and a_{4g-3}, at Q_{4g-3}
    apex_total = math.fsum(beta[1:2 * g]) + gamma + apex_after_bridge

    s_b = _interior(al[n - 3] - phi_last, f"Q_{n - 3}")
    s_a = _interior(al[n] - apex_total, f"Q_{n}")
    s_c = al[n - 2]
    s_d = al[n - 1]
    diag = side_from_sas(b[n - 4], a[n - 2], s_b)
    quad = TerminalQuad(
        sides=(b[n - 4], a[n - 2], a[n - 1], a[n]),
        angles=(s_a, s_b, s_c, s_d),
        diag=diag,
    )
    return FanDecomposition(
        genus=g,
        diagonals=tuple(b[1:]),
        phis=tuple(phi[1:]),
        betas=tuple(beta[1:]),
        gamma=gamma,
        triangles=tuple(tris[1:]),
        quad=quad,
    )
