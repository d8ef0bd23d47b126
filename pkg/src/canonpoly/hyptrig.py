"""Closed-form hyperbolic trigonometry: cosine/sine rules and triangle solvers.

All functions work in curvature -1 with plain floats.  Angle recovery always
goes through arccos of a side-based expression, never arcsin, so obtuse angles
come out right.  Arguments within 1e-12 of an arccos/arccosh boundary are
clamped; anything further out raises.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AngleSumNotHyperbolic,
    MalformedInput,
    NotRealizable,
    TriangleInequalityViolated,
)

CLAMP_TOL = 1e-12


def _check_finite(**vals: float) -> None:
    for name, v in vals.items():
        if not math.isfinite(v):
            raise MalformedInput(f"{name} = {v} is not finite")


def _check_angle(name: str, v: float) -> None:
    if not 0.0 < v < math.pi:
        raise MalformedInput(f"{name} = {v} outside (0, pi)")


def _acos_guarded(x: float, exc: type[Exception], what: str) -> float:
    if x > 1.0:
        if x > 1.0 + CLAMP_TOL:
            raise exc(f"{what}: cosine argument {x} > 1")
        x = 1.0
    elif x < -1.0:
        if x < -1.0 - CLAMP_TOL:
            raise exc(f"{what}: cosine argument {x} < -1")
        x = -1.0
    return math.acos(x)


def _acosh_guarded(x: float, exc: type[Exception], what: str) -> float:
    if x < 1.0:
        if x < 1.0 - CLAMP_TOL:
            raise exc(f"{what}: arccosh argument {x} < 1")
        x = 1.0
    return math.acosh(x)


def side_from_sas(a: float, b: float, gamma: float) -> float:
    """Third side from two sides and the included angle.

    cosh c = cosh a cosh b - sinh a sinh b cos gamma.
    """
    _check_finite(a=a, b=b, gamma=gamma)
    if a < 0.0 or b < 0.0:
        raise MalformedInput(f"side lengths must be >= 0, got {a}, {b}")
    _check_angle("gamma", gamma)
    q = math.cosh(a) * math.cosh(b) - math.sinh(a) * math.sinh(b) * math.cos(gamma)
    return _acosh_guarded(q, NotRealizable, "side_from_sas")


def angle_from_sss(a: float, b: float, c: float) -> float:
    """Angle between sides a and b (opposite c) from the three side lengths."""
    _check_finite(a=a, b=b, c=c)
    if min(a, b, c) <= 0.0:
        raise MalformedInput(f"side lengths must be > 0, got {a}, {b}, {c}")
    q = (math.cosh(a) * math.cosh(b) - math.cosh(c)) / (math.sinh(a) * math.sinh(b))
    return _acos_guarded(q, TriangleInequalityViolated, "angle_from_sss")


def angle_psi(alpha: float, c: float, beta: float) -> float:
    """Third angle of the triangle whose side c lies between angles alpha, beta.

    cos gamma = -cos alpha cos beta + sin alpha sin beta cosh c.
    """
    _check_finite(alpha=alpha, c=c, beta=beta)
    _check_angle("alpha", alpha)
    _check_angle("beta", beta)
    if c < 0.0:
        raise MalformedInput(f"side length must be >= 0, got {c}")
    q = -math.cos(alpha) * math.cos(beta) + math.sin(alpha) * math.sin(beta) * math.cosh(c)
    return _acos_guarded(q, NotRealizable, "angle_psi")


def side_from_aaa(alpha: float, beta: float, gamma: float) -> float:
    """Side opposite beta, between the vertices with angles alpha and gamma.

    cosh b = (cos beta + cos alpha cos gamma) / (sin alpha sin gamma); defined
    only for hyperbolic angle triples (sum strictly below pi).
    """
    _check_finite(alpha=alpha, beta=beta, gamma=gamma)
    _check_angle("alpha", alpha)
    _check_angle("beta", beta)
    _check_angle("gamma", gamma)
    if alpha + beta + gamma >= math.pi - CLAMP_TOL:
        raise AngleSumNotHyperbolic(
            f"angle sum {alpha + beta + gamma} not below pi")
    q = (math.cos(beta) + math.cos(alpha) * math.cos(gamma)) / (
        math.sin(alpha) * math.sin(gamma))
    return _acosh_guarded(q, AngleSumNotHyperbolic, "side_from_aaa")


def angle_f(c: float, beta: float, a: float) -> float:
    """Angle opposite side c in the triangle with sides a, c enclosing beta.

    Solved through the third side and arccos (branch-safe for obtuse results):
    b = side_from_sas(a, c, beta), then angle_from_sss(a, b, c).
    """
    b = side_from_sas(a, c, beta)
    return angle_from_sss(a, b, c)


def angle_h(beta1: float, beta2: float, gamma: float,
            delta2: float, delta1: float) -> float:
    """Apex angle of a quadrilateral assembled from two triangles that share a
    diagonal: angle_psi(beta1, side_from_aaa(beta2, gamma, delta2), delta1)."""
    return angle_psi(beta1, side_from_aaa(beta2, gamma, delta2), delta1)


@dataclass(frozen=True)
class Triangle:
    """Sides a, b, c and opposite angles alpha, beta, gamma."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float

    def angle_sum(self) -> float:
        return self.alpha + self.beta + self.gamma

    def defect(self) -> float:
        """Angle defect pi - (alpha + beta + gamma), equal to the area."""
        return math.pi - self.angle_sum()

    def sine_rule_residual(self) -> float:
        """Largest relative spread of sinh(side)/sin(angle) over the three pairs."""
        rs = (math.sinh(self.a) / math.sin(self.alpha),
              math.sinh(self.b) / math.sin(self.beta),
              math.sinh(self.c) / math.sin(self.gamma))
        m = max(rs)
        return (m - min(rs)) / m


def solve_sas(a: float, gamma: float, b: float) -> Triangle:
    """Complete triangle from sides a, b enclosing angle gamma (gamma kept exact)."""
    if a <= 0.0 or b <= 0.0:
        raise MalformedInput(f"side lengths must be > 0, got {a}, {b}")
    c = side_from_sas(a, b, gamma)
    alpha = angle_from_sss(b, c, a)
    beta = angle_from_sss(a, c, b)
    return Triangle(a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma)


def schmutz_compare(a: float, b: float, gamma1: float, gamma2: float) -> int:
    """Order of the opposite sides c1, c2 for two SAS triangles on the same legs:
    -1, 0 or 1 as c1 <, ==, > c2.  Matches the order of gamma1 vs gamma2."""
    c1 = side_from_sas(a, b, gamma1)
    c2 = side_from_sas(a, b, gamma2)
    return (c1 > c2) - (c1 < c2)
