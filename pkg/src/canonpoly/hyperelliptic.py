"""The 4g-2 angle chart for hyperelliptic canonical polygons (genus >= 2).

A hyperelliptic polygon has equal opposite angles; its main diagonals share a
common midpoint O, the fixed point of the involution.  The chart fans the
polygon from O: 2g central triangles determine half the polygon, point
symmetry through O gives the rest.  The chart is full-dimensional, so small
parameter perturbations stay inside it, in contrast to the apex-fan chart.

Like that chart, the recurrences amplify parameter error steeply as the genus
grows, so extraction and reconstruction run their chains in extended
precision and round only their outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf
from scipy.optimize import brentq

from . import _mptrig as mt
from . import embed
from .errors import (
    GenusTooSmall,
    HingeNoBracket,
    MalformedInput,
    MidpointMismatch,
    NotHyperelliptic,
    ParameterDomainError,
)
from .hyptrig import Triangle, solve_sas
from .polygon import CanonicalPolygon, is_hyperelliptic, validate_canonical
from .teich import CHAIN_DPS, QuadAngles

SOLVER_XTOL = 1e-13
SOLVER_MAXITER = 200
HINGE_T_MAX = 600.0


@dataclass(frozen=True)
class HyperParams:
    """Angle vector theta of length 4g-2: theta_i = alpha_i for i = 1..2g-3,
    then delta_1..delta_{2g-1}, then beta, then phi_1."""

    genus: int
    theta: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 2:
            raise GenusTooSmall(f"genus must be >= 2, got {self.genus}")
        object.__setattr__(self, "theta", tuple(float(v) for v in self.theta))
        want = 4 * self.genus - 2
        if len(self.theta) != want:
            raise MalformedInput(f"need {want} parameters, got {len(self.theta)}")
        for v in self.theta:
            if not math.isfinite(v):
                raise MalformedInput("non-finite parameter entry")


@dataclass(frozen=True)
class CentralFan:
    """Measured central fan of a realized hyperelliptic polygon.

    rays[j-1] is the distance from O to Q_j for j = 1..4g.  deltas[i-1] is the
    central angle of the triangle O Q_{i-1} Q_i (delta_1 at O between Q_4g and
    Q_1), for i = 1..2g.  phis[i-1] is the angle of that triangle at Q_i, and
    beta its angle at Q_4g for the first triangle.  triangles holds the 2g
    measured central triangles of the first polygon half.
    """

    genus: int
    center: embed.PlanePoint
    rays: tuple[float, ...]
    deltas: tuple[float, ...]
    phis: tuple[float, ...]
    beta: float
    triangles: tuple[Triangle, ...]
    midpoint_scatter: float


def central_fan(poly: CanonicalPolygon, tol: float = 1e-9,
                midpoint_tol: float = 1e-7) -> CentralFan:
    """Realize the polygon and measure its central fan through the common
    midpoint O of the main diagonals.

    Raises NotHyperelliptic when opposite angles differ beyond tol, and
    MidpointMismatch when the diagonal midpoints scatter beyond midpoint_tol.
    """
    if not is_hyperelliptic(poly, tol=tol):
        raise NotHyperelliptic("opposite angles differ; no central involution")
    g = poly.genus
    n = 4 * g
    pp = embed.realize(poly)
    zs = pp.zs

    mids = [embed.midpoint_h(zs[i], zs[i + 2 * g]) for i in range(2 * g)]
    center = mids[0]
    scatter = max(embed.distance_h(center, m) for m in mids)
    if scatter > midpoint_tol:
        raise MidpointMismatch(
            f"diagonal midpoints scatter by {scatter:.3e} (tol {midpoint_tol:.1e})")

    rays = tuple(embed.distance_h(center, z) for z in zs)
    deltas = tuple(embed.angle_between(zs[i - 1], center, zs[i])
                   for i in range(2 * g))
    phis = tuple(embed.angle_between(zs[i - 1], zs[i], center)
                 for i in range(2 * g))
    beta = embed.angle_between(center, zs[n - 1], zs[0])

    tris = []
    for i in range(2 * g):
        # triangle O Q_{i-1} Q_i: field a holds the polygon side, b and c the
        # rays to the earlier and later vertex; alpha is the central angle
        tris.append(Triangle(
            a=embed.distance_h(zs[i - 1], zs[i]),
            b=rays[i - 1],
            c=rays[i],
            alpha=deltas[i],
            beta=embed.angle_between(center, zs[i - 1], zs[i]),
            gamma=phis[i],
        ))
    return CentralFan(genus=g,
                      center=embed.PlanePoint(embed.HALFPLANE, center.real, center.imag),
                      rays=rays, deltas=deltas, phis=phis, beta=beta,
                      triangles=tuple(tris), midpoint_scatter=scatter)


def _half_diagonals_mp(g: int, a, al):
    """Half lengths of the main diagonals k_j = Q_j Q_{j+2g}, j = 4g, 1..2g-1,
    by chaining triangles along the boundary (1-based padded mp arrays)."""
    n = 4 * g
    half = {}
    for j in [n] + list(range(1, 2 * g)):
        # chord from Q_j across vertices Q_{j+1}..Q_{j+2g}
        chord = a[(j % n) + 1]
        omega = al[(j % n) + 1]
        for k in range(1, 2 * g - 1):
            v = (j + k) % n + 1          # label of vertex Q_{j+k}, as side index
            nxt = a[v if v <= n else v - n]
            new = mt.msas(chord, nxt, omega, f"diagonal from Q_{j}")
            eta = mt.msss(nxt, new, chord, f"diagonal from Q_{j}")
            omega = al[v if v <= n else v - n] - eta
            mt.need(0 < omega < mpmath.pi,
                    f"diagonal chain from Q_{j}: turn angle {float(omega)}")
            chord = new
        half[j] = mt.msas(chord, a[(j + 2 * g - 1) % n + 1], omega,
                          f"diagonal from Q_{j}") / 2
    return half


def extract_theta_h(poly: CanonicalPolygon, tol: float = 1e-9,
                    dps: int = CHAIN_DPS) -> HyperParams:
    """Read the 4g-2 parameters off the central fan of a hyperelliptic polygon.

    central_fan supplies the validity checks; the parameter values themselves
    are recomputed metrically in extended precision (the reconstruction chain
    amplifies any parameter error by many orders of magnitude).
    """
    g = poly.genus
    central_fan(poly, tol=tol)
    with mpmath.workdps(dps):
        a = [mpf(0)] + [mpf(v) for v in poly.sides]
        al = [mpf(0)] + [mpf(v) for v in poly.angles]
        half = _half_diagonals_mp(g, a, al)
        n = 4 * g
        r_prev = half[n]                 # |O Q_4g|
        deltas = []
        for i in range(1, 2 * g):
            r_i = half[i]
            deltas.append(mt.msss(r_prev, r_i, a[i], f"delta_{i}"))
            r_prev = r_i
        beta = mt.msss(a[1], half[n], half[1], "beta")
        phi1 = mt.msss(a[1], half[1], half[n], "phi_1")
        theta = list(poly.angles[: 2 * g - 3])
        theta.extend(float(v) for v in deltas)
        theta.append(float(beta))
        theta.append(float(phi1))
    return HyperParams(genus=g, theta=tuple(theta))


# ---------------------------------------------------------------------------
# hinge solver (two sides at a split vertex, three-angle-sum target)

def solve_quad_hinge(ab: float, ad: float, angle_bac: float, angle_cad: float,
                     three_angle_sum: float) -> QuadAngles:
    """Unique quadrilateral ABCD given AB, AD, the two parts of the angle at A
    cut by the diagonal AC, and the sum of the other three angles.

    The three-angle sum decreases strictly as the diagonal t = AC grows (the
    quadrilateral strictly swallows its shorter version), so the solve is a
    bracketed root find in t.  Raises HingeNoBracket when the target is
    outside the attainable range.
    """
    for name, v in (("ab", ab), ("ad", ad)):
        if not (math.isfinite(v) and v > 0.0):
            raise MalformedInput(f"{name} = {v} must be a positive length")
    for name, v in (("angle_bac", angle_bac), ("angle_cad", angle_cad)):
        if not 0.0 < v < math.pi:
            raise MalformedInput(f"{name} = {v} outside (0, pi)")
    if not 0.0 < three_angle_sum < 3.0 * math.pi:
        raise MalformedInput(f"three_angle_sum = {three_angle_sum} outside (0, 3pi)")

    def three_sum(t: float) -> float:
        tb = solve_sas(ab, angle_bac, t)
        td = solve_sas(ad, angle_cad, t)
        return tb.beta + (tb.alpha + td.alpha) + td.beta

    t_lo = 1e-9
    f_lo = three_sum(t_lo) - three_angle_sum
    if f_lo <= 0.0:
        raise HingeNoBracket(
            f"target {three_angle_sum:.6f} at or above the t -> 0 supremum")
    t_hi = max(ab, ad, 1.0)
    while three_sum(t_hi) - three_angle_sum > 0.0:
        t_hi *= 2.0
        if t_hi > HINGE_T_MAX:
            raise HingeNoBracket(
                f"target {three_angle_sum:.6f} below the large-t infimum")
    t = brentq(lambda x: three_sum(x) - three_angle_sum, t_lo, t_hi,
               xtol=SOLVER_XTOL, maxiter=SOLVER_MAXITER)
    tb = solve_sas(ab, angle_bac, t)
    td = solve_sas(ad, angle_cad, t)
    return QuadAngles(alpha=angle_bac + angle_cad, beta=tb.beta,
                      gamma=tb.alpha + td.alpha, delta=td.beta, diag=t)


# ---------------------------------------------------------------------------
# reconstruction

def reconstruct_hyperelliptic(params: HyperParams,
                              dps: int = CHAIN_DPS) -> CanonicalPolygon:
    """Rebuild the hyperelliptic polygon with parameter vector params.

    The first 2g-2 central triangles are solved from their angles, the last
    two through the hinge solve; the second half of the polygon repeats the
    first by the point symmetry through O.  The output has exactly equal
    opposite sides and angles and passes validate_canonical.
    """
    g = params.genus
    th_f = params.theta
    for k, v in enumerate(th_f, start=1):
        if not 0.0 < v < math.pi:
            raise ParameterDomainError(f"theta_{k} = {v} outside (0, pi)")
    if math.fsum(th_f[2 * g - 3: 4 * g - 4]) >= math.pi:
        raise ParameterDomainError(
            "central angles sum to pi or more; the last one would not be positive")

    with mpmath.workdps(dps):
        th = [mpf(0)] + [mpf(v) for v in th_f]
        al = [mpf(0)] * (2 * g + 1)
        for i in range(1, 2 * g - 2):
            al[i] = th[i]
        de = [mpf(0)] * (2 * g + 1)
        for i in range(1, 2 * g):
            de[i] = th[2 * g - 3 + i]
        beta = th[4 * g - 3]
        phi1 = th[4 * g - 2]
        de[2 * g] = mpmath.pi - sum(de[1:2 * g])

        phi = [mpf(0)] * (2 * g + 1)
        phi[1] = phi1
        rays = [mpf(0)] * (2 * g + 1)    # rays[i] = |O Q_i|
        a = [mpf(0)] * (2 * g + 1)

        ray0 = mt.maaa(de[1], phi[1], beta, "|O Q_4g|")
        rays[1] = mt.maaa(de[1], beta, phi[1], "|O Q_1|")
        a[1] = mt.maaa(beta, de[1], phi[1], "a_1")

        phi[2] = mt.mh(mt.mdom(al[1] - phi[1], "alpha_1 - phi_1"),
                       phi[1], beta, de[1], de[2], "phi_2")
        for i in range(3, 2 * g - 1):
            phi[i] = mt.mh(mt.mdom(al[i - 1] - phi[i - 1], f"alpha_{i-1} - phi_{i-1}"),
                           phi[i - 1],
                           mt.mdom(al[i - 2] - phi[i - 2], f"alpha_{i-2} - phi_{i-2}"),
                           de[i - 1], de[i], f"phi_{i}")
        for i in range(2, 2 * g - 1):
            at_prev = mt.mdom(al[i - 1] - phi[i - 1], f"alpha_{i-1} - phi_{i-1}")
            rays[i] = mt.maaa(de[i], at_prev, phi[i], f"|O Q_{i}|")
            a[i] = mt.maaa(phi[i], de[i], at_prev, f"a_{i}")

        # terminal quadrilateral O Q_{2g-2} Q_{2g-1} Q_2g: |O Q_2g| equals
        # |O Q_4g| by the involution, both central angles are known, and the
        # 2pi angle total forces the sum of its three non-central angles
        three = mpmath.pi - sum(al[1:2 * g - 2]) - beta - phi[2 * g - 2]
        mt.need(0 < three < 3 * mpmath.pi, f"three-angle sum {float(three)} out of range")
        ab, ad = rays[2 * g - 2], ray0

        def s3(t):
            bc = mt.msas(ab, t, de[2 * g - 1], "quad")
            cd = mt.msas(ad, t, de[2 * g], "quad")
            return (mt.msss(ab, bc, t, "quad") + mt.msss(t, bc, ab, "quad")
                    + mt.msss(t, cd, ad, "quad") + mt.msss(ad, cd, t, "quad")) - three

        t_lo = mpf("1e-12")
        f_lo = s3(t_lo)
        mt.need(f_lo > 0, "hinge target at or above the small-diagonal supremum")
        t_hi = max(ab, ad, mpf(1))
        f_hi = s3(t_hi)
        while f_hi > 0:
            t_hi *= 2
            mt.need(t_hi <= HINGE_T_MAX,
                    "hinge target below the large-diagonal infimum")
            f_hi = s3(t_hi)
        t = mt.bracketed_root(s3, t_lo, t_hi, f_lo, f_hi,
                              mpf(10) ** (-(dps - 8)))

        bc = mt.msas(ab, t, de[2 * g - 1], "quad")
        cd = mt.msas(ad, t, de[2 * g], "quad")
        ang_bca = mt.msss(t, bc, ab, "quad")
        ang_abc = mt.msss(ab, bc, t, "quad")
        ang_acd = mt.msss(t, cd, ad, "quad")
        ang_cda = mt.msss(ad, cd, t, "quad")

        rays[2 * g - 1] = t
        rays[2 * g] = ray0
        phi[2 * g - 1] = ang_bca
        phi[2 * g] = ang_cda
        a[2 * g - 1] = bc
        a[2 * g] = cd
        al[2 * g - 2] = phi[2 * g - 2] + ang_abc
        al[2 * g - 1] = ang_bca + ang_acd
        al[2 * g] = ang_cda + beta
        for i in range(2 * g - 2, 2 * g + 1):
            mt.need(0 < al[i] < mpmath.pi,
                    f"reconstructed alpha_{i} = {float(al[i])} outside (0, pi)")

        half_sides = [float(v) for v in a[1:2 * g + 1]]
        half_angles = [float(v) for v in al[1:2 * g + 1]]

    poly = CanonicalPolygon(g, tuple(half_sides * 2), tuple(half_angles * 2))
    report = validate_canonical(poly, tol=1e-8)
    if not report.passed:
        bad = [c.name for c in report.checks if not c.passed]
        raise ParameterDomainError(
            f"reconstructed polygon failed validation: {', '.join(bad)}")
    return poly
