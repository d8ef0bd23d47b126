"""The 6g-5 angle chart for canonical polygons of genus >= 3.

extract_theta reads the parameters off the apex fan; reconstruct_teich runs
the recurrence chain that rebuilds every fan triangle from the parameters and
closes the terminal quadrilateral with a hinge solve.  The parameter count
exceeds the dimension of the space by one, so reconstruction carries a scalar
consistency condition: generic random parameter vectors are rejected.

The chain is severely ill-conditioned: each step amplifies parameter error by
the reciprocal of a small fan angle (a factor of 60..200 at desk scales), so
the reconstruction core runs in extended precision and rounds only its final
output.  Double precision would otherwise lose 8+ digits before the terminal
quadrilateral at genus 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mpf
from scipy.optimize import brentq

from .errors import (
    FanNotInterior,
    GenusTooSmall,
    ImageConsistencyError,
    MalformedInput,
    NoBracket,
    ParameterDomainError,
)
from . import _mptrig as mt
from .hyptrig import angle_from_sss
from .polygon import CanonicalPolygon, validate_canonical

BRACKET_EPS = 1e-9
SOLVER_XTOL = 1e-13
SOLVER_MAXITER = 200
TOL_CONSISTENCY = 1e-7
CHAIN_DPS = 40


@dataclass(frozen=True)
class TeichParams:
    """Angle vector theta of length 6g-5: theta_i = alpha_i for i = 1..4g-4
    except theta_{2g+1} = phi_1, and theta_{4g-4+i} = beta_i for i = 1..2g-1."""

    genus: int
    theta: tuple[float, ...]

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 3:
            raise GenusTooSmall(f"this chart needs genus >= 3, got {self.genus}")
        object.__setattr__(self, "theta", tuple(float(v) for v in self.theta))
        want = 6 * self.genus - 5
        if len(self.theta) != want:
            raise MalformedInput(f"need {want} parameters, got {len(self.theta)}")
        for v in self.theta:
            if not math.isfinite(v):
                raise MalformedInput("non-finite parameter entry")


@dataclass(frozen=True)
class QuadAngles:
    """Angles of a quadrilateral at its vertices in natural order, plus the
    hinge diagonal joining the first and third vertex."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    diag: float


def extract_theta(poly: CanonicalPolygon, dps: int = CHAIN_DPS) -> TeichParams:
    """Read the 6g-5 parameters off a valid polygon's apex fan.

    The fan chain runs in extended precision so that the returned floats carry
    only rounding error; the reconstruction chain amplifies any parameter
    error by many orders of magnitude.
    """
    g = poly.genus
    if g < 3:
        raise GenusTooSmall("this chart needs genus >= 3")
    phi1, betas = _extract_fan_mp(poly, dps)
    theta = list(poly.angles[: 4 * g - 4])
    theta[2 * g] = phi1
    theta.extend(betas)
    return TeichParams(genus=g, theta=tuple(theta))


# ---------------------------------------------------------------------------
# public terminal-quadrilateral hinge solve (double precision)

def _quad_angles_at(sides, t: float):
    """The four vertex angles of the hinged quadrilateral at diagonal t."""
    s1, s2, s3, s4 = sides
    bac = angle_from_sss(s1, t, s2)
    bca = angle_from_sss(s2, t, s1)
    cad = angle_from_sss(s4, t, s3)
    acd = angle_from_sss(s3, t, s4)
    sb = angle_from_sss(s1, s2, t)
    sd = angle_from_sss(s3, s4, t)
    return bac + cad, sb, bca + acd, sd


def solve_quad_teich(sides, angle_sum: float, alt_sum: float,
                     tol_consistency: float = TOL_CONSISTENCY) -> QuadAngles:
    """Unique quadrilateral with four given sides, total angle sum and
    alternating angle sum (signed + - + - from the first vertex).

    The rooted quantity is the pair of angles opposite the hinge diagonal,
    beta + delta = (angle_sum - alt_sum)/2, strictly increasing in the
    diagonal; the raw angle sum itself is not monotone (it is critical at
    concyclic configurations), so it only enters through the targets.  The
    complementary pair alpha + gamma is then the consistency check:
    NoBracket when the monotone target is unattainable on the hinge interval,
    ImageConsistencyError when the one-parameter family cannot meet both
    targets at once.
    """
    s1, s2, s3, s4 = sides
    for name, v in (("s1", s1), ("s2", s2), ("s3", s3), ("s4", s4)):
        if not (math.isfinite(v) and v > 0.0):
            raise MalformedInput(f"{name} = {v} must be a positive length")
    if not (math.isfinite(angle_sum) and math.isfinite(alt_sum)):
        raise MalformedInput("targets must be finite")

    lo = max(abs(s1 - s2), abs(s3 - s4)) + BRACKET_EPS
    hi = min(s1 + s2, s3 + s4) - BRACKET_EPS
    if lo >= hi:
        raise NoBracket(f"empty hinge interval ({lo}, {hi})")

    bd_target = 0.5 * (angle_sum - alt_sum)

    def f(t: float) -> float:
        return angle_from_sss(s1, s2, t) + angle_from_sss(s3, s4, t) - bd_target

    f_lo, f_hi = f(lo), f(hi)
    if f_lo > 0.0 or f_hi < 0.0:
        raise NoBracket(
            f"angle target {bd_target:.6f} outside attainable range "
            f"[{f_lo + bd_target:.6f}, {f_hi + bd_target:.6f}]")
    t = brentq(f, lo, hi, xtol=SOLVER_XTOL, maxiter=SOLVER_MAXITER)

    sa, sb, sc, sd = _quad_angles_at(sides, t)
    residual = abs((sa + sc) - 0.5 * (angle_sum + alt_sum))
    if residual > tol_consistency:
        raise ImageConsistencyError(
            f"alternating-sum residual {residual:.3e} exceeds {tol_consistency:.1e}",
            residual=residual)
    return QuadAngles(alpha=sa, beta=sb, gamma=sc, delta=sd, diag=t)


# ---------------------------------------------------------------------------
# extended-precision cores

def _extract_fan_mp(poly: CanonicalPolygon, dps: int) -> tuple[float, list[float]]:
    """First-half fan chain in extended precision: phi_1 and beta_1..beta_{2g-1}."""
    g = poly.genus
    with mpmath.workdps(dps):
        a = [mpf(0)] + [mpf(v) for v in poly.sides]
        al = [mpf(0)] + [mpf(v) for v in poly.angles]
        betas = []
        b_prev = mt.msas(a[1], a[2], al[1])
        phi_prev = mt.msss(a[2], b_prev, a[1])
        betas.append(mt.msss(a[1], b_prev, a[2]))
        phi1 = float(phi_prev)
        for i in range(2, 2 * g):
            inc = al[i] - phi_prev
            if not 0 < inc < mpmath.pi:
                raise FanNotInterior(
                    f"fan angle at Q_{i} is {float(inc)}, outside (0, pi)")
            b_i = mt.msas(b_prev, a[i + 1], inc)
            phi_prev = mt.msss(a[i + 1], b_i, b_prev)
            betas.append(mt.msss(b_prev, b_i, a[i + 1]))
            b_prev = b_i
        return phi1, [float(v) for v in betas]


def _reconstruct_core(params: TeichParams, tol_consistency: float,
                      check_consistency: bool,
                      dps: int = CHAIN_DPS) -> tuple[CanonicalPolygon, float]:
    """Run the full recurrence chain; returns the polygon and the consistency
    residual of the terminal quadrilateral."""
    g = params.genus
    n = 4 * g

    for k, v in enumerate(params.theta, start=1):
        if not 0.0 < v < math.pi:
            raise ParameterDomainError(f"theta_{k} = {v} outside (0, pi)")

    with mpmath.workdps(dps):
        th = [mpf(0)] + [mpf(v) for v in params.theta]
        al = [mpf(0)] * (n + 1)
        for i in range(1, n - 3):
            al[i] = th[i]
        al[2 * g + 1] = th[1]           # equal first angles across the halves
        beta = [mpf(0)] * (2 * g)
        for i in range(1, 2 * g):
            beta[i] = th[n - 4 + i]

        a = [mpf(0)] * (n + 1)
        b = [mpf(0)] * (n - 3)
        phi = [mpf(0)] * (n - 3)
        phi[1] = th[2 * g + 1]

        # first-half fan triangles, all three angles known
        a[1] = mt.maaa(beta[1], phi[1], al[1], "a_1")
        a[2] = mt.maaa(al[1], beta[1], phi[1], "a_2")
        b[1] = mt.maaa(phi[1], al[1], beta[1], "b_1")

        phi[2] = mt.mh(mt.mdom(al[2] - phi[1], "alpha_2 - phi_1"),
                     phi[1], al[1], beta[1], beta[2], "phi_2")
        for i in range(3, 2 * g):
            phi[i] = mt.mh(mt.mdom(al[i] - phi[i - 1], f"alpha_{i} - phi_{i-1}"),
                         phi[i - 1],
                         mt.mdom(al[i - 1] - phi[i - 2], f"alpha_{i-1} - phi_{i-2}"),
                         beta[i - 1], beta[i], f"phi_{i}")
        for i in range(2, 2 * g):
            inc = al[i] - phi[i - 1]
            b[i] = mt.maaa(phi[i], inc, beta[i], f"b_{i}")
            a[i + 1] = mt.maaa(inc, beta[i], phi[i], f"a_{i+1}")

        # opposite sides are equal by definition
        for i in range(1, 2 * g + 1):
            a[i + 2 * g] = a[i]

        # short-cut triangle at Q_2g..Q_{2g+2} is congruent to the first one
        b[2 * g] = b[1]
        inc_bridge = mt.mdom(al[2 * g] - phi[2 * g - 1] - beta[1],
                           "bridge angle at Q_2g")
        gamma = mt.mf(b[2 * g], inc_bridge, b[2 * g - 1], "gamma")
        chi = mt.mpsi(inc_bridge, b[2 * g - 1], gamma, "chi")
        phi[2 * g + 1] = phi[1] + chi
        b[2 * g + 1] = mt.maaa(chi, inc_bridge, gamma, "b_{2g+1}")

        # second-half fan triangles: two sides known, apex angle recovered
        apex_rest = mpf(0)
        for j in range(2 * g + 2, n - 3):
            inc = mt.mdom(al[j] - phi[j - 1], f"alpha_{j} - phi_{j-1}")
            bt = mt.mf(a[j + 1], inc, b[j - 1], f"beta_{j}")
            phi[j] = mt.mpsi(inc, b[j - 1], bt, f"phi_{j}")
            b[j] = mt.maaa(phi[j], inc, bt, f"b_{j}")
            apex_rest += bt

        phi_last = phi[n - 4]
        apex_total = sum(beta[1:]) + gamma + apex_rest

        # remaining four angles follow from the 2pi angle sum and the
        # alternating angle condition; both reduce to quadrilateral targets
        sum_target = 2 * mpmath.pi - sum(al[1:n - 3]) - phi_last - apex_total
        acc = mpf(0)
        for i in range(1, 2 * g, 2):
            acc += al[i] - al[i + 1]                # odd minus even, first half
        for i in range(2 * g + 1, n - 3):
            acc += al[i] if i % 2 == 0 else -al[i]  # even minus odd, second half
        alt_target = -acc - apex_total + phi_last

        s1, s2, s3, s4 = b[n - 4], a[n - 2], a[n - 1], a[n]
        lo = max(abs(s1 - s2), abs(s3 - s4)) * (1 + mpf("1e-25")) + mpf("1e-25")
        hi = min(s1 + s2, s3 + s4) * (1 - mpf("1e-25"))
        mt.need(lo < hi, "terminal quadrilateral: empty hinge interval")
        bd_target = (sum_target - alt_target) / 2

        def fq(t):
            return (mt.msss(s1, s2, t, "quad") + mt.msss(s3, s4, t, "quad")
                    - bd_target)

        f_lo, f_hi = fq(lo), fq(hi)
        mt.need(f_lo <= 0 <= f_hi,
              "terminal quadrilateral: angle target outside attainable range")
        t = mt.bracketed_root(fq, lo, hi, f_lo, f_hi, mpf(10) ** (-(dps - 8)))

        sb = mt.msss(s1, s2, t, "quad")
        sd = mt.msss(s3, s4, t, "quad")
        sa = mt.msss(s1, t, s2, "quad") + mt.msss(s4, t, s3, "quad")
        sc = mt.msss(s2, t, s1, "quad") + mt.msss(s3, t, s4, "quad")
        residual = float(abs((sa + sc) - (sum_target + alt_target) / 2))

        al[n - 3] = sb + phi_last
        al[n - 2] = sc
        al[n - 1] = sd
        al[n] = sa + apex_total
        for i in (n - 3, n - 2, n - 1, n):
            mt.need(0 < al[i] < mpmath.pi,
                  f"reconstructed alpha_{i} = {float(al[i])} outside (0, pi)")

        sides_out = tuple(float(v) for v in a[1:])
        angles_out = tuple(float(v) for v in al[1:])

    if check_consistency and residual > tol_consistency:
        raise ImageConsistencyError(
            f"consistency residual {residual:.3e} exceeds {tol_consistency:.1e}; "
            "the parameter vector is not in the image of the chart",
            residual=residual)
    return CanonicalPolygon(g, sides_out, angles_out), residual


def reconstruct_teich(params: TeichParams,
                      tol_consistency: float = TOL_CONSISTENCY,
                      dps: int = CHAIN_DPS) -> CanonicalPolygon:
    """Rebuild the canonical polygon with parameter vector params.

    Raises ParameterDomainError when an intermediate step leaves the chart and
    ImageConsistencyError when the scalar consistency condition fails (the
    expected outcome for generic random vectors).  The returned polygon always
    passes validate_canonical.
    """
    poly, _ = _reconstruct_core(params, tol_consistency,
                                check_consistency=True, dps=dps)
    report = validate_canonical(poly, tol=1e-8)
    if not report.passed:
        bad = [c.name for c in report.checks if not c.passed]
        raise ParameterDomainError(
            f"reconstructed polygon failed validation: {', '.join(bad)}")
    return poly
