"""Extended-precision triangle formulas shared by the two parameter charts.

The reconstruction recurrences amplify parameter error by the reciprocal of
small fan angles at every step, so the charts evaluate internally in mpmath
and round only their outputs.  Domain violations raise ParameterDomainError
with the offending quantity; arguments within 1e-12 of an arccos/arccosh
boundary are clamped, matching the double-precision policy.
"""

from __future__ import annotations

import mpmath
from mpmath import mpf

from .errors import ParameterDomainError


def need(cond: bool, what: str):
    if not cond:
        raise ParameterDomainError(what)


def macos(x, what: str):
    if x > 1:
        need(x <= 1 + mpf("1e-12"), f"{what}: cosine argument {float(x)} > 1")
        x = mpf(1)
    elif x < -1:
        need(x >= -1 - mpf("1e-12"), f"{what}: cosine argument {float(x)} < -1")
        x = mpf(-1)
    return mpmath.acos(x)


def macosh(x, what: str):
    if x < 1:
        need(x >= 1 - mpf("1e-12"), f"{what}: arccosh argument {float(x)} < 1")
        x = mpf(1)
    return mpmath.acosh(x)


def mdom(x, what: str):
    need(0 < x < mpmath.pi, f"{what} = {float(x)} outside (0, pi)")
    return x


def msss(a, b, c, what="angle"):
    """Angle between sides a, b opposite side c."""
    return macos((mpmath.cosh(a) * mpmath.cosh(b) - mpmath.cosh(c))
                 / (mpmath.sinh(a) * mpmath.sinh(b)), what)


def msas(a, b, ga, what="side"):
    """Side opposite the included angle ga between sides a and b."""
    return macosh(mpmath.cosh(a) * mpmath.cosh(b)
                  - mpmath.sinh(a) * mpmath.sinh(b) * mpmath.cos(ga), what)


def maaa(al, be, ga, what="side"):
    """Side opposite beta, between the vertices with angles al and ga."""
    need(al + be + ga < mpmath.pi, f"{what}: angle sum {float(al + be + ga)} >= pi")
    return macosh((mpmath.cos(be) + mpmath.cos(al) * mpmath.cos(ga))
                  / (mpmath.sin(al) * mpmath.sin(ga)), what)


def mpsi(al, c, be, what="angle"):
    """Third angle of the triangle with side c between angles al and be."""
    return macos(-mpmath.cos(al) * mpmath.cos(be)
                 + mpmath.sin(al) * mpmath.sin(be) * mpmath.cosh(c), what)


def mf(c, be, a, what="angle"):
    """Angle opposite c in the triangle with sides a, c enclosing be."""
    b = msas(a, c, be, what)
    return msss(a, b, c, what)


def mh(b1, b2, g_, d2, d1, what="angle"):
    """Apex angle of two triangles joined along a shared diagonal."""
    return mpsi(b1, maaa(b2, g_, d2, what), d1, what)


def bracketed_root(f, lo, hi, f_lo, f_hi, tol):
    """Illinois-damped regula falsi on a bracketing interval, in mpmath."""
    for _ in range(200):
        if hi - lo < tol:
            break
        t = lo - f_lo * (hi - lo) / (f_hi - f_lo)
        if not lo < t < hi:
            t = (lo + hi) / 2
        ft = f(t)
        if ft == 0:
            return t
        if (ft < 0) == (f_lo < 0):
            lo, f_lo = t, ft
            f_hi = f_hi / 2
        else:
            hi, f_hi = t, ft
            f_lo = f_lo / 2
    return (lo + hi) / 2
