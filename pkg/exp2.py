"""Experiment 2: fan decomposition vs realization; quad targets; angle_f branch."""
import math
import sys
sys.path.insert(0, "src")

from canonpoly import embed
from canonpoly.polygon import regular_polygon, fan_triangulate, validate_canonical
from canonpoly.hyptrig import side_from_sas, angle_from_sss
from canonpoly.embed import realize, angle_between, distance_h

g = 3
P = regular_polygon(g)
n = 4 * g
print("validate:", validate_canonical(P).passed)
fan = fan_triangulate(P)
pp = realize(P)
zs = pp.zs  # zs[j] = Q_{j+1}

def Q(i):  # 1-based
    return zs[(i - 1) % n]

# measured diagonals
errs = []
for i in range(1, n - 3):
    if i == 2 * g:
        m = distance_h(Q(2 * g), Q(2 * g + 2))
    else:
        m = distance_h(Q(n), Q(i + 1))
    errs.append(abs(m - fan.diagonals[i - 1]))
print("max diagonal err:", max(errs))

# measured betas (apex angles except slots 2g, 2g+1), phis
berrs = []
for i in range(1, n - 4):
    if i == 1:
        m = angle_between(Q(1), Q(n), Q(2))
    elif i == 2 * g:
        m = angle_between(Q(n), Q(2 * g), Q(2 * g + 2))
    elif i == 2 * g + 1:
        m = angle_between(Q(2 * g), Q(2 * g + 2), Q(n))
    else:
        m = angle_between(Q(i), Q(n), Q(i + 1))
    berrs.append(abs(m - fan.betas[i - 1]))
print("max beta err:", max(berrs))

perrs = []
for i in range(1, n - 4):
    if i == 2 * g:
        m = angle_between(Q(2 * g + 2), Q(2 * g), Q(2 * g + 1))
    else:
        m = angle_between(Q(i), Q(i + 1), Q(n))
    perrs.append(abs(m - fan.phis[i - 1]))
print("max phi err:", max(perrs))

print("gamma err:", abs(angle_between(Q(2 * g), Q(n), Q(2 * g + 2)) - fan.gamma))
print("b_2g vs b_1:", abs(fan.diagonals[2 * g - 1] - fan.diagonals[0]))

# quad angles measured
qa = (angle_between(Q(n - 3), Q(n), Q(n - 1)),
      angle_between(Q(n), Q(n - 3), Q(n - 2)),
      angle_between(Q(n - 3), Q(n - 2), Q(n - 1)),
      angle_between(Q(n - 2), Q(n - 1), Q(n)))
print("quad angle errs:", [abs(x - y) for x, y in zip(qa, fan.quad.angles)])
print("quad diag err:", abs(distance_h(Q(n), Q(n - 2)) - fan.quad.diag))

# angle partition: sum of all piece angles = 2 pi
tot = math.fsum(t.angle_sum() for t in fan.triangles) + math.fsum(fan.quad.angles)
print("total piece angles - 2pi:", tot - 2 * math.pi)

# --- targets identity check (teich):
# sum target and alt target computed from parameters must equal measured quad sums
al = [0.0] + list(P.angles)
betas = fan.betas
apex_total = math.fsum(betas[0:2 * g - 1]) + fan.gamma + math.fsum(
    fan.triangles[j - 1].beta for j in range(2 * g + 2, n - 3)) + fan.triangles[n - 5].beta
# NB triangles[j-1] is T_j; T_{4g-4} = triangles[n-5]
phi_last = fan.triangles[n - 5].alpha
R = 2 * math.pi - math.fsum(al[i] for i in range(1, n - 3))
sum_target = R - phi_last - apex_total
odd1 = math.fsum(al[i] for i in range(1, 2 * g, 2))
even1 = math.fsum(al[i] for i in range(2, 2 * g + 1, 2))
even2k = math.fsum(al[i] for i in range(2 * g + 2, n - 3, 2))
odd2k = math.fsum(al[i] for i in range(2 * g + 1, n - 4, 2))
K = odd1 - even1 + even2k - odd2k
alt_target = -K - apex_total + phi_last
sA, sB, sC, sD = fan.quad.angles
print("sum target err:", sum_target - (sA + sB + sC + sD))
print("alt target err:", alt_target - (sA - sB + sC - sD))

# --- monotonicity scan of the quad angle-sum over the hinge interval
import numpy as np
def scan(sides, m=20001):
    s1, s2, s3, s4 = sides
    lo = max(abs(s1 - s2), abs(s3 - s4)) + 1e-6
    hi = min(s1 + s2, s3 + s4) - 1e-6
    ts = np.linspace(lo, hi, m)
    def asum(t):
        B = angle_from_sss(s1, s2, t); bac = angle_from_sss(s1, t, s2); bca = angle_from_sss(s2, t, s1)
        D = angle_from_sss(s3, s4, t); acd = angle_from_sss(s3, t, s4); cad = angle_from_sss(s4, t, s3)
        return bac + cad + B + bca + acd + D
    vals = np.array([asum(t) for t in ts])
    d = np.diff(vals)
    return ts, vals, int(np.sum(d > 0)), int(np.sum(d < 0))

ts, vals, up, dn = scan(fan.quad.sides)
print(f"regular g3 quad S: ups={up} downs={dn}  (monotone if one is 0)")
print("  angle_sum range:", vals.min(), vals.max(), " target:", sum_target)

rng = np.random.default_rng(0)
bad = 0
for k in range(200):
    s = rng.uniform(0.3, 3.0, size=4)
    if max(abs(s[0]-s[1]), abs(s[2]-s[3])) + 2e-6 >= min(s[0]+s[1], s[2]+s[3]):
        continue
    ts, vals, up, dn = scan(tuple(s), 2001)
    if up and dn:
        bad += 1
        if bad <= 3:
            print("NON-MONOTONE example:", s, up, dn)
print("non-monotone random quadruples:", bad, "/200")

# --- angle_f printed-formula branch test
from canonpoly.hyptrig import angle_f
def f_naive(c, beta, a, with_sinh_a):
    val = math.sinh(c) * math.sin(beta)
    den = math.sqrt((math.cosh(a) * math.cosh(c) - math.sinh(a) * math.sinh(c) * math.cos(beta)) ** 2 - 1.0)
    if with_sinh_a:
        den *= math.sinh(a)
    return math.asin(min(1.0, val / den))

c0, b0, a0 = math.acosh(2.0), math.pi / 3, math.acosh(2.0)
print("angle_f:", angle_f(c0, b0, a0), " naive:", f_naive(c0, b0, a0, False),
      " naive*sinh a:", f_naive(c0, b0, a0, True))
print("obtuse angle_f(2.5, 2.8, 0.3):", angle_f(2.5, 2.8, 0.3),
      " naive:", f_naive(2.5, 2.8, 0.3, False))
