"""Experiment 1: realization conventions on the regular octagon."""
import math
import sys
sys.path.insert(0, "src")

from canonpoly import embed
from canonpoly.embed import realize, closure_gap, measure_sides, measure_angles, polygon_area
from dataclasses import dataclass

@dataclass
class Poly:
    genus: int
    sides: tuple
    angles: tuple

def regular(g):
    n = 4 * g
    alpha = math.pi / (2 * g)
    s = 2.0 * math.acosh(1.0 / math.tan(math.pi / n))
    return Poly(g, (s,) * n, (alpha,) * n)

for g in (2, 3, 4, 5):
    P = regular(g)
    gap = closure_gap(P)
    print(f"g={g}: closure gap = {gap:.3e}")

P = regular(2)
pp = realize(P)
ms = measure_sides(pp)
ma = measure_angles(pp)
print("side err ", max(abs(a - b) for a, b in zip(ms, P.sides)))
print("angle err", max(abs(a - b) for a, b in zip(ma, P.angles)))
print("area - 4pi =", polygon_area(pp) - 4 * math.pi)

# orientation: ascending-index traversal should be clockwise (negative shoelace)
zs = pp.zs
shoe = sum((zs[k].real * zs[(k + 1) % 8].imag - zs[(k + 1) % 8].real * zs[k].imag) for k in range(8))
print("euclidean shoelace (ascending):", shoe, "(negative = clockwise)")

# side pairings
gens = side_pairings = embed.side_pairings(pp)
for i, G in enumerate(gens, 1):
    print(f"gamma_{i}: trace {G.trace():+.6f} class {embed.classify(G)} det {G.det():.12f}")

# endpoint check for gamma_1 (odd): maps (Q_0=Q_8, Q_1) -> (Q_{1+4}, Q_{1+4-1}) = (Q_5, Q_4)
d1 = embed.distance_h(gens[0].apply(zs[7]), zs[4])
d2 = embed.distance_h(gens[0].apply(zs[0]), zs[3])
print("gamma_1 endpoint errors:", d1, d2)

# disjointness: barycenter image must leave the polygon
bary = sum(zs) / 8
print("bary inside:", embed.contains_point(pp, bary))
for i, G in enumerate(gens, 1):
    print(f"gamma_{i}(bary) inside: {embed.contains_point(pp, G.apply(bary))}")

# relation defect, printed order and the three natural reorderings
def defect(order_gens):
    W = embed.IDENTITY
    for G in order_gens:
        W = W @ G
    return W.normalized().frobenius_from(embed.IDENTITY)

inv = [G.inverse() for G in gens]
print("printed  g1 g2 g3 g4 g1' g2' g3' g4':", defect(gens + inv))
print("reversed g4' g3' g2' g1' g4 g3 g2 g1:", defect(inv[::-1] + gens[::-1]))
print("block-reversed g1..g4 g4'..g1':      ", defect(gens + inv[::-1]))
print("swap blocks g1'..g4' g1..g4:         ", defect(inv + gens))
