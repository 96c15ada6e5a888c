"""Find the intersection points behind one coefficient, by hand sized steps.

For mu^k we displace two skeleton loci: the set where the r-k+1 smallest
coordinates agree (moved to a strictly decreasing base point a) and the set
where the k+1 largest agree (moved to a strictly increasing b).  Generic
displacements meet the matroid fan in finitely many points; summing their
lattice indices gives the coefficient.
"""

from fractions import Fraction

from matchow import (
    Matroid,
    full_coordinates,
    intersect_triple,
    stable_intersection_points,
)


def nice(point) -> str:
    return "(" + ", ".join(str(x) for x in full_coordinates(point)) + ")"


m = Matroid.boolean(3)
k = 1
print(f"matroid: {m}, target mu^{k} = {m.mu(k)}")
print()

# Hand-picked displacements keep the arithmetic readable.
a = (Fraction(-1), Fraction(-2))   # full coordinates (0, -1, -2)
b = (Fraction(1), Fraction(2))     # full coordinates (0,  1,  2)
print(f"a (smallest-group base, full): {nice(a)}")
print(f"b (largest-group base, full):  {nice(b)}")
print()

fs = frozenset
candidates = [
    ((fs({1}), fs({0, 1})), (0, 2), (0, 1)),
    ((fs({2}), fs({0, 2})), (0, 1), (0, 2)),
    ((fs({0}), fs({0, 1})), (0, 2), (0, 1)),
    ((fs({0}),), (0, 1), (0, 2)),
]
print("trying a few candidate triples (flag, smallest group I, largest group J):")
for flag, smallest, largest in candidates:
    hit = intersect_triple(flag, smallest, largest, a, b)
    name = f"flag {[sorted(s) for s in flag]}, I={smallest}, J={largest}"
    if hit is None:
        print(f"  {name}: no interior meeting point")
    else:
        print(f"  {name}:")
        print(f"    point {nice(hit.point)} with lattice index {hit.index}")
print()

points, (da, db) = stable_intersection_points(m, k, seed=0)
print(f"full enumeration with drawn displacements (seed 0): {len(points)} points")
for p in points:
    print(
        f"  flag {[sorted(s) for s in p.flag]}"
        f"  I={sorted(p.smallest)} J={sorted(p.largest)} index={p.index}"
    )
total = sum(p.index for p in points)
print(f"sum of indices = {total}")
assert total == m.mu(k)
