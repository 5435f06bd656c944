"""The four-round strip shear map and its exact arc advance.

Each round shears one boundary strip of the pentagon.  Their composite
rotates every level pentagon with F = h < c along itself by exactly
c - h (in lattice arc length), and fixes everything with F >= c.  The
map phi tapers the rotation off smoothly between c - eps and c + eps.
"""

from atfkit import (
    ConstructionParams,
    apply_phi,
    apply_phi_iter,
    apply_rounds,
    build_pi0,
    build_recurrence_map,
    qf,
)

params = ConstructionParams(4, 2, qf("1/2"), qf("1/8"))
rm = build_recurrence_map(build_pi0(params))
poly = rm.polygon

print("the four rounds (inward normal, strip offset):")
for i, shear in enumerate(rm.rounds, start=1):
    print(f"    round {i}: normal {shear.normal}, strip at offset {shear.offset}")
print()

h = qf("1/4")
level = poly.level_set(h)
p = level.vertices[0]
q = apply_rounds(rm, p)
s0, s1 = level.point_to_arc(p), level.point_to_arc(q)
print(f"on level h = {h} (perimeter {level.perimeter()}):")
print(f"    {p} sits at arc {s0}")
print(f"    four rounds move it to {q}, arc {s1}")
print(f"    advance = {s1 - s0} = c - h = {params.c - h}")
print()

high = poly.level_set(qf("3/4")).vertices[0]
print(f"a point with F = 3/4 > c + eps stays put: phi({high}) = {apply_phi(rm, high)}")
print()

print("iterating phi on level 1/4 (advance 1/4 around a perimeter of 39/4):")
orbit = [p]
for n in range(1, 4):
    orbit.append(apply_phi_iter(rm, p, n))
for n, point in enumerate(orbit):
    print(f"    phi^{n}: {point}")
print("    ... after exactly 39 steps the orbit closes:", apply_phi_iter(rm, p, 39) == p)
