"""The corner-chopped rectangle and its lattice distance function.

Start from a centered a-by-b rectangle, chop the bottom-right corner at
lattice depth c, and study F(x) = lattice distance to the boundary.  Its
level sets are inner parallel pentagons, its maximum is b/2, and the
level perimeter obeys an exact linear law.
"""

from atfkit import ConstructionParams, build_blowup_polygon, pt, qf

params = ConstructionParams(4, 2, qf("1/2"), qf("1/8"))
poly = build_blowup_polygon(params)

print("vertices:")
for v in poly.vertices:
    print("   ", v)
print()

print("edges (inward normal, offset, lattice length, self-intersection):")
for i, edge in enumerate(poly.edges):
    n = edge.normal
    s = poly.self_intersection(i)
    print(f"    normal {n}  offset {edge.offset}  length {edge.length}  s = {s}")
print()

value, at = poly.max_distance()
print(f"max F = {value} attained at {at}  (equals b/2 = {params.b / 2})")
print()

print("sample distances:")
for p in (pt(0, 0), pt("3/2", 0), pt("7/4", "-3/4")):
    print(f"    F({p.x1}, {p.x2}) = {poly.distance_to_boundary(p)}")
print()

print("level-set perimeters against the formula 2(a+b) - c - 7h:")
a, b, c = params.a, params.b, params.c
for h in (qf(0), qf("1/8"), qf("1/4"), qf("3/8")):
    level = poly.level_set(h)
    formula = 2 * (a + b) - c - 7 * h
    print(
        f"    h = {h}: {len(level.vertices)} vertices,"
        f" perimeter {level.perimeter()} (formula {formula})"
    )
print()

print("past h = c the chopped edge is gone and the level is a rectangle:")
level = poly.level_set(qf("3/4"))
print(f"    h = 3/4: {len(level.vertices)} vertices, perimeter {level.perimeter()}")
