"""Homology bookkeeping: the twist classes and their symplectic areas.

Classes are integer triples in the basis (A, B, E) with A.B = 1 and
E.E = -1.  A Dehn twist needs a sphere class with square -2 and zero
pairing against the first Chern class; the enumeration proves there are
exactly two such classes, negatives of each other, and their areas
vanish precisely when the two rectangle sides agree.
"""

from atfkit import H2Class, c1_eval, find_twist_classes, intersection, omega_eval, qf

A = H2Class(1, 0, 0)
B = H2Class(0, 1, 0)
E = H2Class(0, 0, 1)

print("pairing table:")
for left in (A, B, E):
    row = "  ".join(f"{intersection(left, right):3d}" for right in (A, B, E))
    print(f"    {left.as_tuple()}: {row}")
print()

print("first Chern pairings: ", [c1_eval(x) for x in (A, B, E)])
print()

classes = find_twist_classes(50)
print(f"classes with square -2 and zero Chern pairing, coefficients up to 50:")
for x in classes:
    print(
        f"    {x.as_tuple()}: square {intersection(x, x)},"
        f" c1 pairing {c1_eval(x)}"
    )
print()

print("symplectic areas omega(class) for rectangle sides (a, b):")
anti = classes[1]
for a, b in ((4, 2), (6, 2), (3, 3)):
    area = omega_eval(anti, a, b, qf("1/2"))
    note = "  <- vanishes exactly when a = b" if area == 0 else ""
    print(f"    a = {a}, b = {b}: omega{anti.as_tuple()} = {area}{note}")
