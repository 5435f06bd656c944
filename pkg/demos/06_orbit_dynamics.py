"""Level-by-level circle dynamics: periodic versus irrational rotation.

On the level with F = h the composite map is rotation by the exact
rotation number rho(h) = (c - h) / P(h).  Rational rho means a periodic
orbit; an irrational rho is certified symbolically (the normal form has
a nonzero sqrt coefficient) and the orbit never returns.
"""

from fractions import Fraction

from atfkit import (
    ConstructionParams,
    QField,
    classify_level,
    equidistribution_stats,
    gap_values,
    orbit_positions,
    qf,
    rotation_number,
)

params = ConstructionParams(4, 2, qf("1/2"), qf("1/8"))

print("rotation numbers at a few levels:")
for h in (qf(0), qf("1/8"), qf("1/4"), QField(0, Fraction(1, 8), 2)):
    print(f"    rho({h}) = {rotation_number(params, h)}")
print()

report = classify_level(params, qf("1/4"))
print(f"h = 1/4: {report.kind}, period {report.period}")
positions = orbit_positions(params, qf("1/4"), 40)
print(f"    first positions: {', '.join(str(s) for s in positions[:5])}, ...")
print(f"    position 39 returns to the start: {positions[39] == positions[0]}")
print()

h = QField(0, Fraction(1, 8), 2)  # sqrt(2)/8
report = classify_level(params, h, n_checked=2000)
print(f"h = sqrt(2)/8: {report.kind}, rho = {report.rho}")
print(f"    {report.distinct_checked} iterates checked, all distinct")
print()

print("the three-distance property (at most three gap values, largest = sum):")
for n in (10, 100, 1000):
    gaps = gap_values(params, h, n)
    print(f"    n = {n:5d}: {len(gaps)} gaps: {', '.join(str(g) for g in gaps)}")
print()

counts = equidistribution_stats(params, h, 2000, 10)
print("equidistribution of 2000 irrational-orbit points over 10 bins:")
print(f"    {counts}")
