"""Exact arithmetic in Q(sqrt(d)): no floats, no rounding, no surprises.

Every scalar in the toolkit is a pair of rationals p/q + (r/s)*sqrt(d)
with a square-free radicand.  Arithmetic, comparison, and floor are all
exact, so a quantity is zero exactly when the construction says it is.
"""

from fractions import Fraction

from atfkit import QField, floor, parse_scalar, qf

one_plus = QField(1, 1, 2)  # 1 + sqrt(2)
one_minus = one_plus.conjugate()

print("a  =", one_plus)
print("a' =", one_minus)
print("a * a' =", one_plus * one_minus, "(the field norm, a plain rational)")
print("1 / a  =", 1 / one_plus)
print()

# Floats cannot tell a close convergent from sqrt(2); exact order can.
convergent = qf(Fraction(131836323, 93222358))
root2 = QField.sqrt(2)
print(f"131836323/93222358 > sqrt(2)?  {convergent > root2}")
print(f"float says: {float(convergent) > float(root2)} (both round to the same double)")
print()

# Exact floors power the orbit bookkeeping: no drift after millions of steps.
for x in (qf("7/2"), root2, 100 * root2, 3 + 2 * root2):
    print(f"floor({x}) = {floor(x)}")
print()

# The text format round-trips, including the irrational part.
text = "1/2+3/8*sqrt(5)"
value = parse_scalar(text)
print(f"parse_scalar({text!r}) = {value!r}")
print("str(value) =", value)
