"""Exact scalars: rationals and elements of a real quadratic field.

Every coordinate, length, and rotation amount in this library is a
:class:`QField` value ``a + b*sqrt(d)`` with rational ``a``, ``b`` and a
square-free integer radicand ``d > 1``.  Values are normalised eagerly:
whenever the sqrt-coefficient is zero the radicand is dropped, so a value
is irrational exactly when ``is_rational`` is false.  No floating point is
used anywhere; signs, comparisons, and floors are decided by integer
arithmetic alone.

The canonical text form is ``p/q`` for rationals and ``p/q+r/s*sqrt(d)``
(or ``p/q-r/s*sqrt(d)``) otherwise, with both fractions in lowest terms
and positive denominators.  ``parse_scalar`` and ``format_scalar`` round
trip bit-exactly on this grammar.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_SCALAR_RE = re.compile(
    r"^(?P<rat>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sgn>[+-])?(?P<coef>\d+(?:/\d+)?)\*sqrt\((?P<rad>\d+)\))?$"
)

_SQUAREFREE: dict[int, bool] = {}


def _is_squarefree(d: int) -> bool:
    cached = _SQUAREFREE.get(d)
    if cached is not None:
        return cached
    ok = True
    n, p = d, 2
    while p * p <= n:
        if n % (p * p) == 0:
            ok = False
            break
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    _SQUAREFREE[d] = ok
    return ok


class QField:
    """An exact scalar ``a + b*sqrt(d)``.

    ``a`` and ``b`` are :class:`fractions.Fraction`; ``d`` is ``None`` for
    rational values and a square-free integer ``> 1`` otherwise.  Values
    with different radicands cannot be mixed in one expression.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: Rational = 0, b: Rational = 0, d: int | None = None):
        a = Fraction(a)
        b = Fraction(b)
        if b == 0:
            d = None
        else:
            if d is None:
                raise ValueError("irrational part requires a radicand d")
            if not isinstance(d, int) or d <= 1:
                raise ValueError(f"radicand must be an integer > 1, got {d!r}")
            if not _is_squarefree(d):
                raise ValueError(f"radicand must be square-free, got {d}")
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("QField values are immutable")

    @classmethod
    def sqrt(cls, d: int) -> "QField":
        """The element ``sqrt(d)`` itself."""
        return cls(0, 1, d)

    # -- normal-form accessors ------------------------------------------

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int | None:
        return self._d

    @property
    def p(self) -> int:
        return self._a.numerator

    @property
    def q(self) -> int:
        return self._a.denominator

    @property
    def r(self) -> int:
        return self._b.numerator

    @property
    def s(self) -> int:
        return self._b.denominator

    def is_rational(self) -> bool:
        """True when the value lies in Q (certified: normal form has b = 0)."""
        return self._b == 0

    def as_fraction(self) -> Fraction:
        if self._b != 0:
            raise ValueError(f"{self} is irrational")
        return self._a

    def conjugate(self) -> "QField":
        return QField(self._a, -self._b, self._d)

    # -- arithmetic ------------------------------------------------------

    def _merge_radicand(self, other: "QField") -> int | None:
        if self._d is None:
            return other._d
        if other._d is None or other._d == self._d:
            return self._d
        raise ValueError(f"mixed radicands sqrt({self._d}) and sqrt({other._d})")

    @staticmethod
    def _coerce(value: object) -> "QField | None":
        if isinstance(value, QField):
            return value
        if isinstance(value, (int, Fraction)):
            return QField(value)
        return None

    def __add__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merge_radicand(o)
        return QField(self._a + o._a, self._b + o._b, d)

    __radd__ = __add__

    def __sub__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merge_radicand(o)
        return QField(self._a - o._a, self._b - o._b, d)

    def __rsub__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merge_radicand(o)
        if self._b == 0 and o._b == 0:
            return QField(self._a * o._a)
        a = self._a * o._a + self._b * o._b * d
        b = self._a * o._b + self._b * o._a
        return QField(a, b, d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self._merge_radicand(o)
        if o._a == 0 and o._b == 0:
            raise ZeroDivisionError("division by zero scalar")
        if o._b == 0:
            return QField(self._a / o._a, self._b / o._a, d)
        # multiply by the conjugate; the norm a^2 - b^2 d is nonzero because
        # d is square-free, hence never a square of a rational.
        norm = o._a * o._a - o._b * o._b * d
        a = (self._a * o._a - self._b * o._b * d) / norm
        b = (self._b * o._a - self._a * o._b) / norm
        return QField(a, b, d)

    def __rtruediv__(self, other: object) -> "QField":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self) -> "QField":
        return QField(-self._a, -self._b, self._d)

    def __pos__(self) -> "QField":
        return self

    def __abs__(self) -> "QField":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    # -- order -----------------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, decided by integer comparisons."""
        if self._b == 0:
            a = self._a
            return (a > 0) - (a < 0)
        if self._a == 0:
            return 1 if self._b > 0 else -1
        sa = 1 if self._a > 0 else -1
        sb = 1 if self._b > 0 else -1
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 d via cross-multiplied integers
        lhs = self._a.numerator ** 2 * self._b.denominator ** 2
        rhs = self._b.numerator ** 2 * self._a.denominator ** 2 * self._d
        if lhs == rhs:  # impossible for square-free d
            raise ArithmeticError("square-free radicand produced a square")
        return sa if lhs > rhs else sb

    def _cmp(self, other: object) -> int | None:
        o = self._coerce(other)
        if o is None:
            return None
        return (self - o).sign()

    def __lt__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    # -- conversions -----------------------------------------------------

    def __float__(self) -> float:
        if self._b == 0:
            return float(self._a)
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def __str__(self) -> str:
        return format_scalar(self)

    def __repr__(self) -> str:
        return f"QField({format_scalar(self)!r})"


def qf(value: "QField | Rational | str") -> QField:
    """Coerce an int, Fraction, canonical string, or QField to QField."""
    if isinstance(value, QField):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return QField(value)


def sign(x: "QField | Rational") -> int:
    return qf(x).sign()


def is_rational(x: "QField | Rational") -> bool:
    return qf(x).is_rational()


def floor(x: "QField | Rational") -> int:
    """Exact floor, via integer square-root bracketing of the sqrt term."""
    v = qf(x)
    if v.b == 0:
        return v.a.numerator // v.a.denominator
    # v = (A + B*sqrt(d)) / D with integers A, B and D > 0
    A = v.a.numerator * v.b.denominator
    B = v.b.numerator * v.a.denominator
    D = v.a.denominator * v.b.denominator
    t = math.isqrt(B * B * v.d)  # |B|*sqrt(d) lies in [t, t+1)
    m = (A + t) // D if B > 0 else (A - t - 1) // D
    # the bracket is one unit wide, so at most a couple of adjustments remain
    while (v - m).sign() < 0:
        m -= 1
    while (v - (m + 1)).sign() >= 0:
        m += 1
    return m


def parse_scalar(text: str) -> QField:
    """Parse the canonical scalar grammar (``p/q``, ``p/q+r/s*sqrt(d)``).

    Integer shorthand without an explicit denominator is also accepted.
    """
    s = text.strip()
    match = _SCALAR_RE.match(s)
    if match is None or not s:
        raise ValueError(f"malformed scalar {text!r}")
    rat, sgn, coef, rad = match.group("rat", "sgn", "coef", "rad")
    if rat is None and coef is None:
        raise ValueError(f"malformed scalar {text!r}")
    a = Fraction(rat) if rat is not None else Fraction(0)
    if coef is None:
        return QField(a)
    b = Fraction(coef)
    if sgn == "-":
        b = -b
    return QField(a, b, int(rad))


def format_scalar(x: "QField | Rational") -> str:
    """Canonical text form; inverse of parse_scalar on its output."""
    v = qf(x)
    out = f"{v.p}/{v.q}"
    if v.r != 0:
        out += f"{'+' if v.r > 0 else '-'}{abs(v.r)}/{v.s}*sqrt({v.d})"
    return out


ZERO = QField(0)
ONE = QField(1)
