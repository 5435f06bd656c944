"""Points, lattice vectors, and unimodular affine maps of the plane.

The plane here is R^2 equipped with the integer lattice Z^2.  Geometry is
measured lattice-style: segment lengths count primitive integer steps, and
the symmetry group is the group of affine maps whose linear part lies in
GL(2, Z).  Exact predicates (orientation, on-segment, segment crossing)
live here too so that every other module can share them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import QField, Rational, qf

ScalarLike = QField | Rational | str


@dataclass(frozen=True)
class Point:
    """A point of the plane with exact QField coordinates."""

    x1: QField
    x2: QField

    def __post_init__(self):
        object.__setattr__(self, "x1", qf(self.x1))
        object.__setattr__(self, "x2", qf(self.x2))

    def __iter__(self):
        return iter((self.x1, self.x2))

    def __str__(self):
        return f"({self.x1}, {self.x2})"


@dataclass(frozen=True)
class LatticeVector:
    """An integer vector of Z^2."""

    u: int
    v: int

    def __post_init__(self):
        if not (isinstance(self.u, int) and isinstance(self.v, int)):
            raise ValueError("lattice vector entries must be integers")

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.u, -self.v)

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.u + other.u, self.v + other.v)

    def __str__(self):
        return f"({self.u}, {self.v})"

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def is_primitive(self) -> bool:
        return math.gcd(self.u, self.v) == 1

    def perp(self) -> "LatticeVector":
        """Counterclockwise quarter turn (the left-hand normal)."""
        return LatticeVector(-self.v, self.u)


def pt(x1: ScalarLike, x2: ScalarLike) -> Point:
    return Point(qf(x1), qf(x2))


def as_point(value: Point | tuple) -> Point:
    if isinstance(value, Point):
        return value
    x1, x2 = value
    return pt(x1, x2)


def primitive(vec: LatticeVector | tuple[int, int]) -> LatticeVector:
    """The primitive vector on the same ray; errors on the zero vector."""
    if isinstance(vec, tuple):
        vec = LatticeVector(*vec)
    if vec.is_zero():
        raise ValueError("zero vector has no primitive form")
    g = math.gcd(vec.u, vec.v)
    return LatticeVector(vec.u // g, vec.v // g)


def cross(u: LatticeVector, w: LatticeVector) -> int:
    return u.u * w.v - u.v * w.u


def dot(n: LatticeVector, p: Point) -> QField:
    return p.x1 * n.u + p.x2 * n.v


def move(p: Point, direction: LatticeVector, amount: ScalarLike) -> Point:
    """The point ``p + amount * direction``."""
    t = qf(amount)
    return Point(p.x1 + t * direction.u, p.x2 + t * direction.v)


def delta(a: Point, b: Point) -> tuple[QField, QField]:
    return (b.x1 - a.x1, b.x2 - a.x2)


def direction_of(a: Point, b: Point) -> tuple[LatticeVector, QField]:
    """Primitive lattice direction and affine length of the segment a -> b.

    Requires ``b - a`` to be a scalar multiple of an integer vector; a
    segment with an irrational direction slope is rejected.
    """
    dx, dy = delta(a, b)
    if dx.sign() == 0 and dy.sign() == 0:
        raise ValueError("degenerate segment has no direction")
    if dx.sign() == 0:
        w = LatticeVector(0, dy.sign())
        return w, abs(dy)
    if dy.sign() == 0:
        w = LatticeVector(dx.sign(), 0)
        return w, abs(dx)
    ratio = dy / dx
    if not ratio.is_rational():
        raise ValueError("segment direction is not rational")
    r = ratio.as_fraction()
    w = primitive(LatticeVector(r.denominator, r.numerator))
    if w.u * dx.sign() < 0 or (w.u == 0 and w.v * dy.sign() < 0):
        w = -w
    length = dx / w.u if w.u != 0 else dy / w.v
    return w, length


def affine_length(a: Point, b: Point) -> QField:
    """Lattice length: ``b - a`` as a multiple of a primitive vector.

    Returns 0 for a degenerate segment.
    """
    dx, dy = delta(a, b)
    if dx.sign() == 0 and dy.sign() == 0:
        return qf(0)
    return direction_of(a, b)[1]


def orient(o: Point, a: Point, b: Point) -> int:
    """Sign of the turn o -> a -> b: +1 left, -1 right, 0 collinear."""
    ax, ay = delta(o, a)
    bx, by = delta(o, b)
    return (ax * by - ay * bx).sign()


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment [a, b]."""
    if orient(a, b, p) != 0:
        return False
    lo1, hi1 = sorted((a.x1, b.x1))
    lo2, hi2 = sorted((a.x2, b.x2))
    return lo1 <= p.x1 <= hi1 and lo2 <= p.x2 <= hi2


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True when the closed segments [a,b] and [c,d] share any point."""
    o1 = orient(a, b, c)
    o2 = orient(a, b, d)
    o3 = orient(c, d, a)
    o4 = orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return False


@dataclass(frozen=True)
class UnimodularAffineMap:
    """An affine map x -> M x + t with M integer and det M = +-1.

    Composition follows application order: ``f.compose(g)`` applied to x
    equals ``f(g(x))``.
    """

    m11: int
    m12: int
    m21: int
    m22: int
    t1: QField
    t2: QField

    def __post_init__(self):
        for entry in (self.m11, self.m12, self.m21, self.m22):
            if not isinstance(entry, int):
                raise ValueError("linear part must have integer entries")
        if self.det not in (1, -1):
            raise ValueError(f"determinant must be +-1, got {self.det}")
        object.__setattr__(self, "t1", qf(self.t1))
        object.__setattr__(self, "t2", qf(self.t2))

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> int:
        return self.m11 + self.m22

    @classmethod
    def identity(cls) -> "UnimodularAffineMap":
        return cls(1, 0, 0, 1, qf(0), qf(0))

    @classmethod
    def translation(cls, t1: ScalarLike, t2: ScalarLike) -> "UnimodularAffineMap":
        return cls(1, 0, 0, 1, qf(t1), qf(t2))

    @classmethod
    def linear(cls, m11: int, m12: int, m21: int, m22: int) -> "UnimodularAffineMap":
        return cls(m11, m12, m21, m22, qf(0), qf(0))

    def apply(self, p: Point) -> Point:
        return Point(
            p.x1 * self.m11 + p.x2 * self.m12 + self.t1,
            p.x1 * self.m21 + p.x2 * self.m22 + self.t2,
        )

    def apply_vector(self, w: LatticeVector) -> LatticeVector:
        return LatticeVector(
            self.m11 * w.u + self.m12 * w.v,
            self.m21 * w.u + self.m22 * w.v,
        )

    def compose(self, other: "UnimodularAffineMap") -> "UnimodularAffineMap":
        """The map ``x -> self(other(x))``."""
        o = other
        return UnimodularAffineMap(
            self.m11 * o.m11 + self.m12 * o.m21,
            self.m11 * o.m12 + self.m12 * o.m22,
            self.m21 * o.m11 + self.m22 * o.m21,
            self.m21 * o.m12 + self.m22 * o.m22,
            self.m11 * o.t1 + self.m12 * o.t2 + self.t1,
            self.m21 * o.t1 + self.m22 * o.t2 + self.t2,
        )

    def inverse(self) -> "UnimodularAffineMap":
        d = self.det
        n11, n12, n21, n22 = d * self.m22, -d * self.m12, -d * self.m21, d * self.m11
        return UnimodularAffineMap(
            n11,
            n12,
            n21,
            n22,
            -(self.t1 * n11 + self.t2 * n12),
            -(self.t1 * n21 + self.t2 * n22),
        )


def unipotent_fixing(
    direction: LatticeVector, k: int = 1, base: Point | None = None
) -> UnimodularAffineMap:
    """The shear ``x -> x + k * <l, x - base> * direction`` fixing a line.

    ``direction`` must be primitive; ``l`` is its left-hand normal, so the
    fixed line is ``base + span(direction)`` (through the origin when no
    base point is given).  The linear part is unipotent: det 1, trace 2.
    """
    if not direction.is_primitive():
        raise ValueError(f"direction {direction} is not primitive")
    u, v = direction.u, direction.v
    linear = UnimodularAffineMap.linear(1 - k * u * v, k * u * u, -k * v * v, 1 + k * u * v)
    if base is None:
        return linear
    mb = linear.apply(base)
    shift = UnimodularAffineMap.translation(base.x1 - mb.x1, base.x2 - mb.x2)
    return shift.compose(linear)


def lex_less(a: Point, b: Point) -> bool:
    """Lexicographic order on (x1, x2); used for canonical base points."""
    if a.x1 != b.x1:
        return a.x1 < b.x1
    return a.x2 < b.x2


__all__ = [
    "Point",
    "LatticeVector",
    "UnimodularAffineMap",
    "pt",
    "as_point",
    "primitive",
    "cross",
    "dot",
    "move",
    "delta",
    "direction_of",
    "affine_length",
    "orient",
    "on_segment",
    "segments_intersect",
    "unipotent_fixing",
    "lex_less",
]
