"""Integer homology classes of the one-point blow-up of a product of spheres.

Classes are written in the basis (A, B, E): the two sphere factors and the
exceptional class.  The intersection form is A.B = 1, A.A = B.B = 0,
E.E = -1, with A and B orthogonal to E.  The anticanonical class is
2A + 2B - E, and the symplectic form built from shape parameters
(a, b, c) gives the factors areas a and b and the exceptional sphere
area c.

``find_twist_classes`` enumerates the classes of square -2 on which the
first Chern class vanishes: the classes represented by Lagrangian spheres
whose Dehn twists act on homology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scalars import QField, qf

ScalarLike = QField | int | str


@dataclass(frozen=True)
class H2Class:
    """The class alpha*A + beta*B + gamma*E with integer coefficients."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        for coeff in (self.alpha, self.beta, self.gamma):
            if not isinstance(coeff, int):
                raise ValueError("homology coefficients must be integers")

    def __neg__(self) -> "H2Class":
        return H2Class(-self.alpha, -self.beta, -self.gamma)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.gamma)


def intersection(x: H2Class, y: H2Class) -> int:
    """The intersection pairing in the (A, B, E) basis."""
    return x.alpha * y.beta + x.beta * y.alpha - x.gamma * y.gamma


def c1_eval(x: H2Class) -> int:
    """Pairing of the first Chern class 2A + 2B - E with x."""
    return 2 * x.alpha + 2 * x.beta + x.gamma


def omega_eval(x: H2Class, a: ScalarLike, b: ScalarLike, c: ScalarLike) -> QField:
    """Symplectic area of x for shape parameters (a, b, c)."""
    return qf(a) * x.alpha + qf(b) * x.beta + qf(c) * x.gamma


def find_twist_classes(bound: int) -> list[H2Class]:
    """All classes with square -2 and vanishing c1, coefficients in [-bound, bound].

    Solved in closed form: c1 = 0 forces gamma = -2(alpha + beta), and
    substituting into x.x = -2 leaves 2*alpha^2 + 3*alpha*beta + 2*beta^2 = 1,
    a positive-definite form, so only finitely many (alpha, beta) qualify.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    found: list[H2Class] = []
    for alpha in range(-bound, bound + 1):
        disc = 8 - 7 * alpha * alpha
        if disc < 0:
            continue
        root = math.isqrt(disc)
        if root * root != disc:
            continue
        for signed in ({root, -root} if root else {0}):
            num = -3 * alpha + signed
            if num % 4 != 0:
                continue
            beta = num // 4
            gamma = -2 * (alpha + beta)
            cls = H2Class(alpha, beta, gamma)
            if max(abs(beta), abs(gamma)) > bound:
                continue
            if intersection(cls, cls) == -2 and c1_eval(cls) == 0:
                found.append(cls)
    found.sort(key=H2Class.as_tuple)
    return found


__all__ = ["H2Class", "intersection", "c1_eval", "omega_eval", "find_twist_classes"]
