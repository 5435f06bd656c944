"""Shared generators for the test suite.

Everything is seeded and exact: random inputs are built from Fractions so
oracles can be evaluated independently of the library's scalar type.
"""

import random
from fractions import Fraction

import pytest

from atfkit import ConstructionParams, Point, qf
from atfkit.polygon import Polygon, build_blowup_polygon


def random_triple(rng: random.Random) -> tuple[Fraction, Fraction, Fraction]:
    """A valid (a, b, c) with a >= b > 0 and 0 < c < b/2, all Fractions."""
    b = Fraction(rng.randint(2, 12), rng.randint(1, 3))
    a = b + Fraction(rng.randint(0, 9), rng.randint(1, 3))
    c = b * Fraction(rng.randint(1, 9), 20)
    return a, b, c


def random_construction(rng: random.Random) -> ConstructionParams:
    a, b, c = random_triple(rng)
    eps = min(c, b / 2 - c) * Fraction(rng.randint(1, 9), 10)
    return ConstructionParams(a, b, c, eps)


def rational_point_inside(rng: random.Random, a, b, c) -> tuple[Fraction, Fraction]:
    """Rejection-sample a rational point strictly inside the chopped rectangle."""
    den = 64
    while True:
        x1 = Fraction(rng.randint(int(-a * den) + 1, int(a * den) - 1), 2 * den)
        x2 = Fraction(rng.randint(int(-b * den) + 1, int(b * den) - 1), 2 * den)
        if abs(x1) < a / 2 and abs(x2) < b / 2 and x2 - x1 + (a + b) / 2 - c > 0:
            return x1, x2


def interior_point(rng: random.Random, poly: Polygon) -> Point:
    """A random strictly interior point: positive combination of the vertices."""
    weights = [rng.randint(1, 9) for _ in poly.vertices]
    total = sum(weights)
    x1 = sum((v.x1 * w for v, w in zip(poly.vertices, weights)), qf(0)) / total
    x2 = sum((v.x2 * w for v, w in zip(poly.vertices, weights)), qf(0)) / total
    return Point(x1, x2)


def boundary_point(rng: random.Random, poly: Polygon) -> Point:
    """A random point on the boundary, uniform over edge picks."""
    i = rng.randrange(len(poly.edges))
    edge = poly.edges[i]
    lam = edge.length * Fraction(rng.randint(0, 15), 16)
    v = poly.vertices[i]
    return Point(v.x1 + lam * edge.direction.u, v.x2 + lam * edge.direction.v)


def edge_samples(poly: Polygon, per_edge: int) -> list[Point]:
    """Every vertex plus ``per_edge`` interior points of every edge."""
    points = list(poly.vertices)
    for i, edge in enumerate(poly.edges):
        v = poly.vertices[i]
        for k in range(1, per_edge + 1):
            lam = edge.length * Fraction(k, per_edge + 1)
            points.append(
                Point(v.x1 + lam * edge.direction.u, v.x2 + lam * edge.direction.v)
            )
    return points


@pytest.fixture
def default_params() -> ConstructionParams:
    return ConstructionParams(4, 2, qf("1/2"), qf("1/8"))


@pytest.fixture
def default_polygon(default_params) -> Polygon:
    return build_blowup_polygon(default_params)
