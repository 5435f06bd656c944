"""The four-round strip-shear recurrence map of the chopped rectangle.

Each round is a :class:`StripShear`: an integral affine map supported on a
half-plane strip hugging one side of the polygon, equal to the identity on
the strip's boundary line.  Applied in order (bottom, left, top, right),
the four rounds compose to an exact counterclockwise rotation in boundary
arc length on every level polygon {F = h} with h <= c: the level-h polygon
advances by arc c - h, while every level with h >= c is left pointwise
fixed.  ``build_recurrence_map`` certifies this rotation property on a
sample grid before handing the map out.

``apply_phi`` is the smoothed version used for orbit analysis: full
advance c - h up to level c - eps, a linear taper across the band
(c - eps, c + eps), and the identity above.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .diagram import BaseDiagram
from .plane import LatticeVector, Point, UnimodularAffineMap, dot
from .polygon import ConstructionParams, Polygon, build_blowup_polygon
from .scalars import QField, qf

ScalarLike = QField | int | str


class VerificationError(ValueError):
    """Raised when a constructed map fails its self-check."""


@dataclass(frozen=True)
class StripShear:
    """An affine shear supported on the closed half-plane <n, x> >= offset.

    Inside the region the map is ``x -> x + (<n, x> - offset) * n_perp``
    with ``n_perp`` the counterclockwise quarter turn of ``n``; outside it
    is the identity.  The two halves agree on the boundary line, and the
    linear part is unipotent (det 1, trace 2) fixing the line direction.
    """

    normal: LatticeVector
    offset: QField

    def __post_init__(self):
        if not self.normal.is_primitive():
            raise ValueError("strip normal must be primitive")
        object.__setattr__(self, "offset", qf(self.offset))

    @property
    def shear_map(self) -> UnimodularAffineMap:
        n, w = self.normal, self.normal.perp()
        return UnimodularAffineMap(
            1 + w.u * n.u,
            w.u * n.v,
            w.v * n.u,
            1 + w.v * n.v,
            -self.offset * w.u,
            -self.offset * w.v,
        )

    def excess(self, p: Point) -> QField:
        return dot(self.normal, p) - self.offset

    def apply(self, p: Point) -> Point:
        if self.excess(p).sign() >= 0:
            return self.shear_map.apply(p)
        return p


@dataclass(frozen=True)
class RecurrenceMap:
    """Four strip-shear rounds on a chopped-rectangle polygon."""

    params: ConstructionParams
    polygon: Polygon
    rounds: tuple[StripShear, StripShear, StripShear, StripShear]
    source_diagram: BaseDiagram
    target_diagram: BaseDiagram


def rotate_on_level(poly: Polygon, h: ScalarLike, t: ScalarLike, p: Point) -> Point:
    """Advance p by arc length t counterclockwise along its level polygon.

    Requires p to lie exactly on the level set {F = h}.
    """
    h = qf(h)
    if poly.distance_to_boundary(p) != h:
        raise ValueError(f"point ({p.x1}, {p.x2}) is not on level {h}")
    level = poly.level_set(h)
    s = level.point_to_arc(p)
    return level.arc_to_point(s + qf(t))


def rotation_amount(params: ConstructionParams, h: ScalarLike) -> QField:
    """The smoothed advance r(h): c - h below the taper band, 0 above it.

    Across the band (c - eps, c + eps) the full advance is scaled by the
    linear ramp ((c + eps) - h) / (2 eps) clamped to [0, 1].
    """
    h = qf(h)
    if h.sign() < 0:
        raise ValueError("level must be nonnegative")
    c, eps = params.c, params.eps
    u = (c + eps - h) / (2 * eps)
    if u.sign() <= 0:
        return qf(0)
    if (u - 1).sign() >= 0:
        u = qf(1)
    return (c - h) * u


def build_recurrence_map(
    source: BaseDiagram,
    params: ConstructionParams | None = None,
    verify: bool = True,
) -> RecurrenceMap:
    """Assemble the four rounds for a diagram built by ``build_pi0``.

    With ``verify`` on (the default), the composite is checked against the
    pure arc rotation on a grid of levels, and checked to fix a grid of
    points above level c; any mismatch raises VerificationError with the
    offending point.
    """
    if params is None:
        params = source.params
    if params is None:
        raise ValueError("recurrence map needs construction parameters")
    poly = source.polygon
    if poly != build_blowup_polygon(params):
        raise ValueError("source diagram polygon does not match the parameters")
    a, b, c = params.a, params.b, params.c
    if not any(
        node.eigen_dir == LatticeVector(0, 1)
        and poly.distance_to_boundary(node.position) == c
        for node in source.nodes
    ):
        raise ValueError("source diagram lacks a node on the distance-c level")
    rounds = (
        StripShear(LatticeVector(0, -1), b / 2 - c),
        StripShear(LatticeVector(-1, 0), a / 2 - c),
        StripShear(LatticeVector(0, 1), b / 2 - c),
        StripShear(LatticeVector(1, 0), a / 2 - c),
    )
    target = replace(
        source, provenance=source.provenance + (("recurrence_loop",),)
    )
    rm = RecurrenceMap(
        params=params,
        polygon=poly,
        rounds=rounds,
        source_diagram=source,
        target_diagram=target,
    )
    if verify:
        _verify_rounds(rm)
    return rm


def apply_rounds(rm: RecurrenceMap, p: Point) -> Point:
    """One pass of all four strip shears, in stored order."""
    for shear in rm.rounds:
        p = shear.apply(p)
    return p


def _verify_rounds(rm: RecurrenceMap) -> None:
    params, poly = rm.params, rm.polygon
    c, eps = params.c, params.eps
    reach = c - eps
    for k in range(4):
        h = reach * k / 4
        level = poly.level_set(h)
        advance = c - h
        for pt in _level_samples(level):
            expected = rotate_on_level(poly, h, advance, pt)
            got = apply_rounds(rm, pt)
            if got != expected:
                raise VerificationError(
                    f"round composite missed the arc rotation at level {h}: "
                    f"({pt.x1}, {pt.x2}) -> ({got.x1}, {got.x2}), "
                    f"expected ({expected.x1}, {expected.x2})"
                )
    top = poly.max_distance()[0]
    for h in (c + eps, (c + eps + top) / 2):
        level = poly.level_set(h)
        for pt in _level_samples(level):
            got = apply_rounds(rm, pt)
            if got != pt:
                raise VerificationError(
                    f"round composite moved a point on level {h}: "
                    f"({pt.x1}, {pt.x2}) -> ({got.x1}, {got.x2})"
                )


def _level_samples(level: Polygon) -> list[Point]:
    samples = list(level.vertices)
    for i, edge in enumerate(level.edges):
        v = level.vertices[i]
        half = edge.length / 2
        samples.append(
            Point(v.x1 + half * edge.direction.u, v.x2 + half * edge.direction.v)
        )
    return samples


def apply_phi(rm: RecurrenceMap, p: Point) -> Point:
    """The smoothed recurrence step at p's own level."""
    h = rm.polygon.distance_to_boundary(p)
    r = rotation_amount(rm.params, h)
    if r.sign() == 0:
        return p
    return rotate_on_level(rm.polygon, h, r, p)


def apply_phi_iter(rm: RecurrenceMap, p: Point, n: int) -> Point:
    """The n-th smoothed iterate, computed in one exact arc step.

    Levels are preserved, so n steps of arc advance r(h) amount to a
    single advance by n * r(h); this matches iterating ``apply_phi``
    exactly while costing one rotation.
    """
    if not isinstance(n, int):
        raise ValueError("iteration count must be an integer")
    h = rm.polygon.distance_to_boundary(p)
    r = rotation_amount(rm.params, h)
    if r.sign() == 0 or n == 0:
        return p
    return rotate_on_level(rm.polygon, h, r * n, p)


__all__ = [
    "StripShear",
    "RecurrenceMap",
    "VerificationError",
    "rotate_on_level",
    "rotation_amount",
    "build_recurrence_map",
    "apply_rounds",
    "apply_phi",
    "apply_phi_iter",
]
