"""Applicability screening for Delzant polygons.

A polygon passes the screen when some edge has self-intersection -1 and
lattice length strictly below the maximum distance to the boundary: such
an edge certifies a small exceptional sphere, the geometric input the
displacement construction needs.  Polygons that fail the screen are
matched against the known exceptional families and labelled accordingly.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .polygon import Polygon, solve_equidistant_triple
from .scalars import QField


@dataclass(frozen=True)
class ApplicabilityReport:
    """Outcome of the screen.

    ``witness_edge``/``witness_length`` identify the smallest qualifying
    edge when applicable.  ``exception_tag`` explains a negative outcome:
    ``monotone``, ``product_unequal``, ``half-size-blowup-1``,
    ``half-size-blowup-2``, or ``none`` when the polygon simply fails the
    screen without matching a known family.
    """

    applicable: bool
    witness_edge: int | None
    witness_length: QField | None
    max_F: QField
    exception_tag: str | None

    def to_json_obj(self) -> dict:
        return {
            "applicable": self.applicable,
            "witness_edge": self.witness_edge,
            "witness_length": (
                None if self.witness_length is None else str(self.witness_length)
            ),
            "max_F": str(self.max_F),
            "exception_tag": self.exception_tag,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def monotone_test(poly: Polygon) -> bool:
    """True when some interior point is equidistant from every edge line.

    Solved exactly: the first independent edge triple pins the candidate
    center via ``<n_i, x> + k_i = t``; the polygon is monotone when every
    remaining edge agrees and t > 0.
    """
    if not poly.is_delzant():
        raise ValueError("monotone test expects a Delzant polygon")
    edges = poly.edges
    for i, j, k in itertools.combinations(range(len(edges)), 3):
        solved = solve_equidistant_triple(edges[i], edges[j], edges[k])
        if solved is None:
            continue
        point, t = solved
        if t.sign() <= 0:
            return False
        return all((v - t).sign() == 0 for v in poly.support_values(point))
    return False


def check_applicable(poly: Polygon) -> ApplicabilityReport:
    """Screen a Delzant polygon and label the failure family if any."""
    if not poly.is_delzant():
        raise ValueError("applicability screen expects a Delzant polygon")
    max_f = poly.max_distance()[0]
    self_ints = [poly.self_intersection(i) for i in range(len(poly.edges))]
    witness: tuple[QField, int] | None = None
    for i, s in enumerate(self_ints):
        if s == -1 and poly.edges[i].length < max_f:
            key = (poly.edges[i].length, i)
            if witness is None or key[0] < witness[0]:
                witness = key
    if witness is not None:
        return ApplicabilityReport(
            applicable=True,
            witness_edge=witness[1],
            witness_length=witness[0],
            max_F=max_f,
            exception_tag=None,
        )
    if monotone_test(poly):
        tag = "monotone"
    elif len(self_ints) == 4 and all(s == 0 for s in self_ints):
        tag = "product_unequal"
    elif len(self_ints) == 5 and -1 in self_ints:
        tag = "half-size-blowup-1"
    elif len(self_ints) == 6 and -1 in self_ints:
        tag = "half-size-blowup-2"
    else:
        tag = "none"
    return ApplicabilityReport(
        applicable=False,
        witness_edge=None,
        witness_length=None,
        max_F=max_f,
        exception_tag=tag,
    )


__all__ = ["ApplicabilityReport", "monotone_test", "check_applicable"]
