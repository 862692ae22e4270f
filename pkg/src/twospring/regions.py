"""Weight-space classification: which wiring is cheaper where.

The quadrant of weight pairs ``(a, b)`` splits along the lines ``a + 2b = 1``
and ``a + b = 1`` into three bands A, B, C.  Band B splits further along the
locus where the minimal parallel cost equals the fixed serial cost of 2; the
serial wiring is strictly cheaper exactly on the sub-band B2, the parallel
wiring everywhere else (up to ties on the dividing locus itself).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .model import Topology, Weights
from .solver import solve_reduced

__all__ = [
    "RegionLabel",
    "Winner",
    "RegionReport",
    "classify",
    "winner",
    "b2_boundary",
    "B2_SEGMENT_A_MIN",
    "B2_SEGMENT_A_MAX",
]


class RegionLabel(enum.Enum):
    A = "A"
    B1 = "B1"
    B2 = "B2"
    C = "C"


class Winner(enum.Enum):
    """Cheaper topology at a weight pair, with explicit tie and infeasible outcomes."""

    PARALLEL = "parallel"
    SERIAL = "serial"
    TIE = "tie"
    BOTH_INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class RegionReport:
    """Label, winning topology, and both minimal costs at one weight pair."""

    label: RegionLabel
    winner: Winner
    cost_parallel: float
    cost_serial: float


# the parallel-cost-equals-2 locus b = 2 - 4a lies inside band B for these a
B2_SEGMENT_A_MIN = 1.0 / 3.0
B2_SEGMENT_A_MAX = 3.0 / 7.0


def classify(w: Weights) -> RegionLabel:
    """Label a weight pair A, B1, B2, or C.

    B2 membership is decided by the computed minimal parallel cost exceeding
    2.  Extended arithmetic makes the ``a = 0`` strip of band B (parallel
    infeasible, cost ``+inf``) land in B2, matching the ``a -> 0+`` limit.
    """
    if w.a + 2.0 * w.b - 1.0 < 0.0:
        return RegionLabel.A
    if w.a + w.b - 1.0 >= 0.0:
        return RegionLabel.C
    if solve_reduced(w, Topology.PARALLEL).total_cost > 2.0:
        return RegionLabel.B2
    return RegionLabel.B1


def winner(w: Weights) -> RegionReport:
    """Report both minimal costs, the region label, and the strict-argmin winner."""
    cost_p = solve_reduced(w, Topology.PARALLEL).total_cost
    cost_s = solve_reduced(w, Topology.SERIAL).total_cost
    if math.isinf(cost_p) and math.isinf(cost_s):
        best = Winner.BOTH_INFEASIBLE
    elif cost_p < cost_s:
        best = Winner.PARALLEL
    elif cost_s < cost_p:
        best = Winner.SERIAL
    else:
        best = Winner.TIE
    return RegionReport(classify(w), best, cost_p, cost_s)


def b2_boundary(a: float) -> float | None:
    """b-coordinate of the B1/B2 dividing segment at abscissa ``a``.

    The locus where the minimal parallel cost equals 2 simplifies to the line
    ``b = 2 - 4a``; within band B that is the closed segment from
    ``(1/3, 2/3)`` (on ``a + b = 1``) to ``(3/7, 2/7)`` (on ``a + 2b = 1``).
    Returns ``None`` where the locus leaves band B.
    """
    if a < B2_SEGMENT_A_MIN or a > B2_SEGMENT_A_MAX:
        return None
    return 2.0 - 4.0 * a
