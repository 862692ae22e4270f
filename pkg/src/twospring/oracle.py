"""Brute-force grid verification of the closed-form designs.

``oracle_solve`` scans the full square ``[0, c_max]^2`` of elastic-limit
pairs, keeps the pairs meeting both the performance and the strength
constraint, and returns the cheapest one under a deterministic tie-break.
Constraint evaluation is shared with the model module, but the scan knows
nothing about the one-variable reduction or the closed form, which is what
makes it usable as an independent check on the solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import SpringPair, Topology, Weights, cost, force_grid, multiperf_grid
from .solver import solve_reduced

__all__ = [
    "GridSpec",
    "OracleResult",
    "VerificationVerdict",
    "oracle_solve",
    "verify_reduction",
]


@dataclass(frozen=True)
class GridSpec:
    """Search square ``[0, c_max]^2`` scanned at pitch ``step``."""

    c_max: float
    step: float

    def __post_init__(self) -> None:
        if not (0.0 < self.step <= self.c_max):
            raise ValueError(
                f"need 0 < step <= c_max, got step={self.step!r}, c_max={self.c_max!r}"
            )

    def axis(self) -> np.ndarray:
        """Grid coordinates 0, step, 2*step, ... up to and including c_max."""
        n = int(math.floor(self.c_max / self.step + 1e-9))
        return np.arange(n + 1) * self.step


@dataclass(frozen=True)
class OracleResult:
    """Cheapest feasible grid point, if any.

    ``truncated`` flags an argmin on the boundary of the search square, where
    the true optimum may lie outside the scanned area.
    """

    feasible: bool
    best_pair: SpringPair | None
    best_cost: float
    argmin_gap: float | None
    truncated: bool


@dataclass(frozen=True)
class VerificationVerdict:
    """Comparison of the grid scan against the closed form for one instance.

    ``status`` is one of ``agree``, ``agree-infeasible``, ``agree-truncated``,
    ``cost-mismatch``, ``split-mismatch``, ``feasibility-mismatch``.
    """

    agree: bool
    status: str
    closed_cost: float
    oracle_cost: float
    cost_gap: float
    allowance: float
    argmin_gap: float | None
    beyond_grid: bool


def oracle_solve(w: Weights, k: Topology, g: GridSpec) -> OracleResult:
    """Exhaustive minimum of ``c1 + c2`` over the grid, under both constraints.

    Cost ties are broken toward the smaller ``|c1 - c2|``, then the smaller
    ``c1``.  The reduction runs on integer grid indices, so ties and
    tie-breaks are exact and independent of how the scan might be
    partitioned.
    """
    axis = g.axis()
    c1 = axis[:, None]
    c2 = axis[None, :]
    feasible = (multiperf_grid(w, k, c1, c2) >= 1.0) & (force_grid(k, c1, c2) >= 1.0)
    ii, jj = np.nonzero(feasible)
    if ii.size == 0:
        return OracleResult(False, None, math.inf, None, False)
    sums = ii + jj
    cheapest = sums.min()
    ii = ii[sums == cheapest]
    jj = jj[sums == cheapest]
    gaps = np.abs(ii - jj)
    i = int(ii[gaps == gaps.min()].min())
    j = int(cheapest) - i
    pair = SpringPair(float(axis[i]), float(axis[j]))
    last = axis.size - 1
    return OracleResult(
        feasible=True,
        best_pair=pair,
        best_cost=cost(pair),
        argmin_gap=abs(pair.c1 - pair.c2),
        truncated=(i == last or j == last),
    )


def verify_reduction(w: Weights, k: Topology, g: GridSpec, tol: float) -> VerificationVerdict:
    """Check that grid search and closed form agree for one weight pair.

    Agreement means matching infeasibility, or both feasible with costs
    within ``tol + 2*step`` (the scan overshoots by at most one step per
    coordinate).  Serial agreement additionally requires the scanned argmin
    to sit within one step of the diagonal.  When the closed-form optimum
    cannot be represented inside the search square at all, an empty scan is
    agreement too, reported as ``agree-truncated``.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    closed = solve_reduced(w, k)
    scanned = oracle_solve(w, k, g)
    allowance = tol + 2.0 * g.step
    if closed.feasible and scanned.feasible:
        gap = scanned.best_cost - closed.total_cost
        if abs(gap) > allowance:
            status = "cost-mismatch"
        elif k is Topology.SERIAL and scanned.argmin_gap > g.step + 1e-12:
            status = "split-mismatch"
        else:
            status = "agree"
        return VerificationVerdict(
            agree=(status == "agree"),
            status=status,
            closed_cost=closed.total_cost,
            oracle_cost=scanned.best_cost,
            cost_gap=gap,
            allowance=allowance,
            argmin_gap=scanned.argmin_gap,
            beyond_grid=False,
        )
    if not closed.feasible and not scanned.feasible:
        return VerificationVerdict(
            agree=True,
            status="agree-infeasible",
            closed_cost=math.inf,
            oracle_cost=math.inf,
            cost_gap=0.0,
            allowance=allowance,
            argmin_gap=None,
            beyond_grid=False,
        )
    if closed.feasible:
        # empty scan: legitimate iff the optimal design exceeds the square
        top = float(g.axis()[-1])
        reach = 2.0 * top if k is Topology.PARALLEL else top
        beyond = closed.x_star > reach
        return VerificationVerdict(
            agree=beyond,
            status="agree-truncated" if beyond else "feasibility-mismatch",
            closed_cost=closed.total_cost,
            oracle_cost=math.inf,
            cost_gap=math.inf,
            allowance=allowance,
            argmin_gap=None,
            beyond_grid=beyond,
        )
    return VerificationVerdict(
        agree=False,
        status="feasibility-mismatch",
        closed_cost=math.inf,
        oracle_cost=scanned.best_cost,
        cost_gap=math.inf,
        allowance=allowance,
        argmin_gap=scanned.argmin_gap,
        beyond_grid=False,
    )
