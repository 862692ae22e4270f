"""Tests for the closed-form reduced solver.

Golden values were derived from the quadratic-root expression and confirmed
against the independent 1-D scan oracle below before being frozen.
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from twospring.model import Topology, Weights
from twospring.solver import (
    ActiveConstraint,
    InfeasibleError,
    ReducedSolution,
    expand,
    roots,
    solve_reduced,
)

P = Topology.PARALLEL
S = Topology.SERIAL

# frozen after cross-checking with scan_min_feasible at step 1e-6
X_STAR_PARALLEL_02_02 = 4.7912878474779195
X_STAR_SERIAL_02_02 = 4.56155281280883
COST_SERIAL_02_02 = 9.12310562561766


def scan_min_feasible(a, b, k, x_max=20.0, step=1e-5):
    """Independent oracle: smallest x in [0, x_max] meeting both inequalities."""
    xs = np.arange(0.0, x_max + step / 2, step)
    kb = k.k * b
    if kb > 0.0:
        perf = a * xs + np.divide(kb, xs, out=np.full_like(xs, np.inf), where=xs > 0)
    else:
        perf = a * xs
    idx = np.nonzero((xs >= 1.0) & (perf >= 1.0))[0]
    return None if idx.size == 0 else float(xs[idx[0]])


class TestSolveReduced:
    def test_boundary_of_performance_branch(self):
        # a + b - 1 == 0: the strength bound already meets the performance constraint
        sol = solve_reduced(Weights(0.5, 0.5), P)
        assert sol.feasible
        assert sol.x_star == 1.0
        assert sol.total_cost == 1.0
        assert sol.active_constraint is ActiveConstraint.STRENGTH_BOUND

    def test_parallel_root_branch(self):
        sol = solve_reduced(Weights(0.2, 0.2), P)
        assert sol.feasible
        assert sol.active_constraint is ActiveConstraint.PERFORMANCE_ROOT
        assert sol.x_star == pytest.approx(X_STAR_PARALLEL_02_02, abs=1e-12)
        assert sol.total_cost == pytest.approx(4.791288, abs=1e-6)

    def test_serial_root_branch(self):
        sol = solve_reduced(Weights(0.2, 0.2), S)
        assert sol.x_star == pytest.approx(X_STAR_SERIAL_02_02, abs=1e-12)
        assert sol.total_cost == pytest.approx(9.123106, abs=1e-6)

    def test_zero_force_weight_infeasible(self):
        # constraints demand x <= k*b and x >= 1 simultaneously
        sol = solve_reduced(Weights(0.0, 0.3), P)
        assert not sol.feasible
        assert sol.x_star is None
        assert sol.total_cost == math.inf
        assert sol.active_constraint is None

    def test_zero_force_weight_feasible_when_resistance_strong(self):
        sol = solve_reduced(Weights(0.0, 0.7), S)
        assert sol.feasible
        assert sol.x_star == 1.0
        assert sol.total_cost == 2.0

    def test_strength_branch_cost_is_topology_tag(self):
        assert solve_reduced(Weights(1.0, 1.0), P).total_cost == 1.0
        assert solve_reduced(Weights(1.0, 1.0), S).total_cost == 2.0


class TestExpand:
    def test_parallel_equal_split(self):
        design = expand(ReducedSolution(True, 1.0, 1.0, ActiveConstraint.STRENGTH_BOUND), P)
        assert (design.c1_star, design.c2_star) == (0.5, 0.5)
        assert design.total_cost == 1.0
        assert design.topology is P

    def test_serial_duplicates_limit(self):
        design = expand(ReducedSolution(True, 1.0, 2.0, ActiveConstraint.STRENGTH_BOUND), S)
        assert (design.c1_star, design.c2_star) == (1.0, 1.0)
        assert design.total_cost == 2.0

    def test_serial_root_design(self):
        design = expand(solve_reduced(Weights(0.2, 0.2), S), S)
        assert design.c1_star == pytest.approx(X_STAR_SERIAL_02_02, abs=1e-12)
        assert design.c1_star == design.c2_star
        assert design.total_cost == pytest.approx(COST_SERIAL_02_02, abs=1e-12)

    def test_infeasible_rejected(self):
        with pytest.raises(InfeasibleError):
            expand(solve_reduced(Weights(0.0, 0.3), P), P)


class TestRoots:
    def test_values_and_vieta(self):
        x1, x2 = roots(Weights(0.2, 0.2), P)
        assert x1 == pytest.approx(0.20871215252208003, abs=1e-12)
        assert x2 == pytest.approx(X_STAR_PARALLEL_02_02, abs=1e-12)
        assert x1 * x2 == pytest.approx(0.2 / 0.2, rel=1e-12)  # k*b/a
        assert x1 + x2 == pytest.approx(1.0 / 0.2, rel=1e-12)

    def test_double_root(self):
        assert roots(Weights(0.5, 0.5), P) == (1.0, 1.0)

    def test_negative_discriminant(self):
        assert roots(Weights(0.5, 0.6), P) is None

    def test_zero_force_weight_rejected(self):
        with pytest.raises(ValueError):
            roots(Weights(0.0, 0.5), P)

    def test_ordering(self):
        x1, x2 = roots(Weights(0.1, 0.3), S)
        assert x1 <= x2


@given(
    a=st.floats(min_value=1e-6, max_value=2.0),
    b=st.floats(min_value=0.0, max_value=2.0),
    k=st.sampled_from([P, S]),
)
def test_branch_condition_equivalence(a, b, k):
    """1 strictly between the roots (with a real discriminant) iff a + k*b < 1."""
    assume(abs(a + k.k * b - 1.0) > 1e-9)  # stay off the knife edge
    pair = roots(Weights(a, b), k)
    straddles = pair is not None and pair[0] < 1.0 < pair[1]
    assert straddles == (a + k.k * b - 1.0 < 0.0)


@given(
    a=st.floats(min_value=1e-6, max_value=3.0),
    b=st.floats(min_value=0.0, max_value=3.0),
    k=st.sampled_from([P, S]),
)
def test_feasible_solutions_satisfy_constraints(a, b, k):
    sol = solve_reduced(Weights(a, b), k)
    assert sol.feasible
    assert sol.x_star >= 1.0
    assert a * sol.x_star + k.k * b / sol.x_star >= 1.0 - 1e-12
    if sol.active_constraint is ActiveConstraint.PERFORMANCE_ROOT:
        assert sol.x_star > 1.0


@given(
    a=st.floats(min_value=1e-3, max_value=0.99),
    b=st.floats(min_value=0.0, max_value=0.99),
    k=st.sampled_from([P, S]),
)
def test_root_optimum_is_minimal(a, b, k):
    """Shrinking a root-branch optimum violates one of the two constraints."""
    sol = solve_reduced(Weights(a, b), k)
    if sol.active_constraint is not ActiveConstraint.PERFORMANCE_ROOT:
        return
    for eps in (1e-3, 1e-2, 1e-1):
        x = sol.x_star * (1.0 - eps)
        assert not (x >= 1.0 and a * x + k.k * b / x >= 1.0)


def test_scan_oracle_agreement():
    """The 1-D scan reproduces the closed form on a seeded sample."""
    rng = np.random.default_rng(2024)
    for a, b in rng.uniform(0.0, 1.5, size=(100, 2)):
        for k in (P, S):
            sol = solve_reduced(Weights(float(a), float(b)), k)
            scan = scan_min_feasible(float(a), float(b), k)
            if not sol.feasible:
                assert scan is None
            elif sol.x_star > 20.0:
                assert scan is None  # beyond the scan window
            else:
                assert scan == pytest.approx(sol.x_star, abs=2e-5)


def test_cost_monotone_in_weights():
    """More weight never makes the optimum costlier (infeasible counts as +inf)."""
    grid = np.linspace(0.0, 1.5, 31)
    for k in (P, S):
        costs = [[solve_reduced(Weights(float(a), float(b)), k).total_cost for a in grid] for b in grid]
        for row in costs:
            assert all(row[i + 1] <= row[i] + 1e-12 for i in range(len(row) - 1))
        for col in zip(*costs):
            assert all(col[i + 1] <= col[i] + 1e-12 for i in range(len(col) - 1))
