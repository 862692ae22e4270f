"""Two-spring elastoplastic network design toolkit.

Closed-form minimal-cost designs under combined force/resistance performance
constraints for both wirings of a two-spring network, weight-space region
classification with the winning topology per weight pair, and an independent
brute-force grid oracle for cross-validation.  The ``twospring`` console
script exposes all of it on the command line.
"""

from .model import (
    SpringPair,
    Topology,
    Weights,
    cost,
    force,
    multiperf,
    resistance,
)
from .oracle import (
    GridSpec,
    OracleResult,
    VerificationVerdict,
    oracle_solve,
    verify_reduction,
)
from .regions import (
    RegionLabel,
    RegionReport,
    Winner,
    b2_boundary,
    classify,
    winner,
)
from .solver import (
    ActiveConstraint,
    DesignSolution,
    InfeasibleError,
    ReducedSolution,
    expand,
    roots,
    solve_reduced,
)

__version__ = "0.1.0"

__all__ = [
    "SpringPair",
    "Topology",
    "Weights",
    "force",
    "resistance",
    "multiperf",
    "cost",
    "ActiveConstraint",
    "InfeasibleError",
    "ReducedSolution",
    "DesignSolution",
    "solve_reduced",
    "expand",
    "roots",
    "RegionLabel",
    "Winner",
    "RegionReport",
    "classify",
    "winner",
    "b2_boundary",
    "GridSpec",
    "OracleResult",
    "VerificationVerdict",
    "oracle_solve",
    "verify_reduction",
    "__version__",
]
