"""Physical quantities of a two-spring elastoplastic network.

Two springs with elastic limits ``(c1, c2)`` are wired either in parallel or
in series.  This module evaluates, for either wiring, the maximal force the
network withstands before deforming plastically, its electrical resistance,
the weighted force/resistance performance, and the fabrication cost.

All operations are pure functions of immutable values.  Resistance uses
extended arithmetic (a zero divisor yields ``+inf``) so every constraint can
be evaluated on the whole closed quadrant ``c1, c2 >= 0`` without special
cases.  The scalar functions operate on :class:`SpringPair`; the ``*_grid``
twins apply the same formulas to numpy arrays so that exhaustive scans stay
vectorized while reading off a single set of definitions.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Topology",
    "SpringPair",
    "Weights",
    "force",
    "resistance",
    "multiperf",
    "cost",
    "force_grid",
    "resistance_grid",
    "multiperf_grid",
]


class Topology(enum.Enum):
    """Wiring of the two springs; the numeric tag is the reduction factor k."""

    PARALLEL = 1
    SERIAL = 2

    @property
    def k(self) -> int:
        return self.value


@dataclass(frozen=True)
class SpringPair:
    """Elastic limits of the two springs, the design variables of the network."""

    c1: float
    c2: float

    def __post_init__(self) -> None:
        if not (self.c1 >= 0.0) or not (self.c2 >= 0.0):
            raise ValueError(
                f"elastic limits must be nonnegative, got ({self.c1!r}, {self.c2!r})"
            )


@dataclass(frozen=True)
class Weights:
    """Nonnegative weights: ``a`` on force capacity, ``b`` on resistance."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a >= 0.0) or not (self.b >= 0.0):
            raise ValueError(f"weights must be nonnegative, got ({self.a!r}, {self.b!r})")


def force(k: Topology, s: SpringPair) -> float:
    """Maximal force before plastic flow: the sum of limits in parallel, the
    weaker limit in series (one yielded spring caps the serial chain)."""
    if k is Topology.PARALLEL:
        return s.c1 + s.c2
    return min(s.c1, s.c2)


def resistance(k: Topology, s: SpringPair) -> float:
    """Electrical resistance of the network, with per-spring resistance 1/c."""
    if k is Topology.PARALLEL:
        total = s.c1 + s.c2
        return 1.0 / total if total > 0.0 else math.inf
    if s.c1 > 0.0 and s.c2 > 0.0:
        return 1.0 / s.c1 + 1.0 / s.c2
    return math.inf


def multiperf(w: Weights, k: Topology, s: SpringPair) -> float:
    """Weighted performance ``a*force + b*resistance``.

    Follows the convention ``0 * inf == 0``: a zero resistance weight
    silences an infinite resistance, matching the limit ``b -> 0+``.
    """
    value = w.a * force(k, s)
    if w.b > 0.0:
        value += w.b * resistance(k, s)
    return value


def cost(s: SpringPair) -> float:
    """Fabrication cost ``c1 + c2``, independent of the wiring."""
    return s.c1 + s.c2


def force_grid(k: Topology, c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """Vectorized twin of :func:`force` over coordinate arrays."""
    if k is Topology.PARALLEL:
        return c1 + c2
    return np.minimum(c1, c2)


def resistance_grid(k: Topology, c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """Vectorized twin of :func:`resistance`; 1/0 maps to ``inf``."""
    with np.errstate(divide="ignore"):
        if k is Topology.PARALLEL:
            return 1.0 / (c1 + c2)
        return 1.0 / c1 + 1.0 / c2


def multiperf_grid(w: Weights, k: Topology, c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """Vectorized twin of :func:`multiperf`, same ``0 * inf == 0`` convention."""
    perf = w.a * force_grid(k, c1, c2)
    if w.b > 0.0:
        perf = perf + w.b * resistance_grid(k, c1, c2)
    return perf
