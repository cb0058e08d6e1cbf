"""Vertex-degree-based topological indices.

The second Sombor index is the headline quantity:

    so2(G) = sum over edges uv of |d(u)^2 - d(v)^2| / (d(u)^2 + d(v)^2)

It is rational for every graph, so it is computed in exact arithmetic
(``fractions.Fraction``); ties between distinct trees are then exact
equalities instead of float coincidences.  The comparison indices used
in the octane correlation study are provided through a generic
edge-kernel mechanism; kernels with rational values (M1, M2, F, SDD)
also carry exact results, the irrational ones (SO, R, SCI) are floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .graphs import Graph, EdgeTypeProfile, degrees


@dataclass(frozen=True)
class IndexValue:
    """An index value: always a float, plus the exact rational when the
    defining kernel is rational-valued."""

    approx: float
    exact: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if self.exact is not None and self.approx != float(self.exact):
            raise ValueError("approx must be the double rounding of exact")


@dataclass(frozen=True)
class VdbKernel:
    """A symmetric edge kernel F(x, y) on positive integer degrees.

    ``exact`` is present only for rational-valued kernels; ``approx``
    is always usable.
    """

    name: str
    approx: Callable[[int, int], float]
    exact: Optional[Callable[[int, int], Fraction]] = None


def _so2_term(x: int, y: int) -> Fraction:
    return Fraction(abs(x * x - y * y), x * x + y * y)


KERNELS: dict[str, VdbKernel] = {
    "so2": VdbKernel("so2", lambda x, y: float(_so2_term(x, y)), _so2_term),
    "so": VdbKernel("so", lambda x, y: math.sqrt(x * x + y * y)),
    "m1": VdbKernel("m1", lambda x, y: float(x + y),
                    lambda x, y: Fraction(x + y)),
    "m2": VdbKernel("m2", lambda x, y: float(x * y),
                    lambda x, y: Fraction(x * y)),
    "f": VdbKernel("f", lambda x, y: float(x * x + y * y),
                   lambda x, y: Fraction(x * x + y * y)),
    "r": VdbKernel("r", lambda x, y: 1.0 / math.sqrt(x * y)),
    "sci": VdbKernel("sci", lambda x, y: 1.0 / math.sqrt(x + y)),
    "sdd": VdbKernel("sdd", lambda x, y: x / y + y / x,
                     lambda x, y: Fraction(x * x + y * y, x * y)),
}


def so2(g: Graph) -> IndexValue:
    """Second Sombor index, exact.  Zero for edgeless graphs."""
    deg = degrees(g)
    total = Fraction(0)
    for u, v in g.edges():
        total += _so2_term(deg[u], deg[v])
    return IndexValue(approx=float(total), exact=total)


def so2_from_profile(profile: EdgeTypeProfile) -> Fraction:
    """Second Sombor index evaluated from edge-type counts alone:
    sum of m_ij * |i^2 - j^2| / (i^2 + j^2)."""
    total = Fraction(0)
    for (i, j), count in profile.m.items():
        if count and i != j:
            total += count * _so2_term(i, j)
    return total


def vdb_index(g: Graph, kernel: VdbKernel) -> IndexValue:
    """Generic vertex-degree-based index: sum of the kernel over edges."""
    deg = degrees(g)
    if kernel.exact is not None:
        total = Fraction(0)
        for u, v in g.edges():
            total += kernel.exact(deg[u], deg[v])
        return IndexValue(approx=float(total), exact=total)
    acc = 0.0
    for u, v in g.edges():
        acc += kernel.approx(deg[u], deg[v])
    return IndexValue(approx=acc)


def neighborhood_zagreb(g: Graph) -> IndexValue:
    """Neighborhood Zagreb index: sum over vertices of the squared sum
    of neighbor degrees."""
    deg = degrees(g)
    total = 0
    for v in range(g.n):
        s = sum(deg[u] for u in g.adjacency[v])
        total += s * s
    return IndexValue(approx=float(total), exact=Fraction(total))


def so2_upper_bound(m: int, min_degree: int, max_degree: int) -> Fraction:
    """Degree-ratio upper bound m * (D^2 - d^2) / (D^2 + d^2) on so2 for a
    graph with m edges, minimum degree d >= 1 and maximum degree D.

    The bound is 0 exactly when d == D, matching the fact that so2
    vanishes precisely on graphs whose components are all regular.
    """
    if min_degree < 1:
        raise ValueError("minimum degree must be at least 1")
    if max_degree < min_degree:
        raise ValueError("maximum degree below minimum degree")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    d2 = min_degree * min_degree
    g2 = max_degree * max_degree
    return Fraction(m * (g2 - d2), g2 + d2)
