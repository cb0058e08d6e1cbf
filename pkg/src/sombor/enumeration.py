"""Exhaustive generation of pairwise non-isomorphic free trees.

Canonical construction via centroid decomposition: a free tree either
has a unique centroid vertex (every component of T - c has at most
floor((n-1)/2) vertices) or, for even n, a unique centroid edge whose
removal splits it into two halves of exactly n/2 vertices.  Rooted
subtrees ("branches") are generated as canonical shapes -- nested
tuples with children sorted in decreasing order -- and assembled into
trees as multisets of branches below the centroid, or unordered pairs
of half-size branches across the centroid edge.  Each isomorphism
class is produced exactly once, with no post-hoc isomorphism filtering.

A maximum-degree cap is applied while generating (branch nodes get at
most cap-1 children, the centroid at most cap), so restricting to
molecular trees (degree <= 4) never touches the larger unrestricted
space.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .graphs import Graph
from .indices import so2

DEFAULT_MAX_N = 18

# a Shape is a tuple of child Shapes, sorted in decreasing tuple order;
# () is a single vertex
Shape = tuple


def enumeration_cap() -> int:
    """Largest n the enumerators accept; SOMBOR_MAX_N overrides the default."""
    raw = os.environ.get("SOMBOR_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"SOMBOR_MAX_N must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("SOMBOR_MAX_N must be positive")
    return cap


@lru_cache(maxsize=None)
def _branches(size: int, max_children: Optional[int]) -> tuple[Shape, ...]:
    """All canonical branch shapes with `size` nodes in which every node
    has at most `max_children` children (None = unbounded)."""
    if size == 1:
        return ((),)
    cap = size - 1 if max_children is None else min(max_children, size - 1)
    return tuple(parts for parts in _part_multisets(size - 1, size - 1, cap,
                                                    max_children, None))


def _part_multisets(total: int, max_size: int, max_parts: int,
                    max_children: Optional[int],
                    bound: Optional[Shape]) -> Iterator[tuple[Shape, ...]]:
    """Multisets of branches with the given total size, emitted as tuples
    sorted decreasingly by (size, shape); `bound` caps the first element."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    start = min(max_size, total)
    for s in range(start, 0, -1):
        for shape in _branches(s, max_children):
            if bound is not None and s == max_size and shape > bound:
                continue
            for rest in _part_multisets(total - s, s, max_parts - 1,
                                        max_children, shape):
                yield (shape,) + rest


def _shape_to_edges(shape: Shape, root: int, counter: list[int],
                    edges: list[tuple[int, int]]) -> None:
    for child in shape:
        counter[0] += 1
        cid = counter[0]
        edges.append((root, cid))
        _shape_to_edges(child, cid, counter, edges)


def _assemble(n: int, parts: tuple[Shape, ...],
              second_root: Optional[Shape] = None) -> Graph:
    edges: list[tuple[int, int]] = []
    counter = [0]
    _shape_to_edges(parts, 0, counter, edges)
    if second_root is not None:
        counter[0] += 1
        other = counter[0]
        edges.append((0, other))
        _shape_to_edges(second_root, other, counter, edges)
    return Graph.from_edges(n, edges)


def _free_trees(n: int, max_degree: Optional[int]) -> Iterator[Graph]:
    if n == 1:
        yield Graph(1, ((),))
        return
    root_cap = n - 1 if max_degree is None else max_degree
    child_cap = None if max_degree is None else max_degree - 1
    # unique-centroid trees: all branches strictly smaller than n/2
    for parts in _part_multisets(n - 1, (n - 1) // 2, root_cap, child_cap, None):
        yield _assemble(n, parts)
    # centroid-edge trees: unordered pairs of half-size branches
    if n % 2 == 0:
        halves = _branches(n // 2, child_cap)
        for i, a in enumerate(halves):
            for b in halves[i:]:
                yield _assemble(n, a, second_root=b)


def _check_n(n: int, max_n: Optional[int]) -> None:
    cap = enumeration_cap() if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")


def enumerate_trees(n: int, *, max_n: Optional[int] = None) -> Iterator[Graph]:
    """Stream every free tree on n vertices, one per isomorphism class."""
    _check_n(n, max_n)
    return _free_trees(n, None)


def enumerate_molecular_trees(n: int, *,
                              max_n: Optional[int] = None) -> Iterator[Graph]:
    """Stream every tree on n vertices with maximum degree at most four,
    one per isomorphism class."""
    _check_n(n, max_n)
    return _free_trees(n, 4)


def _extreme_so2(n: int, molecular: bool, max_n: Optional[int],
                 better: int) -> tuple[Fraction, list[Graph]]:
    stream = (enumerate_molecular_trees(n, max_n=max_n) if molecular
              else enumerate_trees(n, max_n=max_n))
    best: Optional[Fraction] = None
    attaining: list[Graph] = []
    for g in stream:
        value = so2(g).exact
        assert value is not None
        if best is None or (value > best if better > 0 else value < best):
            best = value
            attaining = [g]
        elif value == best:
            attaining.append(g)
    assert best is not None
    return best, attaining


def argmax_so2(n: int, *, molecular: bool = False,
               max_n: Optional[int] = None) -> tuple[Fraction, list[Graph]]:
    """Exact maximum of so2 over the tree class, with every attaining tree
    (rational ties are exact, so the list is the full argmax set)."""
    return _extreme_so2(n, molecular, max_n, +1)


def argmin_so2(n: int, *, molecular: bool = False,
               max_n: Optional[int] = None) -> tuple[Fraction, list[Graph]]:
    """Exact minimum of so2 over the tree class, with every attaining tree."""
    return _extreme_so2(n, molecular, max_n, -1)
