"""Exact graph toughness.

toughness(g) = min over separators S of |S| / c(G - S), as an exact
Fraction; math.inf for complete graphs (the minimum over an empty separator
set), and Fraction(0) exactly when g is disconnected (the empty set is then
a separator).  Values are never floats except the inf sentinel.

The scan enumerates vertex subsets in ascending (size, bitmask) order.  Once
a size s satisfies s/(n-s) >= best, no larger subset can improve the ratio
(a deleted s-set leaves at most n-s components), so the sweep stops early.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .connectivity import _component_count
from .graphs import Graph, VertexSet

Toughness = Union[Fraction, float]

#: Toughness of complete graphs.  The only float the module ever produces.
INFINITE_TOUGHNESS: float = math.inf


def format_toughness(t: Toughness) -> str:
    """Render exactly: 'p/q', an integer string, or 'inf'."""
    if t == INFINITE_TOUGHNESS:
        return "inf"
    f = Fraction(t)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _masks_of_popcount(n: int, k: int) -> Iterator[int]:
    """All n-bit masks with k set bits, in ascending numeric order."""
    if k == 0:
        yield 0
        return
    if k > n:
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        # Gosper's hack: next larger mask with the same popcount
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def iterate_separators(g: Graph) -> Iterator[VertexSet]:
    """All vertex sets S with c(G - S) >= 2, ascending by (size, bitmask).

    Yields the empty set first when g is disconnected.  Complete graphs
    (including K_0 and K_1) have no separators.
    """
    n, adj, full = g.n, g.adj, g.full_mask
    for size in range(0, max(n - 1, 0)):
        for mask in _masks_of_popcount(n, size):
            if _component_count(adj, full & ~mask) >= 2:
                yield VertexSet(mask, n)


def toughness(g: Graph) -> Toughness:
    if g.is_complete():
        return INFINITE_TOUGHNESS
    n, adj, full = g.n, g.adj, g.full_mask
    if _component_count(adj, full) >= 2:
        return Fraction(0)
    best: Fraction | None = None
    for size in range(1, n - 1):
        if best is not None and Fraction(size, n - size) >= best:
            break
        for mask in _masks_of_popcount(n, size):
            c = _component_count(adj, full & ~mask)
            if c >= 2:
                ratio = Fraction(size, c)
                if best is None or ratio < best:
                    best = ratio
    assert best is not None  # non-complete connected graphs have a separator
    return best


@dataclass(frozen=True)
class ToughWitness:
    """A separator attaining the toughness minimum."""

    separator: VertexSet
    components_after: int
    ratio: Fraction


def tough_separators(g: Graph) -> list[ToughWitness]:
    """All separators S with |S|/c(G-S) == toughness(g), ascending (size, bitmask)."""
    if g.is_complete():
        raise ValueError("complete graphs have no separators")
    t = toughness(g)
    n, adj, full = g.n, g.adj, g.full_mask
    out = []
    for size in range(0, max(n - 1, 0)):
        if Fraction(size, n - size) > t:
            break
        for mask in _masks_of_popcount(n, size):
            c = _component_count(adj, full & ~mask)
            if c >= 2 and Fraction(size, c) == t:
                out.append(ToughWitness(VertexSet(mask, n), c, Fraction(size, c)))
    return out


def is_t_tough(g: Graph, t: Toughness) -> bool:
    """True iff t <= toughness(g).  Complete graphs are t-tough for every t."""
    return t <= toughness(g)


def toughness_complete_multipartite(parts: Sequence[int]) -> Toughness:
    """Closed form for complete multipartite graphs with ascending parts.

    inf when every part is a singleton (the graph is complete); 0 when there
    is a single part of size > 1 (edgeless, disconnected); otherwise
    n/n_k - 1 where n_k is the largest part.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("at least one part required")
    if any(p < 1 for p in parts):
        raise ValueError("parts must be >= 1")
    if list(parts) != sorted(parts):
        raise ValueError("parts must be ascending")
    n = sum(parts)
    nk = parts[-1]
    if nk == 1:
        return INFINITE_TOUGHNESS
    if len(parts) == 1:
        return Fraction(0)
    return Fraction(n, nk) - 1


def toughness_tree(g: Graph) -> Fraction:
    """1/max-degree, valid for trees on >= 2 vertices with max degree >= 2."""
    from .connectivity import is_connected

    if g.n < 2 or not is_connected(g) or g.edge_count != g.n - 1:
        raise ValueError("input is not a tree on >= 2 vertices")
    delta = max(g.degrees())
    if delta < 2:
        raise ValueError("K_2 is complete; the tree formula needs max degree >= 2")
    return Fraction(1, delta)
