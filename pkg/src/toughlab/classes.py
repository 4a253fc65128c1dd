"""Recognizers for the graph classes the classification theorems quantify
over, plus the structural decompositions their proofs use.

Chordality is decided by maximum-cardinality search with an explicit
perfect-elimination-ordering verification; a negative verdict carries an
induced cycle of length >= 4 as certificate.  Induced-subgraph search is a
plain ordered backtracking with adjacency/degree pruning -- fine at desk
scale, which is all this package promises.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .connectivity import (
    _component_count,
    _component_masks,
    distances,
    is_connected,
    max_bipartite_matching,
)
from .families import Family, FamilySpec, make_named
from .graphs import Graph, VertexSet, _bits, complement


# -- chordality ----------------------------------------------------------------


@dataclass(frozen=True)
class ChordalityReport:
    chordal: bool
    #: a perfect elimination ordering when chordal
    elimination_order: tuple[int, ...] | None
    #: an induced cycle of length >= 4 when not
    hole: VertexSet | None


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search visit order (ties by least vertex)."""
    weights = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        best = -1
        for v in range(g.n):
            if not visited >> v & 1 and (best == -1 or weights[v] > weights[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in _bits(g.adj[best] & ~visited):
            weights[u] += 1
    return order


def _is_peo(g: Graph, order: list[int]) -> bool:
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    for i, v in enumerate(order):
        later = 0
        for u in _bits(g.adj[v]):
            if position[u] > i:
                later |= 1 << u
        for u in _bits(later):
            if later & ~g.adj[u] & ~(1 << u):
                return False
    return True


def recognize_chordal(g: Graph) -> ChordalityReport:
    order = list(reversed(_mcs_order(g)))
    if _is_peo(g, order):
        return ChordalityReport(True, tuple(order), None)
    hole = find_induced_cycle(g, 4)
    assert hole is not None  # non-chordal graphs contain a hole
    return ChordalityReport(False, None, hole)


def is_chordal(g: Graph) -> bool:
    return _is_peo(g, list(reversed(_mcs_order(g))))


def is_co_chordal(g: Graph) -> bool:
    return is_chordal(complement(g))


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose neighbourhood induces a clique."""
    bits = 0
    for v in range(g.n):
        nv = g.adj[v]
        if all(not nv & ~g.adj[u] & ~(1 << u) for u in _bits(nv)):
            bits |= 1 << v
    return VertexSet(bits, g.n)


# -- forests, split graphs -------------------------------------------------------


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.n - _component_count(g.adj, g.full_mask)


def is_complement_of_forest(g: Graph) -> bool:
    return is_forest(complement(g))


def is_split(g: Graph) -> bool:
    """Degree-sequence criterion: vertices split into a clique and an
    independent set iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i where m is
    the largest i with d_i >= i-1 (degrees descending)."""
    if g.n == 0:
        return True
    d = sorted(g.degrees(), reverse=True)
    m = max(i for i in range(1, g.n + 1) if d[i - 1] >= i - 1)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


# -- induced-subgraph search ------------------------------------------------------


def contains_induced(g: Graph, pattern: Graph) -> VertexSet | None:
    """A vertex set of g inducing ``pattern``, or None.

    Deterministic: pattern vertices are matched in a fixed
    connectivity-then-degree order, g candidates ascending.
    """
    k = pattern.n
    if k > g.n:
        return None
    if k == 0:
        return VertexSet(0, g.n)
    pdeg = pattern.degrees()
    order: list[int] = []
    chosen = 0
    for _ in range(k):
        best, best_key = -1, None
        for v in range(k):
            if chosen >> v & 1:
                continue
            key = ((pattern.adj[v] & chosen).bit_count(), pdeg[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        chosen |= 1 << best
    gdeg = g.degrees()
    image = [0] * k
    used = 0

    def dfs(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        pv = order[i]
        cand = g.full_mask & ~used
        for j in range(i):
            if pattern.has_edge(pv, order[j]):
                cand &= g.adj[image[j]]
            else:
                cand &= ~g.adj[image[j]]
        for w in _bits(cand):
            if gdeg[w] < pdeg[pv]:
                continue
            image[i] = w
            used |= 1 << w
            if dfs(i + 1):
                return True
            used ^= 1 << w
        return False

    if dfs(0):
        return VertexSet.from_vertices(image, g.n)
    return None


@lru_cache(maxsize=None)
def _pattern(name: str, size: int = 0) -> Graph:
    if name == "P4":
        return make_named(FamilySpec(Family.PATH, (4,)))
    if name == "net":
        return make_named(FamilySpec(Family.NET))
    if name == "conet":
        return make_named(FamilySpec(Family.CO_NET))
    if name == "cycle":
        return make_named(FamilySpec(Family.CYCLE, (size,)))
    raise ValueError(name)


def find_induced_cycle(g: Graph, min_length: int) -> VertexSet | None:
    """Shortest-first search for an induced cycle of length >= min_length."""
    if min_length < 3:
        raise ValueError("induced cycles have length >= 3")
    for k in range(min_length, g.n + 1):
        hit = contains_induced(g, _pattern("cycle", k))
        if hit is not None:
            return hit
    return None


def is_p4_free(g: Graph) -> bool:
    return contains_induced(g, _pattern("P4")) is None


def is_net_free(g: Graph) -> bool:
    return contains_induced(g, _pattern("net")) is None


def is_co_net_free(g: Graph) -> bool:
    return contains_induced(g, _pattern("conet")) is None


def is_weakly_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 5 in g or its complement."""
    return (
        find_induced_cycle(g, 5) is None
        and find_induced_cycle(complement(g), 5) is None
    )


def is_hereditary_nbhd_helly(g: Graph) -> bool:
    """Closed neighbourhoods have the Helly property hereditarily: no induced
    C_4, C_5, C_6 and no induced 3-sun (complement of the net)."""
    for k in (4, 5, 6):
        if contains_induced(g, _pattern("cycle", k)) is not None:
            return False
    return contains_induced(g, _pattern("conet")) is None


# -- multipartite structure --------------------------------------------------------


@dataclass(frozen=True)
class MultipartiteParts:
    """Parts of a complete multipartite graph, ascending by (size, least vertex)."""

    parts: tuple[VertexSet, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def complete_multipartite_parts(g: Graph) -> MultipartiteParts | None:
    """The unique multipartition when g is complete multipartite, else None."""
    comp_masks = _component_masks(complement(g).adj, g.full_mask)
    for mask in comp_masks:
        for v in _bits(mask):
            if g.adj[v] & mask:  # an edge inside a would-be part
                return None
    comp_masks.sort(key=lambda m: (m.bit_count(), m & -m))
    return MultipartiteParts(tuple(VertexSet(m, g.n) for m in comp_masks))


def is_complete_multipartite(g: Graph) -> bool:
    return complete_multipartite_parts(g) is not None


@dataclass(frozen=True)
class CographPartition:
    """Maximum partition with all cross edges present and every part a
    singleton or inducing a disconnected subgraph."""

    parts: tuple[VertexSet, ...]


def cograph_partition(g: Graph) -> CographPartition:
    """Partition a connected P4-free graph on >= 2 vertices by complement
    components.  Raises ValueError on disconnected or P4-containing input."""
    if g.n < 2 or not is_connected(g):
        raise ValueError("cograph partition needs a connected graph on >= 2 vertices")
    if not is_p4_free(g):
        raise ValueError("input contains an induced P_4")
    comp_masks = _component_masks(complement(g).adj, g.full_mask)
    for mask in comp_masks:
        # a connected cograph on >= 2 vertices has a disconnected complement,
        # so every non-singleton part induces a disconnected subgraph
        assert mask.bit_count() == 1 or _component_count(g.adj, mask) >= 2
    comp_masks.sort(key=lambda m: m & -m)
    return CographPartition(tuple(VertexSet(m, g.n) for m in comp_masks))


# -- simplicial-pair decomposition ---------------------------------------------------


@dataclass(frozen=True)
class SimplicialPairDecomposition:
    """For co-chordal g with finite co-diameter d >= 3: a pair (u, w) of
    complement-simplicial vertices at complement-distance d, their complement
    neighbourhoods U and W, the rest X, and the maximum matching size m of
    g[U, W].  Local connectivity between u and w equals |X| + m + 1."""

    u: int
    w: int
    U: VertexSet
    W: VertexSet
    X: VertexSet
    m: int


def simplicial_pair_decomposition(g: Graph) -> SimplicialPairDecomposition | None:
    """None when g is not co-chordal or its co-diameter is < 3 or infinite."""
    h = complement(g)
    if not is_chordal(h):
        return None
    table = distances(h)
    d = table.diameter()
    if math.isinf(d) or d < 3:
        return None
    simp = list(simplicial_vertices(h))
    pair = None
    for i, u in enumerate(simp):
        for w in simp[i + 1 :]:
            if table.distance(u, w) == d:
                pair = (u, w)
                break
        if pair:
            break
    assert pair is not None  # a chordal graph attains its diameter on simplicial vertices
    u, w = pair
    umask, wmask = h.adj[u], h.adj[w]
    xmask = g.full_mask & ~umask & ~wmask & ~(1 << u) & ~(1 << w)
    m = max_bipartite_matching(g, VertexSet(umask, g.n), VertexSet(wmask, g.n)).size
    return SimplicialPairDecomposition(
        u, w, VertexSet(umask, g.n), VertexSet(wmask, g.n), VertexSet(xmask, g.n), m
    )


# -- recognizer registry ----------------------------------------------------------


#: name -> predicate, in the fixed column order of the CLI classify vector
CLASS_PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "chordal": is_chordal,
    "co-chordal": is_co_chordal,
    "weakly-chordal": is_weakly_chordal,
    "p4-free": is_p4_free,
    "complete-multipartite": is_complete_multipartite,
    "net-free": is_net_free,
    "co-net-free": is_co_net_free,
    "forest": is_forest,
    "co-forest": is_complement_of_forest,
    "split": is_split,
    "hcn-helly": is_hereditary_nbhd_helly,
}
